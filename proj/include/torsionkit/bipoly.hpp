#pragma once

#include <map>
#include <utility>

#include "torsionkit/exppoly.hpp"
#include "torsionkit/rational.hpp"

namespace torsionkit {

// Exact bivariate polynomial over Rational in (k, ell); the carrier for
// character polynomials at the identity and for the symbolic identity
// suites (zero-tolerance checks).
class BiPoly {
public:
    BiPoly() = default;
    static BiPoly constant(Rational c) {
        BiPoly p;
        p.set(0, 0, std::move(c));
        return p;
    }
    // c0 + ck*k + cl*ell
    static BiPoly linear(const Rational& c0, const Rational& ck, const Rational& cl) {
        BiPoly p;
        p.set(0, 0, c0);
        p.set(1, 0, ck);
        p.set(0, 1, cl);
        return p;
    }

    void set(int dk, int dl, Rational c) {
        if (c.is_zero()) return;
        c_[{dk, dl}] = std::move(c);
    }
    void addc(int dk, int dl, const Rational& c) {
        if (c.is_zero()) return;
        auto& slot = c_[{dk, dl}];
        slot += c;
        if (slot.is_zero()) c_.erase({dk, dl});
    }
    const std::map<std::pair<int, int>, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly r = *this;
        for (const auto& [key, c] : o.c_) r.addc(key.first, key.second, c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [key, c] : c_) r.set(key.first, key.second, -c);
        return r;
    }
    BiPoly operator-(const BiPoly& o) const { return *this + (-o); }
    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (const auto& [ka, ca] : c_)
            for (const auto& [kb, cb] : o.c_)
                r.addc(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BiPoly scaled(const Rational& c) const {
        BiPoly r;
        for (const auto& [key, co] : c_) r.set(key.first, key.second, c * co);
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& k, const Rational& ell) const {
        Rational s(0);
        for (const auto& [key, c] : c_)
            s += c * k.pow_int(key.first) * ell.pow_int(key.second);
        return s;
    }

    int deg_k() const {
        int d = 0;
        for (const auto& [key, c] : c_) d = std::max(d, key.first);
        return d;
    }
    int deg_l() const {
        int d = 0;
        for (const auto& [key, c] : c_) d = std::max(d, key.second);
        return d;
    }

    // k -> e0 + ek*k + el*ell
    BiPoly subst_k_affine(const Rational& e0, const Rational& ek, const Rational& el) const {
        BiPoly lin = linear(e0, ek, el);
        BiPoly r;
        for (const auto& [key, c] : c_) {
            BiPoly term = constant(c);
            for (int i = 0; i < key.first; ++i) term = term * lin;
            BiPoly lpow;
            lpow.set(0, key.second, Rational(1));
            r = r + term * lpow;
        }
        return r;
    }

    // instantiate ell, leaving a univariate polynomial in k
    std::vector<Rational> at_ell(const Rational& ell) const {
        std::vector<Rational> out(deg_k() + 1, Rational(0));
        for (const auto& [key, c] : c_) out[key.first] += c * ell.pow_int(key.second);
        return out;
    }

    ExpPoly to_exppoly() const {
        ExpPoly p;
        for (const auto& [key, c] : c_)
            p.add({cplx(c.to_double(), 0.0), key.first, key.second, PiAngle::zero(),
                   PiAngle::zero()});
        return p;
    }

private:
    std::map<std::pair<int, int>, Rational> c_;
};

}  // namespace torsionkit
