#pragma once

#include <map>
#include <string>

#include "torsionkit/bounded.hpp"
#include "torsionkit/combinat.hpp"
#include "torsionkit/lerch.hpp"

namespace torsionkit {

// Basis symbol of the coefficient ring of the torsion-form ledger:
// 1, log 2pi, zeta'(-1), zeta'(-3), ..., zeta(3)/pi^2, zeta(5)/pi^4, ...
// (log ell is tracked structurally, not as a symbol).
struct Sym {
    enum class Kind { Unit, Log2Pi, ZetaPrimeOdd, ZetaOddOverPi } kind = Kind::Unit;
    int idx = 0;  // odd n for zeta'(-n); k for zeta(2k+1)/pi^{2k}

    friend bool operator<(const Sym& a, const Sym& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.idx < b.idx;
    }
    friend bool operator==(const Sym& a, const Sym& b) {
        return a.kind == b.kind && a.idx == b.idx;
    }
    std::string str() const {
        switch (kind) {
            case Kind::Unit: return "1";
            case Kind::Log2Pi: return "log(2pi)";
            case Kind::ZetaPrimeOdd: return "zeta'(-" + std::to_string(idx) + ")";
            case Kind::ZetaOddOverPi:
                return "zeta(" + std::to_string(2 * idx + 1) + ")/pi^" + std::to_string(2 * idx);
        }
        return "?";
    }
};

// Rational linear combination of the basis symbols.
class SymbolicCoeff {
public:
    SymbolicCoeff() = default;
    static SymbolicCoeff rational(const Rational& r) {
        SymbolicCoeff c;
        c.addc({}, r);
        return c;
    }
    static SymbolicCoeff symbol(Sym s, const Rational& r) {
        SymbolicCoeff c;
        c.addc(s, r);
        return c;
    }
    // zeta'(-n) as a symbolic value (closed forms for n = 0 and n even)
    static SymbolicCoeff zeta_prime_neg(int n) {
        if (n == 0) return symbol({Sym::Kind::Log2Pi, 0}, Rational(-1, 2));
        if (n % 2 == 1) return symbol({Sym::Kind::ZetaPrimeOdd, n}, Rational(1));
        // zeta'(-2k) = (-1)^k (2k)!/(2 (2 pi)^{2k}) zeta(2k+1)
        int k = n / 2;
        Rational c = Rational(combinat::factorial(n)) / pow2q(n + 1);
        if (k % 2 == 1) c = -c;
        return symbol({Sym::Kind::ZetaOddOverPi, k}, c);
    }

    void addc(const Sym& s, const Rational& r) {
        if (r.is_zero()) return;
        auto& slot = c_[s];
        slot += r;
        if (slot.is_zero()) c_.erase(s);
    }
    const std::map<Sym, Rational>& parts() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const {
        return c_.empty() || (c_.size() == 1 && c_.begin()->first.kind == Sym::Kind::Unit);
    }
    Rational rational_part() const {
        auto it = c_.find({});
        return it == c_.end() ? Rational(0) : it->second;
    }

    SymbolicCoeff& operator+=(const SymbolicCoeff& o) {
        for (const auto& [s, r] : o.c_) addc(s, r);
        return *this;
    }
    friend SymbolicCoeff operator+(SymbolicCoeff a, const SymbolicCoeff& b) { return a += b; }
    SymbolicCoeff operator-() const {
        SymbolicCoeff r;
        for (const auto& [s, c] : c_) r.addc(s, -c);
        return r;
    }
    friend SymbolicCoeff operator-(SymbolicCoeff a, const SymbolicCoeff& b) {
        return a += -b;
    }
    SymbolicCoeff scaled(const Rational& r) const {
        SymbolicCoeff out;
        for (const auto& [s, c] : c_) out.addc(s, c * r);
        return out;
    }
    friend bool operator==(const SymbolicCoeff& a, const SymbolicCoeff& b) {
        return a.c_ == b.c_;
    }

    // substitute certified numeric values
    Bounded eval(double tol = 1e-12) const {
        Bounded out;
        for (const auto& [s, c] : c_) {
            double cd = c.to_double();
            switch (s.kind) {
                case Sym::Kind::Unit:
                    out += Bounded(cplx(cd, 0.0), std::fabs(cd) * 4e-16);
                    break;
                case Sym::Kind::Log2Pi:
                    out += Bounded(cplx(cd * lerch::kLog2Pi, 0.0), std::fabs(cd) * 1e-15);
                    break;
                case Sym::Kind::ZetaPrimeOdd: {
                    Bounded z = lerch::zeta_prime_neg(s.idx, tol);
                    out += Bounded(cd * z.value, std::fabs(cd) * z.bound);
                    break;
                }
                case Sym::Kind::ZetaOddOverPi: {
                    Bounded z = lerch::riemann_zeta(2 * s.idx + 1);
                    double pk = std::pow(std::numbers::pi, 2 * s.idx);
                    out += Bounded(cd * z.value / pk, std::fabs(cd / pk) * (z.bound + 1e-15));
                    break;
                }
            }
        }
        return out;
    }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : c_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            if (!(s == Sym{})) out += "*" + s.str();
        }
        return out;
    }

private:
    std::map<Sym, Rational> c_;
};

}  // namespace torsionkit
