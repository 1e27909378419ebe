#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "torsionkit/rational.hpp"

namespace torsionkit {

using cplx = std::complex<double>;

// An angle on the unit circle, normalized to (-pi, pi]. Angles constructed
// as rational multiples of pi keep an exact channel; the test "angle == 0"
// (dispatching e^{i*phi} == 1) is decided on that exact representation,
// never on floating-point proximity. A raw radian angle is exact only when
// it is literally 0.0.
class PiAngle {
public:
    PiAngle() : exact_(true), mult_(0), rad_(0.0) {}

    static PiAngle zero() { return PiAngle(); }

    // angle = m * pi, reduced mod 2 into (-1, 1].
    static PiAngle of_pi(Rational m) {
        PiAngle a;
        a.exact_ = true;
        // shift into (-1, 1]: subtract 2*ceil((m-1)/2)
        mpz_class cl;
        mpq_class shifted = (m.raw() - 1) / 2;
        mpz_cdiv_q(cl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
        a.mult_ = m - Rational(mpz_class(cl * 2));
        a.rad_ = a.mult_.to_double() * std::numbers::pi;
        return a;
    }

    static PiAngle radians(double r) {
        if (r == 0.0) return zero();
        PiAngle a;
        a.exact_ = false;
        a.mult_ = Rational(0);
        a.rad_ = std::remainder(r, 2.0 * std::numbers::pi);
        if (a.rad_ <= -std::numbers::pi) a.rad_ += 2.0 * std::numbers::pi;
        return a;
    }

    bool exact() const { return exact_; }
    const Rational& pi_mult() const { return mult_; }
    double rad() const { return rad_; }
    bool is_zero() const { return exact_ && mult_.is_zero(); }

    cplx unit() const {  // e^{i*angle}
        if (exact_) {
            // evaluate on the reduced representative; hit the lattice points exactly
            if (mult_.is_zero()) return {1.0, 0.0};
            if (mult_ == Rational(1)) return {-1.0, 0.0};
            if (mult_ == Rational(1, 2)) return {0.0, 1.0};
            if (mult_ == Rational(-1, 2)) return {0.0, -1.0};
        }
        return {std::cos(rad_), std::sin(rad_)};
    }

    // e^{i*angle*t} for integer t. Exact channel reduces mod 2 in rationals;
    // the float channel reduces rad*t mod 2*pi in double-double so the phase
    // error stays at the ulp level even for t ~ 1e6.
    cplx unit_pow(long t) const {
        if (exact_) return of_pi(mult_ * Rational(t)).unit();
        constexpr double kTpHi = 6.283185307179586232e+00;
        constexpr double kTpLo = 2.449293598294706414e-16;
        double hi = rad_ * static_cast<double>(t);
        double lo = std::fma(rad_, static_cast<double>(t), -hi);
        double n = std::nearbyint(hi / kTpHi);
        double r = std::fma(-n, kTpHi, hi);
        r = r + lo - n * kTpLo;
        return {std::cos(r), std::sin(r)};
    }

    PiAngle operator-() const {
        if (exact_) return of_pi(-mult_);
        return radians(-rad_);
    }
    PiAngle operator+(const PiAngle& o) const {
        if (exact_ && o.exact_) return of_pi(mult_ + o.mult_);
        return radians(rad_ + o.rad_);
    }
    // angle scaled by a rational factor (exact channel preserved)
    PiAngle scaled(const Rational& c) const {
        if (exact_) return of_pi(mult_ * c);
        return radians(rad_ * c.to_double());
    }

    // e^{i*angle*t} for real t (double-double reduction; exact channel when
    // t is a small integer).
    cplx unit_scaled(double t) const {
        if (is_zero()) return {1.0, 0.0};
        double ri = std::nearbyint(t);
        if (exact_ && t == ri && std::fabs(t) < 9.0e15)
            return unit_pow(static_cast<long>(ri));
        constexpr double kTpHi = 6.283185307179586232e+00;
        constexpr double kTpLo = 2.449293598294706414e-16;
        double hi = rad_ * t;
        double lo = std::fma(rad_, t, -hi);
        double n = std::nearbyint(hi / kTpHi);
        double r = std::fma(-n, kTpHi, hi);
        r = r + lo - n * kTpLo;
        return {std::cos(r), std::sin(r)};
    }

    // |angle| as a positive real; the value "phi_0" of the remainder bounds
    // (2*pi when the angle is zero).
    double abs_or_2pi() const {
        if (is_zero()) return 2.0 * std::numbers::pi;
        return std::fabs(rad_);
    }

    friend bool operator==(const PiAngle& a, const PiAngle& b) {
        if (a.exact_ != b.exact_) return false;
        return a.exact_ ? a.mult_ == b.mult_ : a.rad_ == b.rad_;
    }
    friend bool operator<(const PiAngle& a, const PiAngle& b) {
        if (a.exact_ != b.exact_) return a.exact_;  // exact angles sort first
        if (a.exact_) return a.mult_ < b.mult_;
        return a.rad_ < b.rad_;
    }

private:
    bool exact_;
    Rational mult_;  // valid iff exact_
    double rad_;
};

}  // namespace torsionkit
