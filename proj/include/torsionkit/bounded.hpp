#pragma once

#include <cmath>
#include <complex>

namespace torsionkit {

using cplx = std::complex<double>;

// A binary64 complex value carrying a certified absolute error bound.
// Propagation is coarse but rigorous: |a*b - fl(a*b)| is covered by the
// cross terms plus a 2^-50 * |result| rounding allowance per operation.
struct Bounded {
    cplx value{0.0, 0.0};
    double bound = 0.0;

    Bounded() = default;
    Bounded(cplx v, double b) : value(v), bound(b) {}
    explicit Bounded(double v) : value(v, 0.0), bound(0.0) {}

    static double rounding(const cplx& v) { return std::ldexp(std::abs(v), -50); }

    Bounded& operator+=(const Bounded& o) {
        value += o.value;
        bound += o.bound + rounding(value);
        return *this;
    }
    Bounded& operator-=(const Bounded& o) {
        value -= o.value;
        bound += o.bound + rounding(value);
        return *this;
    }
    friend Bounded operator+(Bounded a, const Bounded& b) { return a += b; }
    friend Bounded operator-(Bounded a, const Bounded& b) { return a -= b; }
    friend Bounded operator*(const Bounded& a, const Bounded& b) {
        cplx v = a.value * b.value;
        double e = std::abs(a.value) * b.bound + std::abs(b.value) * a.bound +
                   a.bound * b.bound + rounding(v);
        return {v, e};
    }
    friend Bounded operator*(const cplx& c, const Bounded& a) {
        cplx v = c * a.value;
        return {v, std::abs(c) * a.bound + rounding(v)};
    }
    friend Bounded operator*(double c, const Bounded& a) { return cplx(c, 0.0) * a; }

    Bounded conj() const { return {std::conj(value), bound}; }
    double re() const { return value.real(); }
    double im() const { return value.imag(); }
};

}  // namespace torsionkit
