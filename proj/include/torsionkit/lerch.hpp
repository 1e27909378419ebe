#pragma once

#include <utility>

#include "torsionkit/angle.hpp"
#include "torsionkit/bounded.hpp"
#include "torsionkit/combinat.hpp"

namespace torsionkit::lerch {

// Euler-Mascheroni constant and log sqrt(2 pi), 40 digits.
inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024310422;
inline constexpr double kLogSqrt2Pi = 0.9189385332046727417803297364056176398614;
inline constexpr double kLog2Pi = 1.8378770664093454835606594728112352797228;

// Phi(e^{i phi}, -m, a) for m >= 0, a >= 0.
// For phi != 0 this is the rational function obtained from Apostol's
// recursion Phi(z,0,a) = 1/(1-z), Phi(z,-m-1,a) = z^{1-a} d/dz (z^a Phi);
// the numerator polynomials (integer coefficients) are cached per (m, a).
// For phi == 0 it equals zeta(-m, a) = -B_{m+1}(a)/(m+1).
cplx phi_neg_int(const PiAngle& z, int m, int a);

// zeta(-m, a) = -B_{m+1}(a)/(m+1) as an exact rational.
Rational zeta_neg_int(int m, const Rational& a);

// Hurwitz zeta for real s > 1, a > 0, by Euler-Maclaurin with a certified
// remainder (first omitted correction term bounds the error since the
// integrand derivatives keep one sign).
Bounded hurwitz_zeta(double s, double a);
inline Bounded riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

// The explicit remainder constant
//   C(e^{i phi}, -N, a) = N!/(2 pi)^{N+1} (zeta(N+1, phi/2pi) + zeta(N+1, 1 - phi/2pi))
//                         + sum_{m=1}^{a-1} m^N,
// with the phi = 0 case using 2 zeta(N+1). Rounded up.
double remainder_bound_C(const PiAngle& z, int N, int a);

// Truncated large-v expansion of d/ds Phi(e^{i phi}, -n, v+a) through the
// 1/v^{N-1} term, with a certified remainder bound
//   C(z, -(N+n), a) / (v^N N C(N+n, n)).
Bounded sderiv_asymptotic(const PiAngle& z, int n, double v, int a, int N);

// d/ds Phi(e^{i phi}, -n, v0) for integer v0 >= 1 with certified bound
// <= tol. Chooses a working cutoff V >= v0 and an order N, evaluates the
// expansion at V+1 and subtracts the exact partial sum
// sum_{k=v0}^{V} z^{k-v0} k^n log k. Throws "tolerance unreachable" if no
// choice with V <= 1e6, N <= 30 certifies tol.
Bounded sderiv_reference(const PiAngle& z, int n, long v0, double tol);

// zeta'(-n) with certified bound <= tol (memoized).
Bounded zeta_prime_neg(int n, double tol);

// Digamma, |error| <= ~1e-13 for x > 0 (recurrence + asymptotic series).
double digamma(double x);

// For 0 < phi < 2 pi:
//   first  = (psi(phi/2pi) + psi(1 - phi/2pi)) / 4
//   second = Im(e^{i phi} d/ds Phi(e^{i phi}, 0, 1))  (the rotation term)
std::pair<double, double> digamma_and_rrot(const PiAngle& phi);

// e^{i phi} d/ds Phi(e^{i phi}, -n, 1): the building block of the log-sum
// operators. Memoized on (phi, n); recomputed when a cached bound is too
// loose for tol.
Bounded zeta_prime_term(const PiAngle& phi, int n, double tol);

}  // namespace torsionkit::lerch
