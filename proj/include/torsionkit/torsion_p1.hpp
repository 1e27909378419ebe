#pragma once

#include "torsionkit/exppoly.hpp"

namespace torsionkit::p1 {

// Equivariant torsion of O(ell) on the projective line for the rotation by
// phi (0 < phi < 2 pi), exact closed form. log_x0 = log alpha^vee(X_0)
// carries the Kaehler normalization. Real-valued; any imaginary residue is
// folded into the certified bound.
Bounded exact(long ell, const PiAngle& phi, double log_x0, double tol);

// Asymptotic expansion for ell -> +infinity (ell >= 1), order N, with the
// certified remainder bound of the closed display (the undetermined factor
// of the source is taken as 1, the conservative reading).
AsymptoticValue asymptotic(long ell, const PiAngle& phi, double log_x0, int N);

// ---- Lie-algebra-equivariant torsion (vector field t X) ----

// Convergent-series evaluation (|t| < 2 pi): the odd zeta' series, the
// finite log sum, and the sharp-operator series via Bernoulli polynomials
// B_{2m}(-ell/2), the latter summed in exact rational arithmetic. K is the
// series order (<= 60); the tail bound compares geometrically at (t/2pi)^2.
Bounded lie_series(long ell, double t, int K);

// The three pieces separately (for cross-checks)
Bounded lie_zeta_series_part(long ell, double t, int K);
double lie_log_sum(long ell, double t);
Bounded lie_hash_series(long ell, double t, int K);

// Asymptotic expansion of the sharp-operator term in ltilde = |ell+1|:
// sine/cosine-integral asymptotics plus the boundary-derivative series.
AsymptoticValue hash_asymptotic(long ltilde, double t, int N);

// Asymptotic expansion of the finite log sum.
AsymptoticValue logsum_asymptotic(long ltilde, double t, int N);

// Full asymptotic value (zeta' series evaluated convergently, the other
// two summands expanded).
AsymptoticValue lie_asymptotic(long ell, double t, int N);

// Brute-force oracle: adaptive Gauss-Kronrod quadrature of the integral
// representation of the sharp term (deterministic subdivision).
double oscillatory_integral_oracle(long ltilde, double t, double quad_tol);

// The boundary kernel f(r) of the integral representation (continuous
// extension at r = +-1), and its derivatives at r = 1 via the
// partial-fraction series.
double f_kernel(double r, double t);
double f_deriv_at_one(int order, double t);  // f^{(order)}(1)

struct SiCi {
    double si, ci;
};
// Sine and cosine integrals: Maclaurin series for x <= 30 (long double),
// asymptotic series with alternating-tail bound beyond.
SiCi si_ci(double x);

}  // namespace torsionkit::p1
