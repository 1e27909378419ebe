#pragma once

#include "torsionkit/characters.hpp"
#include "torsionkit/exppoly.hpp"
#include "torsionkit/spaces.hpp"

namespace torsionkit {

// Exact equivariant torsion of L^ell on a Hermitian symmetric space, from
// the closed five-term character formula; the only non-exact ingredient is
// the zeta'-engine, whose certified bound is propagated.
Bounded torsion_symmetric_exact(const HomogeneousSpace& s, long ell, const TorusPoint& X,
                                const X0Metric& metric, double tol);

// Truncated asymptotic expansion (order N in 1/ell) of the same quantity,
// with a certified remainder bound. Terms are kept in the scale
// ell^m (log ell)^p e^{i ell psi}.
AsymptoticValue torsion_symmetric_asymptotic(const HomogeneousSpace& s, long ell,
                                             const TorusPoint& X, const X0Metric& metric,
                                             int N, double tol);

// Same expansion for an arbitrary flag space with isolated fixed points
// (X regular); the sharper fixed-point error estimate is used. Rejects
// groups with a G2/F4/E8 factor (unknown additive constant).
AsymptoticValue torsion_flag_asymptotic(const HomogeneousSpace& s, long ell,
                                        const TorusPoint& X, const X0Metric& metric, int N,
                                        double tol);

// sum over the isolated fixed points of Td*(TM) ch(L^ell): the coefficient
// of log ell in the expansion.
cplx fixed_point_leading(const HomogeneousSpace& s, long ell, const TorusPoint& X);

// Signed character log-sum of the flag variety G/B and its asymptotic
// expansion (the two sides of the lattice-index comparison).
struct JantzenPair {
    Bounded exact;
    Bounded asymptotic;  // evaluated at ell; bound certifies |exact - value|
};
JantzenPair jantzen_pair(RSType type, const QVec& lambda, const TorusPoint& X, long ell,
                         int N, double tol);

// Coefficients of ell^n log ell, ell^{n-1} log ell and ell^{n-1} extracted
// from the symmetric expansion at X = identity with X0 = lambda/(2 pi),
// together with their closed-form targets.
struct LeadingCoefficients {
    double top_log = 0, sub_log = 0, sub_const = 0;
    double top_log_target = 0, sub_log_target = 0, sub_const_target = 0;
};
LeadingCoefficients finski_coefficients(const HomogeneousSpace& s, int N, double tol);

}  // namespace torsionkit
