#pragma once

#include <vector>

#include "torsionkit/angle.hpp"
#include "torsionkit/bounded.hpp"
#include "torsionkit/combinat.hpp"
#include "torsionkit/lerch.hpp"

namespace torsionkit {

// One term c * k^n * v^r * e^{i(k phi + v psi)}.
struct ExpTerm {
    cplx c{0.0, 0.0};
    int n = 0;          // k-degree, >= 0
    int r = 0;          // v-degree, any sign
    PiAngle phi;        // k-angle
    PiAngle psi;        // v-angle
};

// Finite sum of exponential-polynomial terms in (k, v), kept canonical:
// at most one term per (n, r, phi, psi) key, no zero coefficients.
class ExpPoly {
public:
    ExpPoly() = default;
    static ExpPoly monomial(cplx c, int n, PiAngle phi = PiAngle::zero(), int r = 0,
                            PiAngle psi = PiAngle::zero());

    const std::vector<ExpTerm>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    ExpPoly& add(const ExpTerm& t);
    ExpPoly& operator+=(const ExpPoly& o);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    ExpPoly scaled(cplx c) const;

    cplx eval(double k, double v) const;

    // substitutions on the k-slot
    ExpPoly neg_k() const;                 // k -> -k
    ExpPoly shift_k(long s) const;         // k -> k + s (binomial expansion)
    ExpPoly subst_k_plus_av(long a) const; // k -> k + a + v (two-variable expansion)

    // v-degree truncations of a formal series: keep r > -N / r == -N
    ExpPoly project_deg_gt(int N) const;
    ExpPoly project_deg_eq(int N) const;

    // largest k-degree and v-degree
    int max_k_deg() const;
    int max_v_deg() const;

    // fold the v-slots at an integer point: c v^r e^{i v psi} -> coefficient
    ExpPoly instantiate_v(long v) const;

private:
    std::vector<ExpTerm> t_;
};

// A truncated expansion in the scale v^m (log v)^p e^{i v psi} together
// with a certified remainder bound (split into the truncation part and the
// evaluation part; `bound` is their sum).
struct AsymTerm {
    cplx c{0.0, 0.0};
    int m = 0;
    int logpow = 0;  // 0 or 1
    PiAngle psi;
};
struct AsymptoticValue {
    std::vector<AsymTerm> terms;
    double bound_trunc = 0.0;  // remainder-operator part
    double bound_eval = 0.0;   // zeta'-engine + floating point part
    double v = 0.0;            // evaluation point the bound was certified at

    double bound() const { return bound_trunc + bound_eval; }
    cplx eval(double at) const;
    cplx value() const { return eval(v); }
    // sum of coefficients of v^m (log v)^p with the e^{i v psi} factors
    // evaluated at `at` (the "oscillatory coefficient")
    cplx coeff(int m, int logpow, double at) const;
    void add_term(const AsymTerm& t);
    void canonicalize();
};

namespace zops {

// bzeta: P(k) |-> sum_j c_j e^{i phi_j} Phi(e^{i phi_j}, -n_j, 1), applied to
// the k-dependence; v-factors ride along. Result has k-degree 0, phi = 0.
ExpPoly zeta_op(const ExpPoly& P);

// bzeta': same with d/ds Phi, certified via the reference engine.
struct ZetaPrimeResult {
    ExpPoly series;  // k-free
    double bound;
};
ZetaPrimeResult zeta_prime_op(const ExpPoly& P, double tol);

// bzeta_{m,a} on pure exponentials: sum c_j e^{i phi_j} Phi(e^{i phi_j}, -m, a+1).
// Throws if any term has k-degree > 0.
ExpPoly zeta_ma(const ExpPoly& P, int m, int a);

// odd part and the three phi==0 functionals evaluated at p
struct StructuralParts {
    ExpPoly odd;
    ExpPoly star;        // P*(p)
    ExpPoly tilde_star;  // P~*(p)
    ExpPoly res;         // Res P(p)
};
StructuralParts structural_ops(const ExpPoly& P, double p);

// multiply P(k,v) by log^double-dagger((k+a)/v + 1) and keep v-degrees > -N
ExpPoly log_dagger_truncate(const ExpPoly& P, int N, long a);

// sum_{k=1}^{v+a} P(k) log k with P's v-slots instantiated at v (oracle)
cplx sum_log_exact(const ExpPoly& P, long a, long v);

// the master expansion of sum_{k=1}^{v+a} P(k) log k, with certified bound
AsymptoticValue sum_log_asymptotic(const ExpPoly& P, long a, long v, int N, double tol);

// certified bound for the remainder operator on one term (the simplified
// global-maximum form; phi0 = 2 pi when the k-angle vanishes)
double remainder_term_bound(double cabs, int n, int r, const PiAngle& phi, int a, int N,
                            double v);

// e^{i phi} Phi(e^{i phi}, -n, 1), the per-monomial value behind zeta_op
cplx zeta_of_monomial(const PiAngle& phi, int n);

}  // namespace zops

// exact structural functionals for a rational k-polynomial (used by the
// symbolic identity suites)
struct QStructural {
    Rational star, tilde_star, res;
};
QStructural structural_exact(const std::vector<Rational>& coeffs, const Rational& p);

}  // namespace torsionkit
