#pragma once

#include <map>
#include <string>
#include <vector>

#include "torsionkit/symbolic.hpp"

namespace torsionkit::forms {

// ---- Chern ring of the fibration base: polynomials in c1(E), c2(E) ----
class ChernPoly {
public:
    ChernPoly() = default;
    static ChernPoly monomial(int a, int b, const Rational& c) {
        ChernPoly p;
        p.addc(a, b, c);
        return p;
    }
    void addc(int a, int b, const Rational& c) {
        if (c.is_zero()) return;
        auto& slot = c_[{a, b}];
        slot += c;
        if (slot.is_zero()) c_.erase({a, b});
    }
    const std::map<std::pair<int, int>, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    ChernPoly operator+(const ChernPoly& o) const {
        ChernPoly r = *this;
        for (const auto& [k, c] : o.c_) r.addc(k.first, k.second, c);
        return r;
    }
    ChernPoly operator*(const ChernPoly& o) const {
        ChernPoly r;
        for (const auto& [ka, ca] : c_)
            for (const auto& [kb, cb] : o.c_)
                r.addc(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    ChernPoly scaled(const Rational& c) const {
        ChernPoly r;
        for (const auto& [k, co] : c_) r.addc(k.first, k.second, c * co);
        return r;
    }
    friend bool operator==(const ChernPoly& a, const ChernPoly& b) { return a.c_ == b.c_; }
    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> c_;
};

// Element of the fiber ring: A + B * c1(O(1)) with A, B pulled back from the
// base; the relation c1(O(1))^2 = -c2 - c1 c1(O(1)) keeps this normal form
// (it encodes c1(Tpi) = c1 + 2 c1(O(1)), c1(Tpi)^2 = c1^2 - 4 c2).
struct FiberElem {
    ChernPoly a, b;
    FiberElem mul(const FiberElem& o) const;
    // fiber integration: int_Z (A + B c1(O(1))) = B
    ChernPoly integrate() const { return b; }
};

// ---- torsion-form coefficients ----

// The t^{2m}-coefficient of the torsion power series (prefactor
// 2 (-1)^m/(2m+1)! included), evaluated exactly: odd-zeta' block, the
// Bernoulli log sum, and the harmonic-weighted Bernoulli value.
Bounded t_coeff_exact(long ell, int m, double tol);

// Same coefficient from the order-N asymptotic ledger, with the certified
// remainder block bound.
Bounded t_coeff_asymptotic(long ell, int m, int N, double tol);

// Symbolic expansion of the T-sum (no 2(-1)^m/(2m+1)! prefactor):
// coefficients of ell^j and ell^j log ell, 1-N <= j <= 2m+2, per block and
// total. The remainder block is bounded, never expanded.
struct SymbolicEntry {
    long j = 0;
    int logpow = 0;
    SymbolicCoeff coeff;
};
using SymbolicExpansion = std::vector<SymbolicEntry>;
struct TCoeffSymbolic {
    std::map<std::string, SymbolicExpansion> by_block;  // T1, T3, T21, T22, T23even, T23odd, T24
    SymbolicExpansion total;
    SymbolicCoeff coeff(long j, int logpow) const;
};
TCoeffSymbolic t_coeff_symbolic(int m, int N);

// The degree-2n component of the torsion form as a polynomial in (c1, c2)
// whose coefficients are expansions in (ell-power, log-power).
struct TorsionFormComponent {
    std::map<std::pair<int, int>, SymbolicExpansion> monomials;  // (c1-pow, c2-pow)
    SymbolicCoeff coeff(int a, int b, long j, int logpow) const;
};
TorsionFormComponent assemble_torsion_form(int n, int N);

// Numeric variant at a given ell (certified).
std::map<std::pair<int, int>, Bounded> assemble_torsion_form_numeric(int n, long ell,
                                                                     double tol);

// Compare the ell^{n+1} log(ell/2pi) coefficient of the assembled form with
// the fiber-integral of the leading curvature term; both sides returned.
struct PucholWitness {
    bool ok = false;
    ChernPoly lhs;                                       // (1/2) int_Z c1(O(1))^{n+1}/(n+1)!
    std::map<std::pair<int, int>, Rational> rhs_logell;  // log ell channel at j = n+1
    std::map<std::pair<int, int>, Rational> rhs_log2pi;  // log 2pi channel at j = n+1
};
PucholWitness puchol_check(int n);

}  // namespace torsionkit::forms
