#include "torsionkit/torsion_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torsionkit::forms {

namespace {
constexpr double kEps = 2.220446049250313e-16;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

using combinat::bernoulli;
using combinat::bernoulli_poly;
using combinat::binomial;
using combinat::factorial;
using combinat::harmonic;

void push(SymbolicExpansion& e, long j, int logpow, const SymbolicCoeff& c) {
    if (c.is_zero()) return;
    for (auto& entry : e)
        if (entry.j == j && entry.logpow == logpow) {
            entry.coeff += c;
            return;
        }
    e.push_back({j, logpow, c});
}

void canon(SymbolicExpansion& e) {
    std::erase_if(e, [](const SymbolicEntry& s) { return s.coeff.is_zero(); });
    std::sort(e.begin(), e.end(), [](const SymbolicEntry& a, const SymbolicEntry& b) {
        if (a.j != b.j) return a.j > b.j;
        return a.logpow > b.logpow;
    });
}

}  // namespace

std::string ChernPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : c_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        if (k.first) out += " c1^" + std::to_string(k.first);
        if (k.second) out += " c2^" + std::to_string(k.second);
    }
    return out;
}

FiberElem FiberElem::mul(const FiberElem& o) const {
    // (a1 + b1 x)(a2 + b2 x) with x^2 = -c2 - c1 x
    ChernPoly c1 = ChernPoly::monomial(1, 0, Rational(1));
    ChernPoly c2 = ChernPoly::monomial(0, 1, Rational(1));
    FiberElem r;
    ChernPoly bb = b * o.b;
    r.a = a * o.a + bb * c2.scaled(Rational(-1));
    r.b = a * o.b + b * o.a + bb * c1.scaled(Rational(-1));
    return r;
}

SymbolicCoeff TCoeffSymbolic::coeff(long j, int logpow) const {
    for (const auto& e : total)
        if (e.j == j && e.logpow == logpow) return e.coeff;
    return {};
}

SymbolicCoeff TorsionFormComponent::coeff(int a, int b, long j, int logpow) const {
    auto it = monomials.find({a, b});
    if (it == monomials.end()) return {};
    for (const auto& e : it->second)
        if (e.j == j && e.logpow == logpow) return e.coeff;
    return {};
}

Bounded t_coeff_exact(long ell, int m, double tol) {
    if (ell < -1 || m < 0) throw std::domain_error("t_coeff_exact: need ell >= -1, m >= 0");
    Rational half(-ell, 2);
    // T1 = sum_k (2 zeta'(-2k-1) - H_{2k+1} B_{2k+2}/(2k+2)) C(2m+1,2k+1) B_{2m-2k}(-ell/2)
    Bounded t1;
    for (int k = 0; k <= m; ++k) {
        Rational rat = -harmonic(2 * k + 1) * bernoulli(2 * k + 2) / Rational(2 * k + 2);
        Rational cb = binomial(2 * m + 1, 2 * k + 1) * bernoulli_poly(2 * m - 2 * k, half);
        Bounded zp = lerch::zeta_prime_neg(2 * k + 1, tol / (4.0 * (m + 1)));
        t1 += Bounded((2.0 * zp.value + cplx(rat.to_double(), 0.0)) * cb.to_double(),
                      2.0 * zp.bound * std::fabs(cb.to_double()) +
                          std::fabs((rat * cb).to_double()) * 8 * kEps);
    }
    // T2 = sum_{k=1}^{ell+1} B_{2m+1}(k - ell/2) log k
    double t2 = 0.0, comp = 0.0, mass = 0.0;
    for (long k = 1; k <= ell + 1; ++k) {
        double x = bernoulli_poly(2 * m + 1, Rational(k) + half).to_double() *
                   std::log(static_cast<double>(k));
        mass += std::fabs(x);
        double y = x - comp;
        double s = t2 + y;
        comp = (s - t2) - y;
        t2 = s;
    }
    // T3 = -B_{2m+2}(-ell/2)(2 H_{2m+1} - H_m)/(2m+2)
    Rational t3 = -bernoulli_poly(2 * m + 2, half) *
                  (Rational(2) * harmonic(2 * m + 1) - harmonic(m)) / Rational(2 * m + 2);
    Bounded out = t1 + Bounded(cplx(t2, 0.0), mass * 4 * kEps) +
                  Bounded(cplx(t3.to_double(), 0.0), std::fabs(t3.to_double()) * 4 * kEps);
    double pref = 2.0 / factorial(2 * m + 1).get_d() * (m % 2 == 0 ? 1.0 : -1.0);
    return Bounded(out.value * pref, out.bound * std::fabs(pref));
}

Bounded t_coeff_asymptotic(long ell, int m, int N, double tol) {
    if (ell < 1 || m < 0 || N < 1)
        throw std::domain_error("t_coeff_asymptotic: need ell, N >= 1, m >= 0");
    Rational half(-ell, 2);
    double lg = std::log(static_cast<double>(ell));
    Bounded acc;

    // G1 = sum_k (zeta'(-2k-1) - H_{2k+1} B_{2k+2}/(2k+2)) C(2m+1,2k+1) B_{2m-2k}(-ell/2)
    for (int k = 0; k <= m; ++k) {
        Rational rat = -harmonic(2 * k + 1) * bernoulli(2 * k + 2) / Rational(2 * k + 2);
        Rational cb = binomial(2 * m + 1, 2 * k + 1) * bernoulli_poly(2 * m - 2 * k, half);
        Bounded zp = lerch::zeta_prime_neg(2 * k + 1, tol / (4.0 * (m + 1)));
        acc += Bounded((zp.value + cplx(rat.to_double(), 0.0)) * cb.to_double(),
                       zp.bound * std::fabs(cb.to_double()) +
                           std::fabs((rat * cb).to_double()) * 8 * kEps);
    }
    // G2 = T3
    Rational t3 = -bernoulli_poly(2 * m + 2, half) *
                  (Rational(2) * harmonic(2 * m + 1) - harmonic(m)) / Rational(2 * m + 2);
    acc += Bounded(cplx(t3.to_double(), 0.0), std::fabs(t3.to_double()) * 4 * kEps);
    // G3 = T21 = -(1/(2m+2)) sum_j C(2m+2,j) B_{2m+2-j}(-ell/2) (ell+1)^j / j
    Rational t21(0);
    for (int j = 1; j <= 2 * m + 2; ++j)
        t21 -= binomial(2 * m + 2, j) * bernoulli_poly(2 * m + 2 - j, half) *
               Rational(ell + 1).pow_int(j) / Rational(j) / Rational(2 * m + 2);
    acc += Bounded(cplx(t21.to_double(), 0.0), std::fabs(t21.to_double()) * 4 * kEps);
    // G4 = T22 = -log ell (B_{2m+2}(-ell/2) + (1 + ell/2) B_{2m+1}(-ell/2))
    Rational t22r = -(bernoulli_poly(2 * m + 2, half) +
                      (Rational(1) - half) * bernoulli_poly(2 * m + 1, half));
    acc += Bounded(cplx(t22r.to_double() * lg, 0.0),
                   std::fabs(t22r.to_double() * lg) * 8 * kEps);
    // G5 = T23^even
    Bounded g5;
    {
        Rational b0 = bernoulli_poly(2 * m + 1, half) / Rational(2);
        g5 += Bounded(cplx(b0.to_double() * lerch::kLog2Pi, 0.0),
                      std::fabs(b0.to_double()) * 1e-14);
        for (int k = 1; k <= m; ++k) {
            Rational c = Rational(factorial(2 * m + 1)) * bernoulli_poly(2 * m + 1 - 2 * k, half) /
                         (Rational(2) * Rational(factorial(2 * m + 1 - 2 * k)));
            if (k % 2 == 0) c = -c;
            Bounded z = lerch::riemann_zeta(2 * k + 1);
            double pk = std::pow(kTwoPi, 2 * k);
            g5 += Bounded(c.to_double() * z.value / pk,
                          std::fabs(c.to_double() / pk) * (z.bound + 1e-14));
        }
    }
    acc += g5;
    // G6 = T24
    Rational t24(0);
    for (long j = 1 - N; j <= 2 * m; ++j) {
        for (int q = static_cast<int>(std::max(0L, 1 + j)); q <= 2 * m + 1; ++q) {
            Rational rsum(0);
            for (int r = static_cast<int>(std::max(0L, 1 + j)); r <= q; ++r)
                rsum += binomial(q, r) * Rational(-1, 2).pow_int(r) / Rational(r - j);
            Rational bracket = bernoulli(q - j + 1) / Rational(q - j + 1) *
                                   Rational((q - j) % 2 == 0 ? 1 : -1) -
                               Rational(1) + Rational(1, q - j + 1);
            Rational term = rsum * binomial(2 * m + 1, q) * bernoulli(2 * m + 1 - q) * bracket *
                            Rational(j % 2 == 0 ? 1 : -1) * Rational(ell).pow_int(j);
            t24 += term;
        }
    }
    acc += Bounded(cplx(t24.to_double(), 0.0), std::fabs(t24.to_double()) * 8 * kEps);
    // T25 block, bounded via |R(1, -q-r-N, 2, r, ell)| < C(1, -(q+r+N), 2)
    double t25 = 0.0;
    for (int q = 0; q <= 2 * m + 1; ++q)
        for (int r = 0; r <= 2 * m + 1 - q; ++r) {
            int M = q + r + N;
            double pref = factorial(2 * m + 1).get_d() * factorial(q - 1 + N).get_d() /
                          (factorial(q).get_d() * factorial(2 * m + 1 - q - r).get_d() *
                           factorial(M).get_d());
            double b = std::fabs(bernoulli(2 * m + 1 - q - r).to_double());
            double C = factorial(M).get_d() * 2.0 * lerch::riemann_zeta(M + 1).re() /
                           std::pow(kTwoPi, M + 1) +
                       1.0;
            t25 += pref * b * std::pow(static_cast<double>(ell), -N) / std::pow(2.0, q) * C;
        }
    acc.bound += t25;
    double pref = 2.0 / factorial(2 * m + 1).get_d() * (m % 2 == 0 ? 1.0 : -1.0);
    return Bounded(acc.value * pref, acc.bound * std::fabs(pref));
}

static TCoeffSymbolic t_coeffs_build(int m, int N) {
    TCoeffSymbolic out;
    auto& t1 = out.by_block["T1"];
    auto& t3 = out.by_block["T3"];
    auto& t21 = out.by_block["T21"];
    auto& t22 = out.by_block["T22"];
    auto& t23e = out.by_block["T23even"];
    auto& t23o = out.by_block["T23odd"];
    auto& t24 = out.by_block["T24"];

    // T1
    for (int k = 0; k <= m; ++k) {
        SymbolicCoeff zc = SymbolicCoeff::zeta_prime_neg(2 * k + 1).scaled(Rational(2)) +
                           SymbolicCoeff::rational(-harmonic(2 * k + 1) * bernoulli(2 * k + 2) /
                                                   Rational(2 * k + 2));
        for (int j = 0; j <= 2 * m - 2 * k; ++j) {
            Rational c = Rational(factorial(2 * m + 1)) * bernoulli(2 * m - 2 * k - j) *
                         Rational(-1, 2).pow_int(j) /
                         (Rational(factorial(2 * m - 2 * k - j)) * Rational(factorial(j)) *
                          Rational(factorial(2 * k + 1)));
            push(t1, j, 0, zc.scaled(c));
        }
    }
    // T3
    {
        Rational h = Rational(2) * harmonic(2 * m + 1) - harmonic(m);
        for (int j = 0; j <= 2 * m + 2; ++j) {
            Rational c = -h * Rational(factorial(2 * m + 1)) * bernoulli(2 * m + 2 - j) *
                         Rational(-1, 2).pow_int(j) /
                         (Rational(factorial(2 * m + 2 - j)) * Rational(factorial(j)));
            push(t3, j, 0, SymbolicCoeff::rational(c));
        }
    }
    // T21 (power form with the closed r-sum replacement)
    for (int j = 0; j <= 2 * m; ++j) {
        Rational s(0);
        for (int h = j + 1; h <= 2 * m + 2; ++h) {
            Rational inner(j % 2 == 0 ? 1 : -1);
            for (int r = 0; r <= h - j - 1; ++r)
                inner += binomial(j + r, r) * pow2q(r);
            s -= inner * binomial(2 * m + 2, h) * Rational(1) / pow2q(h) *
                 bernoulli(2 * m + 2 - h) / (Rational(h - j) * Rational(2 * m + 2));
        }
        push(t21, j, 0, SymbolicCoeff::rational(s));
    }
    for (int j = 1; j <= 2 * m + 2; ++j) {
        Rational c = (Rational(2) * harmonic(j) - harmonic(j / 2)) * binomial(2 * m + 2, j) *
                     bernoulli(2 * m + 2 - j) / Rational(2 * m + 2) * Rational(-1, 2).pow_int(j);
        push(t21, j, 0, SymbolicCoeff::rational(c));
    }
    // T22
    for (int j = 0; j <= 2 * m + 1; ++j) {
        Rational c = -binomial(2 * m + 1, j) *
                     (bernoulli(2 * m + 2 - j) + bernoulli(2 * m + 1 - j)) *
                     Rational(-1, 2).pow_int(j);
        push(t22, j, 1, SymbolicCoeff::rational(c));
    }
    // T23 = -sum_h C(2m+1,h)(-1/2)^h ell^h sum_i C(2m+1-h,i) B_{2m+1-h-i} zeta'(-i)
    for (int h = 0; h <= 2 * m + 1; ++h) {
        Rational ch = -binomial(2 * m + 1, h) * Rational(-1, 2).pow_int(h);
        for (int i = 0; i <= 2 * m + 1 - h; ++i) {
            Rational c = ch * binomial(2 * m + 1 - h, i) * bernoulli(2 * m + 1 - h - i);
            SymbolicCoeff zc = SymbolicCoeff::zeta_prime_neg(i).scaled(c);
            push(i % 2 == 1 ? t23o : t23e, h, 0, zc);
        }
    }
    // T24 (einfach form; valid for every j)
    for (long j = 1 - N; j <= 2 * m; ++j)
        for (int q = static_cast<int>(std::max(0L, 1 + j)); q <= 2 * m + 1; ++q) {
            Rational rsum(0);
            for (int r = static_cast<int>(std::max(0L, 1 + j)); r <= q; ++r)
                rsum += binomial(q, r) * Rational(-1, 2).pow_int(r) / Rational(r - j);
            Rational bracket = bernoulli(q - j + 1) / Rational(q - j + 1) *
                                   Rational((q - j) % 2 == 0 ? 1 : -1) -
                               Rational(1) + Rational(1, q - j + 1);
            Rational c = rsum * binomial(2 * m + 1, q) * bernoulli(2 * m + 1 - q) * bracket *
                         Rational(j % 2 == 0 ? 1 : -1);
            push(t24, j, 0, SymbolicCoeff::rational(c));
        }

    for (auto& [name, e] : out.by_block) {
        canon(e);
        for (const auto& entry : e) push(out.total, entry.j, entry.logpow, entry.coeff);
    }
    canon(out.total);
    return out;
}

TCoeffSymbolic t_coeff_symbolic(int m, int N) {
    if (m > 6 || N > 10) throw std::domain_error("t_coeff_symbolic: need m <= 6, N <= 10");
    return t_coeffs_build(m, N);
}

TorsionFormComponent assemble_torsion_form(int n, int N) {
    if (n > 8) throw std::domain_error("assemble_torsion_form: need n <= 8");
    TorsionFormComponent out;
    for (int m = 0; 2 * m <= n; ++m) {
        TCoeffSymbolic ts = t_coeffs_build(m, N);
        int r = n - 2 * m;
        Rational pref = Rational(2) * Rational(r % 2 == 0 ? 1 : -1) /
                        (Rational(factorial(r)) * Rational(factorial(2 * m + 1)) *
                         pow2q(r));
        // c1^r (c1^2 - 4 c2)^m = sum_i C(m,i) (-4)^{m-i} c1^{r+2i} c2^{m-i}
        for (int i = 0; i <= m; ++i) {
            Rational mono = binomial(m, i) * Rational(-4).pow_int(m - i);
            auto& slot = out.monomials[{r + 2 * i, m - i}];
            for (const auto& e : ts.total)
                push(slot, e.j + r, e.logpow, e.coeff.scaled(pref * mono));
        }
    }
    for (auto& [k, e] : out.monomials) canon(e);
    return out;
}

std::map<std::pair<int, int>, Bounded> assemble_torsion_form_numeric(int n, long ell,
                                                                     double tol) {
    std::map<std::pair<int, int>, Bounded> out;
    for (int m = 0; 2 * m <= n; ++m) {
        Bounded t = t_coeff_exact(ell, m, tol);
        int r = n - 2 * m;
        // the exact coefficient already carries 2 (-1)^m/(2m+1)!; convert to
        // the (c1^2-4c2)^m basis: t^{2m} -> (-1)^m (c1^2-4c2)^m
        double pref = std::pow(-static_cast<double>(ell) / 2.0, r) / factorial(r).get_d() *
                      (m % 2 == 0 ? 1.0 : -1.0);
        for (int i = 0; i <= m; ++i) {
            double mono = (binomial(m, i) * Rational(-4).pow_int(m - i)).to_double();
            Bounded v(t.value * pref * mono, t.bound * std::fabs(pref * mono));
            auto it = out.find({r + 2 * i, m - i});
            if (it == out.end())
                out[{r + 2 * i, m - i}] = v;
            else
                it->second += v;
        }
    }
    return out;
}

PucholWitness puchol_check(int n) {
    if (n > 8) throw std::domain_error("puchol_check: need n <= 8");
    PucholWitness w;
    // (1/2) int_Z c1(O(1))^{n+1}/(n+1)!
    FiberElem x{ChernPoly(), ChernPoly::monomial(0, 0, Rational(1))};  // c1(O(1))
    FiberElem p{ChernPoly::monomial(0, 0, Rational(1)), ChernPoly()};
    for (int i = 0; i <= n; ++i) p = p.mul(x);
    w.lhs = p.integrate().scaled(Rational(1, 2) / Rational(factorial(n + 1)));

    TorsionFormComponent tf = assemble_torsion_form(n, 4);
    bool ok = true;
    for (const auto& [mono, e] : tf.monomials) {
        SymbolicCoeff clog = tf.coeff(mono.first, mono.second, n + 1, 1);
        SymbolicCoeff cconst = tf.coeff(mono.first, mono.second, n + 1, 0);
        Rational logell = clog.is_rational() ? clog.rational_part() : Rational(0);
        if (!clog.is_rational()) ok = false;
        Rational log2pi(0);
        for (const auto& [s, c] : cconst.parts())
            if (s.kind == Sym::Kind::Log2Pi) log2pi = c;
        if (!logell.is_zero()) w.rhs_logell[mono] = logell;
        if (!log2pi.is_zero()) w.rhs_log2pi[mono] = log2pi;
    }
    // the two channels must assemble log(ell/2pi) against the fiber integral
    for (const auto& [mono, c] : w.lhs.coeffs()) {
        auto it = w.rhs_logell.find(mono);
        if (it == w.rhs_logell.end() || it->second != c) ok = false;
        auto it2 = w.rhs_log2pi.find(mono);
        if (it2 == w.rhs_log2pi.end() || it2->second != -c) ok = false;
    }
    for (const auto& [mono, c] : w.rhs_logell)
        if (!w.lhs.coeffs().count(mono)) ok = false;
    w.ok = ok;
    return w;
}

}  // namespace torsionkit::forms
