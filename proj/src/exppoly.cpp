#include "torsionkit/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace torsionkit {

namespace {
constexpr double kEps = 2.220446049250313e-16;
constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

bool key_less(const ExpTerm& a, const ExpTerm& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.r != b.r) return a.r < b.r;
    if (!(a.phi == b.phi)) return a.phi < b.phi;
    return a.psi < b.psi;
}
bool key_eq(const ExpTerm& a, const ExpTerm& b) {
    return a.n == b.n && a.r == b.r && a.phi == b.phi && a.psi == b.psi;
}

// e^{i phi} Phi(e^{i phi}, -n, 1)
cplx zphi(const PiAngle& phi, int n) { return phi.unit() * lerch::phi_neg_int(phi, n, 1); }

}  // namespace

ExpPoly ExpPoly::monomial(cplx c, int n, PiAngle phi, int r, PiAngle psi) {
    ExpPoly p;
    p.add({c, n, r, phi, psi});
    return p;
}

ExpPoly& ExpPoly::add(const ExpTerm& t) {
    if (t.n < 0) throw std::domain_error("ExpPoly: negative k-degree");
    if (t.c == cplx(0.0, 0.0)) return *this;
    auto it = std::lower_bound(t_.begin(), t_.end(), t, key_less);
    if (it != t_.end() && key_eq(*it, t)) {
        it->c += t.c;
        if (it->c == cplx(0.0, 0.0)) t_.erase(it);
    } else {
        t_.insert(it, t);
    }
    return *this;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& t : o.t_) add(t);
    return *this;
}

ExpPoly ExpPoly::scaled(cplx c) const {
    ExpPoly p;
    if (c == cplx(0.0, 0.0)) return p;
    p.t_ = t_;
    for (auto& t : p.t_) t.c *= c;
    return p;
}

cplx ExpPoly::eval(double k, double v) const {
    cplx s(0.0, 0.0);
    for (const auto& t : t_) {
        double mag = std::pow(k, t.n) * std::pow(v, t.r);
        s += t.c * mag * t.phi.unit_scaled(k) * t.psi.unit_scaled(v);
    }
    return s;
}

ExpPoly ExpPoly::neg_k() const {
    ExpPoly p;
    for (const auto& t : t_) {
        ExpTerm u = t;
        if (t.n % 2 != 0) u.c = -u.c;
        u.phi = -t.phi;
        p.add(u);
    }
    return p;
}

ExpPoly ExpPoly::shift_k(long s) const {
    ExpPoly p;
    for (const auto& t : t_) {
        cplx base = t.c * t.phi.unit_pow(s);
        for (int i = 0; i <= t.n; ++i) {
            Rational b = combinat::binomial(t.n, i) * Rational(s).pow_int(t.n - i);
            p.add({base * b.to_double(), i, t.r, t.phi, t.psi});
        }
    }
    return p;
}

ExpPoly ExpPoly::subst_k_plus_av(long a) const {
    ExpPoly p;
    for (const auto& t : t_) {
        cplx base = t.c * t.phi.unit_pow(a);
        PiAngle psi2 = t.psi + t.phi;
        for (int i = 0; i <= t.n; ++i)
            for (int j = 0; i + j <= t.n; ++j) {
                int h = t.n - i - j;
                Rational m = combinat::multinomial(t.n, {i, j, h}) * Rational(a).pow_int(j);
                p.add({base * m.to_double(), i, t.r + h, t.phi, psi2});
            }
    }
    return p;
}

ExpPoly ExpPoly::project_deg_gt(int N) const {
    ExpPoly p;
    for (const auto& t : t_)
        if (t.r > -N) p.add(t);
    return p;
}
ExpPoly ExpPoly::project_deg_eq(int N) const {
    ExpPoly p;
    for (const auto& t : t_)
        if (t.r == -N) p.add(t);
    return p;
}

int ExpPoly::max_k_deg() const {
    int m = 0;
    for (const auto& t : t_) m = std::max(m, t.n);
    return m;
}
int ExpPoly::max_v_deg() const {
    int m = 0;
    for (const auto& t : t_) m = std::max(m, t.r);
    return m;
}

ExpPoly ExpPoly::instantiate_v(long v) const {
    ExpPoly p;
    for (const auto& t : t_)
        p.add({t.c * std::pow(static_cast<double>(v), t.r) * t.psi.unit_pow(v), t.n, 0, t.phi,
               PiAngle::zero()});
    return p;
}

cplx AsymptoticValue::eval(double at) const {
    cplx s(0.0, 0.0);
    double lg = std::log(at);
    for (const auto& t : terms)
        s += t.c * std::pow(at, t.m) * (t.logpow ? lg : 1.0) * t.psi.unit_scaled(at);
    return s;
}

cplx AsymptoticValue::coeff(int m, int logpow, double at) const {
    cplx s(0.0, 0.0);
    for (const auto& t : terms)
        if (t.m == m && t.logpow == logpow) s += t.c * t.psi.unit_scaled(at);
    return s;
}

void AsymptoticValue::add_term(const AsymTerm& t) {
    if (t.c == cplx(0.0, 0.0)) return;
    terms.push_back(t);
}

void AsymptoticValue::canonicalize() {
    auto less = [](const AsymTerm& a, const AsymTerm& b) {
        if (a.m != b.m) return a.m > b.m;
        if (a.logpow != b.logpow) return a.logpow > b.logpow;
        return a.psi < b.psi;
    };
    std::sort(terms.begin(), terms.end(), less);
    std::vector<AsymTerm> out;
    for (const auto& t : terms) {
        if (!out.empty() && out.back().m == t.m && out.back().logpow == t.logpow &&
            out.back().psi == t.psi)
            out.back().c += t.c;
        else
            out.push_back(t);
    }
    std::erase_if(out, [](const AsymTerm& t) { return t.c == cplx(0.0, 0.0); });
    terms = std::move(out);
}

namespace zops {

cplx zeta_of_monomial(const PiAngle& phi, int n) { return zphi(phi, n); }

ExpPoly zeta_op(const ExpPoly& P) {
    ExpPoly out;
    for (const auto& t : P.terms())
        out.add({t.c * zphi(t.phi, t.n), 0, t.r, PiAngle::zero(), t.psi});
    return out;
}

ZetaPrimeResult zeta_prime_op(const ExpPoly& P, double tol) {
    ZetaPrimeResult res;
    res.bound = 0.0;
    if (P.empty()) return res;
    size_t nt = P.size();
    for (const auto& t : P.terms()) {
        double share = tol / (static_cast<double>(nt) * std::max(1.0, std::abs(t.c)));
        Bounded b = lerch::zeta_prime_term(t.phi, t.n, share);
        res.series.add({t.c * b.value, 0, t.r, PiAngle::zero(), t.psi});
        res.bound += std::abs(t.c) * b.bound;
    }
    return res;
}

ExpPoly zeta_ma(const ExpPoly& P, int m, int a) {
    ExpPoly out;
    for (const auto& t : P.terms()) {
        if (t.n > 0) throw std::domain_error("zeta_ma: degree>0 unsupported");
        out.add({t.c * t.phi.unit() * lerch::phi_neg_int(t.phi, m, a + 1), 0, t.r,
                 PiAngle::zero(), t.psi});
    }
    return out;
}

StructuralParts structural_ops(const ExpPoly& P, double p) {
    StructuralParts s;
    s.odd = (P + P.neg_k().scaled(cplx(-1.0, 0.0))).scaled(cplx(0.5, 0.0));
    for (const auto& t : P.terms()) {
        if (!t.phi.is_zero()) continue;
        double pw = std::pow(p, t.n + 1);
        double hn = combinat::harmonic(t.n).to_double();
        s.star.add({t.c * (-pw / (4.0 * (t.n + 1)) * hn), 0, t.r, PiAngle::zero(), t.psi});
        s.tilde_star.add(
            {t.c * (pw / (2.0 * (t.n + 1) * (t.n + 1))), 0, t.r, PiAngle::zero(), t.psi});
        s.res.add({t.c * (pw / (2.0 * (t.n + 1))), 0, t.r, PiAngle::zero(), t.psi});
    }
    return s;
}

ExpPoly log_dagger_truncate(const ExpPoly& P, int N, long a) {
    if (N < 1) throw std::domain_error("log_dagger_truncate: need N >= 1");
    ExpPoly out;
    for (const auto& t : P.terms()) {
        for (int q = 1; t.r - q > -N; ++q) {
            Rational qinv(1, q);
            for (int u = 0; u <= q; ++u) {
                Rational c = qinv * combinat::binomial(q, u) * Rational(a).pow_int(q - u) *
                             Rational(q % 2 == 0 ? -1 : 1);
                out.add({t.c * c.to_double(), t.n + u, t.r - q, t.phi, t.psi});
            }
        }
    }
    return out;
}

cplx sum_log_exact(const ExpPoly& P, long a, long v) {
    if (v + a < 1) throw std::domain_error("sum_log_exact: need v + a >= 1");
    cplx s(0.0, 0.0), comp(0.0, 0.0);
    for (const auto& t : P.terms()) {
        cplx vfac = std::pow(static_cast<double>(v), t.r) * t.psi.unit_pow(v);
        for (long k = 1; k <= v + a; ++k) {
            cplx x = t.c * vfac * std::pow(static_cast<double>(k), t.n) * t.phi.unit_pow(k) *
                     std::log(static_cast<double>(k));
            cplx y = x - comp;
            cplx u = s + y;
            comp = (u - s) - y;
            s = u;
        }
    }
    return s;
}

double remainder_term_bound(double cabs, int n, int r, const PiAngle& phi, int a, int N,
                            double v) {
    int M = n + r + N;
    if (M < 0 || r + N < 1) throw std::domain_error("remainder bound: precondition violation");
    double phi0 = phi.abs_or_2pi();
    double nf = combinat::factorial(n).get_d();
    double rf = combinat::factorial(r + N - 1).get_d();
    double apart = a == 0 ? 0.0
                          : std::pow(static_cast<double>(a), M + 1) /
                                combinat::factorial(M).get_d();
    return cabs * std::pow(v, -N) * nf * rf *
           (2.0 * kZeta2 * std::pow(phi0, -(M + 1)) + apart);
}

AsymptoticValue sum_log_asymptotic(const ExpPoly& P, long a, long v, int N, double tol) {
    if (N < 1 || a < 0 || v < 1) throw std::domain_error("sum_log_asymptotic: bad arguments");
    AsymptoticValue out;
    out.v = static_cast<double>(v);
    if (P.empty()) return out;
    const size_t nt = P.size();

    for (const auto& t : P.terms()) {
        if (t.n + t.r + N < 0 || t.r + N < 1)
            throw std::domain_error("sum_log_asymptotic: precondition violation");
        out.bound_trunc += remainder_term_bound(std::abs(t.c), t.n, t.r, t.phi, static_cast<int>(a), N,
                                                static_cast<double>(v));

        if (t.phi.is_zero()) {
            // -2 P~*(v+a) + 2 Res P(v+a) log v + (2 Res P(v+a) log++(a/v+1))^{> -N}
            for (int i = 0; i <= t.n + 1; ++i) {
                Rational bc = combinat::binomial(t.n + 1, i) * Rational(a).pow_int(t.n + 1 - i);
                double bcd = bc.to_double();
                out.add_term({t.c * (-bcd / double((t.n + 1) * (t.n + 1))), t.r + i, 0, t.psi});
                out.add_term({t.c * (bcd / double(t.n + 1)), t.r + i, 1, t.psi});
                for (int q = 1; t.r + i - q > -N; ++q) {
                    Rational lc = bc / Rational(t.n + 1) * Rational(a).pow_int(q) *
                                  Rational(q % 2 == 0 ? -1 : 1, q);
                    out.add_term({t.c * lc.to_double(), t.r + i - q, 0, t.psi});
                }
            }
        }

        // pieces built from P(k + a + v)
        cplx base0 = t.c * t.phi.unit_pow(a);
        PiAngle psi2 = t.psi + t.phi;
        for (int i = 0; i <= t.n; ++i)
            for (int j = 0; i + j <= t.n; ++j) {
                int h = t.n - i - j;
                Rational mult =
                    combinat::multinomial(t.n, {i, j, h}) * Rational(a).pow_int(j);
                cplx base = base0 * mult.to_double();
                // -log v * bzeta(P(k+a+v))
                out.add_term({-base * zphi(t.phi, i), t.r + h, 1, psi2});
                // -bzeta(P(k+a+v) log++((k+a)/v+1))^{> -N}
                for (int q = 1; t.r + h - q > -N; ++q) {
                    Rational qsign(q % 2 == 0 ? -1 : 1, q);  // -(-1)^q/q
                    for (int u = 0; u <= q; ++u) {
                        Rational c = qsign * combinat::binomial(q, u) *
                                     Rational(a).pow_int(q - u);
                        out.add_term({-base * c.to_double() * zphi(t.phi, i + u),
                                      t.r + h - q, 0, psi2});
                    }
                }
            }

        // -bzeta'(P)
        double share = tol / (static_cast<double>(nt) * std::max(1.0, std::abs(t.c)));
        Bounded zp = lerch::zeta_prime_term(t.phi, t.n, share);
        out.add_term({-t.c * zp.value, t.r, 0, t.psi});
        out.bound_eval += std::abs(t.c) * zp.bound;
    }

    out.canonicalize();
    double lg = std::log(static_cast<double>(v));
    double mass = 0.0;
    for (const auto& t : out.terms)
        mass += std::abs(t.c) * std::pow(static_cast<double>(v), t.m) * (t.logpow ? lg : 1.0);
    out.bound_eval += mass * 16.0 * kEps;
    return out;
}

}  // namespace zops

QStructural structural_exact(const std::vector<Rational>& coeffs, const Rational& p) {
    QStructural s{Rational(0), Rational(0), Rational(0)};
    for (size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n].is_zero()) continue;
        Rational pw = p.pow_int(static_cast<long>(n) + 1);
        s.star += coeffs[n] * pw * Rational(-1, 4 * (static_cast<long>(n) + 1)) *
                  combinat::harmonic(static_cast<int>(n));
        s.tilde_star +=
            coeffs[n] * pw / Rational(2 * (static_cast<long>(n) + 1) * (static_cast<long>(n) + 1));
        s.res += coeffs[n] * pw / Rational(2 * (static_cast<long>(n) + 1));
    }
    return s;
}

}  // namespace torsionkit
