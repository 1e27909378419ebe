#include "torsionkit/torsion_hs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "torsionkit/lerch.hpp"

namespace torsionkit {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

long pairing_int(const RootSystem& G, const QVec& a, const QVec& x) {
    Rational r = G.pair_co(a, x);
    if (!r.is_integer()) throw std::domain_error("non-integer coroot pairing");
    return r.to_long();
}

// |sum over psi-angles of c e^{i ell psi}| per (n, r, phi) group
struct TermGroup {
    int n, r;
    PiAngle phi;
    cplx f;
};
std::vector<TermGroup> group_terms(const ExpPoly& chi, double ell) {
    std::vector<TermGroup> gs;
    for (const auto& t : chi.terms()) {
        cplx contrib = t.c * t.psi.unit_scaled(ell);
        bool merged = false;
        for (auto& g : gs)
            if (g.n == t.n && g.r == t.r && g.phi == t.phi) {
                g.f += contrib;
                merged = true;
                break;
            }
        if (!merged) gs.push_back({t.n, t.r, t.phi, contrib});
    }
    return gs;
}

double frac01(double x) {
    double f = x - std::floor(x);
    if (f <= 0.0) f += 1.0;
    return f;
}

// remainder estimate for isolated fixed points: exact Weyl-quotient form
double flag_remainder_bound(const HomogeneousSpace& s, long ell, const TorusPoint& X, int N) {
    const RootSystem& G = *s.G;
    double D = 1.0;
    for (const auto& b : G.positive)
        D *= std::fabs(2.0 * std::sin(std::numbers::pi * X.pair(G, b)));
    double nfact1 = combinat::factorial(N - 1).get_d();
    double total = 0.0;
    for (const auto& alpha : s.psi) {
        long a = pairing_int(G, alpha, G.rho);
        double sv = G.pair_co(alpha, s.lambda).to_double();
        double inner = 0.0;
        for (const auto& w : G.weyl) {
            double x = frac01(X.pair(G, G.apply(w, alpha)));
            inner += lerch::hurwitz_zeta(N + 1, x).re() + lerch::hurwitz_zeta(N + 1, 1.0 - x).re();
        }
        double innerB = nfact1 * std::pow(kTwoPi, -(N + 1)) * inner +
                        static_cast<double>(G.weyl.size()) / N *
                            combinat::faulhaber_power_sum(static_cast<int>(a) + 1, N).to_double();
        total += std::pow(sv, -N) * innerB;
    }
    return std::pow(static_cast<double>(ell), -N) / D * total * (1.0 + 1e-12);
}

AsymptoticValue torsion_asympt_core(const HomogeneousSpace& s, long ell, const TorusPoint& X,
                                    const X0Metric& metric, int N, double tol,
                                    bool flag_bound) {
    if (N < 1 || ell < 1) throw std::domain_error("torsion asymptotics: need N >= 1, ell >= 1");
    const RootSystem& G = *s.G;
    AsymptoticValue out;
    out.v = static_cast<double>(ell);
    const double npsi = static_cast<double>(s.psi.size());

    for (const auto& alpha : s.psi) {
        ExpPoly chi = character_family(s, alpha, X);
        long a = pairing_int(G, alpha, G.rho);
        Rational srat = G.pair_co(alpha, s.lambda);
        double logx = std::log(srat.to_double()) - metric.log_pairing(s, alpha);

        // -(log ell + log x_alpha) bzeta(chi)
        ExpPoly bz_chi = zops::zeta_op(chi);
        for (const auto& t : bz_chi.terms()) {
            out.add_term({-t.c, t.r, 1, t.psi});
            out.add_term({-t.c * logx, t.r, 0, t.psi});
        }
        // + bzeta'(chi)
        auto zp = zops::zeta_prime_op(chi, tol / npsi);
        for (const auto& t : zp.series.terms()) out.add_term({t.c, t.r, 0, t.psi});
        out.bound_eval += zp.bound;
        // - bzeta(chi log++((a+k)/(s ell) + 1))^{[deg_ell > -N]}
        for (const auto& t : chi.terms()) {
            for (int q = 1; t.r - q > -N; ++q) {
                Rational qsign(q % 2 == 0 ? -1 : 1, q);
                for (int u = 0; u <= q; ++u) {
                    Rational c = qsign * combinat::binomial(q, u) * Rational(a).pow_int(q - u) /
                                 srat.pow_int(q);
                    out.add_term({-t.c * c.to_double() * zops::zeta_of_monomial(t.phi, t.n + u),
                                  t.r - q, 0, t.psi});
                }
            }
        }
        // remainder estimate, generic form
        if (!flag_bound) {
            for (const auto& g : group_terms(chi, static_cast<double>(ell))) {
                double u = srat.to_double() * static_cast<double>(ell);
                out.bound_trunc += std::pow(srat.to_double(), -g.r) *
                                   zops::remainder_term_bound(std::abs(g.f), g.n, g.r, g.phi,
                                                              static_cast<int>(a), N, u);
            }
        }
    }
    if (flag_bound) out.bound_trunc += flag_remainder_bound(s, ell, X, N);

    out.canonicalize();
    double lg = std::log(static_cast<double>(ell));
    double mass = 0.0;
    for (const auto& t : out.terms)
        mass += std::abs(t.c) * std::pow(static_cast<double>(ell), t.m) * (t.logpow ? lg : 1.0);
    out.bound_eval += mass * 16.0 * kEps;
    return out;
}

}  // namespace

Bounded torsion_symmetric_exact(const HomogeneousSpace& s, long ell, const TorusPoint& X,
                                const X0Metric& metric, double tol) {
    if (!s.symmetric) throw std::domain_error("torsion_symmetric_exact: symmetric space required");
    const RootSystem& G = *s.G;
    Bounded out;
    double mass = 0.0;
    double sum_log_x0 = 0.0;
    for (const auto& alpha : s.psi) sum_log_x0 += metric.log_pairing(s, alpha);

    for (const auto& alpha : s.psi) {
        ExpPoly chi_m =
            character_family(s, qvec_neg(alpha), X).instantiate_v(ell);
        long a = pairing_int(G, alpha, G.rho);
        long sl = pairing_int(G, alpha, qvec_scale(Rational(ell), s.lambda));
        long c_alpha = a + sl;
        if (c_alpha < 1) throw std::domain_error("torsion_symmetric_exact: need <a^vee,rho+ell lambda> >= 1");

        auto parts = zops::structural_ops(chi_m, static_cast<double>(c_alpha));
        // -2 bzeta'(chi^odd)
        auto zp = zops::zeta_prime_op(parts.odd, tol / (2.0 * s.psi.size()));
        out -= 2.0 * Bounded(zp.series.eval(0, 1), zp.bound);
        // -2 chi*(c_alpha)
        cplx star = parts.star.eval(0, 1);
        out -= Bounded(2.0 * star, std::abs(star) * 8 * kEps);
        // -bzeta(chi_-) log alpha^vee(X0)
        cplx bz = zops::zeta_op(chi_m).eval(0, 1);
        double lx = metric.log_pairing(s, alpha);
        out -= Bounded(bz * lx, std::abs(bz * lx) * 8 * kEps);
        // -sum_{k=1}^{c_alpha} chi_-(k) log k
        cplx acc(0.0, 0.0);
        double m2 = 0.0;
        for (long k = 1; k <= c_alpha; ++k) {
            cplx v = chi_m.eval(static_cast<double>(k), 1.0) * std::log(static_cast<double>(k));
            acc += v;
            m2 += std::abs(v);
        }
        out -= Bounded(acc, m2 * 8 * kEps);
        mass += m2 + std::abs(bz) + std::abs(star);
    }
    // -chi_{rho + ell lambda}(t) sum_{Psi} log alpha^vee(X0)
    cplx chi0 = character_family(s, QVec(G.rank, Rational(0)), X).instantiate_v(ell).eval(0, 1);
    out -= Bounded(chi0 * sum_log_x0, std::abs(chi0 * sum_log_x0) * 8 * kEps);
    out.bound += mass * 8.0 * kEps;
    return out;
}

AsymptoticValue torsion_symmetric_asymptotic(const HomogeneousSpace& s, long ell,
                                             const TorusPoint& X, const X0Metric& metric,
                                             int N, double tol) {
    if (!s.symmetric)
        throw std::domain_error("torsion_symmetric_asymptotic: symmetric space required");
    return torsion_asympt_core(s, ell, X, metric, N, tol, false);
}

AsymptoticValue torsion_flag_asymptotic(const HomogeneousSpace& s, long ell,
                                        const TorusPoint& X, const X0Metric& metric, int N,
                                        double tol) {
    if (s.G->type == RSType::G2)
        throw std::domain_error(
            "torsion_flag_asymptotic: G2/F4/E8 factors unsupported (unknown constant)");
    if (!is_regular(*s.G, X))
        throw std::domain_error("torsion_flag_asymptotic: X must be regular");
    return torsion_asympt_core(s, ell, X, metric, N, tol, true);
}

cplx fixed_point_leading(const HomogeneousSpace& s, long ell, const TorusPoint& X) {
    const RootSystem& G = *s.G;
    if (!is_regular(G, X)) throw std::domain_error("fixed_point_leading: X must be regular");
    cplx acc(0.0, 0.0);
    for (const auto& w : G.weyl) {
        cplx ch = X.angle(G, G.apply(w, s.lambda)).unit_pow(ell);
        cplx prod(1.0, 0.0), tdsum(0.0, 0.0);
        for (const auto& alpha : s.psi) {
            cplx f = 1.0 / (1.0 - std::conj(X.angle(G, G.apply(w, alpha)).unit()));
            prod *= f;
            tdsum += f;
        }
        acc += ch * prod * tdsum;
    }
    return acc / static_cast<double>(s.weyl_k_order);
}

JantzenPair jantzen_pair(RSType type, const QVec& lambda, const TorusPoint& X, long ell,
                         int N, double tol) {
    const RootSystem& G = RootSystem::get(type);
    HomogeneousSpace flag;
    flag.name = "flag";
    flag.G = &G;
    flag.lambda = lambda;
    flag.psi = G.positive;
    flag.rho_k = QVec(G.rank, Rational(0));
    flag.symmetric = false;
    flag.weyl_k_order = 1;
    for (const auto& alpha : flag.psi)
        if (G.pair_co(alpha, lambda).sign() <= 0)
            throw std::domain_error("jantzen_pair: lambda must be strictly dominant");

    JantzenPair out;
    double mass = 0.0;

    // exact side: -sum_alpha sum_{k=1}^{<a^vee,rho+ell lambda>-1} chi_- log k
    for (const auto& alpha : flag.psi) {
        ExpPoly chi_m = character_family(flag, qvec_neg(alpha), X).instantiate_v(ell);
        long c_alpha = pairing_int(G, alpha, G.rho) +
                       pairing_int(G, alpha, qvec_scale(Rational(ell), lambda));
        cplx acc(0.0, 0.0);
        double m2 = 0.0;
        for (long k = 1; k < c_alpha; ++k) {
            cplx v = chi_m.eval(static_cast<double>(k), 1.0) * std::log(static_cast<double>(k));
            acc += v;
            m2 += std::abs(v);
        }
        out.exact -= Bounded(acc, m2 * 8 * kEps);
        mass += m2;
    }
    out.exact.bound += mass * 4 * kEps;

    // asymptotic side, folded at ell
    Bounded asym;
    ExpPoly chi0 = character_family(flag, QVec(G.rank, Rational(0)), X);
    for (const auto& alpha : flag.psi) {
        ExpPoly chi_p = character_family(flag, alpha, X);
        ExpPoly chi_m = character_family(flag, qvec_neg(alpha), X);
        ExpPoly chi_m_at = chi_m.instantiate_v(ell);
        long a = pairing_int(G, alpha, G.rho);
        Rational srat = G.pair_co(alpha, lambda);
        double u = srat.to_double() * static_cast<double>(ell);
        double p = static_cast<double>(a) + u;

        // 2 chi~*_-(p)
        auto parts = zops::structural_ops(chi_m_at, p);
        cplx ts = parts.tilde_star.eval(0, 1);
        asym += Bounded(2.0 * ts, std::abs(ts) * 8 * kEps);
        // + log u * bzeta(chi_-)
        cplx bz = zops::zeta_op(chi_m_at).eval(0, 1);
        asym += Bounded(bz * std::log(u), std::abs(bz * std::log(u)) * 8 * kEps);
        // + bzeta'(chi_-)
        auto zp = zops::zeta_prime_op(chi_m_at, tol / flag.psi.size());
        asym += Bounded(zp.series.eval(0, 1), zp.bound);
        // - [bzeta(chi_+ log++((a+k)/u+1))]^{[deg_ell > -N]}
        cplx grp(0.0, 0.0);
        for (const auto& t : chi_p.terms())
            for (int q = 1; t.r - q > -N; ++q) {
                Rational qsign(q % 2 == 0 ? -1 : 1, q);
                for (int v = 0; v <= q; ++v) {
                    Rational c = qsign * combinat::binomial(q, v) * Rational(a).pow_int(q - v) /
                                 srat.pow_int(q);
                    grp += t.c * c.to_double() * zops::zeta_of_monomial(t.phi, t.n + v) *
                           std::pow(static_cast<double>(ell), t.r - q) *
                           t.psi.unit_scaled(static_cast<double>(ell));
                }
            }
        // - [chi_{rho+ell lambda} log++(a/u+1)]^{[deg_ell > -N]}
        for (const auto& t : chi0.terms())
            for (int q = 1; t.r - q > -N; ++q) {
                Rational c = Rational(q % 2 == 0 ? -1 : 1, q) * Rational(a).pow_int(q) /
                             srat.pow_int(q);
                grp += t.c * c.to_double() * std::pow(static_cast<double>(ell), t.r - q) *
                       t.psi.unit_scaled(static_cast<double>(ell));
            }
        asym -= Bounded(grp, std::abs(grp) * 16 * kEps);
        // remainder bound on chi_+
        for (const auto& g : group_terms(chi_p, static_cast<double>(ell)))
            asym.bound += std::pow(srat.to_double(), -g.r) *
                          zops::remainder_term_bound(std::abs(g.f), g.n, g.r, g.phi,
                                                     static_cast<int>(a), N, u);
    }
    out.asymptotic = asym;
    return out;
}

LeadingCoefficients finski_coefficients(const HomogeneousSpace& s, int N, double tol) {
    if (s.name != "P1" && s.name != "P2" && s.name != "P3")
        throw std::domain_error("finski_coefficients: projective-space catalogue only");
    int n = s.n();
    AsymptoticValue av = torsion_symmetric_asymptotic(s, 100, TorusPoint::id(),
                                                      X0Metric::lambda_over_2pi(), N, tol);
    LeadingCoefficients out;
    out.top_log = av.coeff(n, 1, 100.0).real();
    out.sub_log = av.coeff(n - 1, 1, 100.0).real();
    out.sub_const = av.coeff(n - 1, 0, 100.0).real();

    double nfact = combinat::factorial(n).get_d();
    double nm1fact = combinat::factorial(n - 1).get_d();
    double zp1 = lerch::zeta_prime_neg(1, 1e-12).re();
    out.top_log_target = 0.5 * n / nfact;
    out.sub_log_target = (3.0 * n + 1.0) / 12.0 * (n + 1.0) / nm1fact;
    out.sub_const_target =
        (24.0 * zp1 + 2.0 * lerch::kLog2Pi + 7.0) / 24.0 * (n + 1.0) / nm1fact;
    return out;
}

}  // namespace torsionkit
