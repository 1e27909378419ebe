#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "torsionkit/torsion_hs.hpp"

using namespace torsionkit;

namespace {
constexpr double kPi = std::numbers::pi;

QVec qv(std::initializer_list<Rational> xs) { return QVec(xs); }
}  // namespace

TEST_CASE("Weyl groups by closure") {
    CHECK(RootSystem::get(RSType::A1).weyl.size() == 2);
    CHECK(RootSystem::get(RSType::A2).weyl.size() == 6);
    CHECK(RootSystem::get(RSType::A3).weyl.size() == 24);
    CHECK(RootSystem::get(RSType::B2).weyl.size() == 8);
    CHECK(RootSystem::get(RSType::G2).weyl.size() == 12);
    CHECK(RootSystem::get(RSType::G2).roots.size() == 12);
    // sign is a homomorphism onto {+-1}: half the elements are even
    int even = 0;
    for (const auto& w : RootSystem::get(RSType::B2).weyl)
        if (w.sign == 1) ++even;
    CHECK(even == 4);
}

TEST_CASE("virtual Weyl dimension") {
    const RootSystem& A1 = RootSystem::get(RSType::A1);
    CHECK(weyl_dim_virtual(A1, A1.rho) == Rational(1));
    CHECK(weyl_dim_virtual(A1, qvec_add(A1.rho, A1.fundamental[0])) == Rational(2));
    const RootSystem& A2 = RootSystem::get(RSType::A2);
    CHECK(weyl_dim_virtual(A2, qvec_add(A2.rho, A2.rho)) == Rational(8));
    // reflection antisymmetry: singular weight gives zero
    CHECK(weyl_dim_virtual(A1, qv({Rational(0)})).is_zero());
}

TEST_CASE("canonical scalar product, strange formula, Gordon Brown") {
    const RootSystem& A1 = RootSystem::get(RSType::A1);
    Rational c = A1.canonical_scale();
    CHECK(c * A1.norm2(A1.simple[0]) == Rational(1, 2));
    for (RSType t : {RSType::A1, RSType::A2, RSType::A3, RSType::B2, RSType::G2}) {
        const RootSystem& G = RootSystem::get(t);
        Rational cg = G.canonical_scale();
        // dim G = 24 |rho|_G^2
        CHECK(Rational(G.dim()) == Rational(24) * cg * G.ip(G.rho, G.rho));
        // 2 sum_{positive} |a|_G^2 = rank
        Rational s(0);
        for (const auto& a : G.positive) s += cg * G.ip(a, a);
        CHECK(Rational(2) * s == Rational(G.rank));
    }
}

TEST_CASE("space catalogue and closed constants") {
    const auto& p1 = make_space(SpaceId::P1);
    const auto& p2 = make_space(SpaceId::P2);
    const auto& p3 = make_space(SpaceId::P3);
    const auto& gr = make_space(SpaceId::Gr24);
    CHECK(p1.n() == 1);
    CHECK(p2.n() == 2);
    CHECK(p3.n() == 3);
    CHECK(gr.n() == 4);
    CHECK(make_space(SpaceId::Flag3).n() == 3);

    auto c1 = space_constants(p1);
    CHECK(c1.rho_relation_ok);
    CHECK(c1.norm_relation_ok);
    CHECK(!c1.killing_ratio.has_value());

    auto c2 = space_constants(p2);
    CHECK(c2.rho_relation_ok);
    CHECK(c2.norm_relation_ok);
    REQUIRE(c2.killing_ratio.has_value());
    // (3 dim K - dim G)/(2(dim K - 1)) with dim K = 4, dim G = 8
    CHECK(*c2.killing_ratio == Rational(2, 3));
    CHECK(*c2.killing_ratio ==
          Rational(3 * p2.dim_k() - p2.G->dim(), 2 * (p2.dim_k() - 1)));

    auto cg = space_constants(gr);
    CHECK(*cg.killing_ratio == Rational(1, 2));
    CHECK(cg.rho_relation_ok);
    CHECK(cg.norm_relation_ok);

    for (const auto* s : {&p1, &p2, &gr}) CHECK(dimension_identity_holds(*s));
}

TEST_CASE("characters at the identity and at regular points") {
    const auto& p1 = make_space(SpaceId::P1);
    // X = 0: dimension polynomial ell + 2k + 1
    BiPoly ch = character_identity_poly(p1, p1.G->positive[0]);
    CHECK(ch.eval(Rational(2), Rational(3)) == Rational(8));
    CHECK(ch.deg_l() == 1);
    CHECK(ch.deg_k() == 1);

    // regular X with alpha(X) = 1/6, i.e. phi = 2 pi/6 = pi/3:
    // chi = sin((ell+2k+1) phi/2)/sin(phi/2)
    TorusPoint X = TorusPoint::rational(qv({Rational(1, 12)}));
    CHECK(is_regular(*p1.G, X));
    ExpPoly chi = character_family(p1, p1.G->positive[0], X);
    double phi = 2.0 * kPi / 6.0;
    for (long k : {0L, 1L, 5L})
        for (long ell : {0L, 3L, 10L}) {
            double expect = std::sin((ell + 2 * k + 1) * phi / 2.0) / std::sin(phi / 2.0);
            cplx got = chi.eval(static_cast<double>(k), static_cast<double>(ell));
            CHECK(std::abs(got - cplx(expect, 0.0)) < 1e-12);
        }
    // degree bounds: ell-degree n at the identity, 0 at regular points
    const auto& gr = make_space(SpaceId::Gr24);
    CHECK(character_identity_poly(gr, gr.psi[0]).deg_l() == gr.n());
    CHECK(chi.max_v_deg() == 0);
    CHECK_THROWS_AS(character_family(p1, p1.G->positive[0],
                                     TorusPoint::rational(qv({Rational(1, 2)}))),
                    std::domain_error);  // alpha(X) = 1 is singular
}

TEST_CASE("central weights factor out of K-characters") {
    // chi^K_{rho_K + ell lambda + mu}(e^X) = e^{2 pi i ell lambda(X)} chi^K_{rho_K+mu}(e^X)
    struct Case {
        SpaceId id;
        QVec mu;
        QVec x;
    };
    std::vector<Case> cases = {
        {SpaceId::P2, qv({Rational(1), Rational(1, 3)}), qv({Rational(1, 5), Rational(1, 7)})},
        {SpaceId::Gr24,
         qv({Rational(1, 2), Rational(2), Rational(1, 3)}),
         qv({Rational(1, 5), Rational(1, 7), Rational(1, 11)})},
    };
    for (const auto& c : cases) {
        const auto& s = make_space(c.id);
        TorusPoint X = TorusPoint::rational(c.x);
        for (long ell : {1L, 2L, 7L}) {
            cplx lhs = character_k(s, qvec_add(qvec_scale(Rational(ell), s.lambda), c.mu), X);
            cplx rhs = X.angle(*s.G, s.lambda).unit_pow(ell) * character_k(s, c.mu, X);
            CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("weighted dimension sums are affine-linear in k") {
    auto check_linear = [](RSType t, const std::vector<QVec>& weights) {
        const RootSystem& G = RootSystem::get(t);
        std::vector<Rational> vals;
        for (long k = -4; k <= 4; ++k) {
            Rational f(0);
            for (const auto& w : weights) {
                QVec x = qvec_add(G.rho, qvec_scale(Rational(k), w));
                f += G.ip(w, G.rho) * weyl_dim_virtual(G, x);
            }
            vals.push_back(f);
        }
        for (size_t i = 2; i < vals.size(); ++i)
            CHECK((vals[i] - Rational(2) * vals[i - 1] + vals[i - 2]).is_zero());
    };
    const RootSystem& A1 = RootSystem::get(RSType::A1);
    check_linear(RSType::A1, {A1.fundamental[0], qvec_neg(A1.fundamental[0])});
    check_linear(RSType::A1, A1.roots);
    const RootSystem& A2 = RootSystem::get(RSType::A2);
    QVec w1 = A2.fundamental[0];
    check_linear(RSType::A2,
                 {w1, qvec_sub(w1, A2.simple[0]),
                  qvec_sub(qvec_sub(w1, A2.simple[0]), A2.simple[1])});
    check_linear(RSType::A2, A2.roots);
    const RootSystem& B2 = RootSystem::get(RSType::B2);
    QVec e1 = qvec_add(B2.simple[0], B2.simple[1]);
    QVec e2 = B2.simple[1];
    check_linear(RSType::B2, {e1, qvec_neg(e1), e2, qvec_neg(e2)});
    check_linear(RSType::B2, B2.roots);
}

TEST_CASE("reflection symmetry of the character family") {
    // chi_{rho+ell lambda-k alpha} = -chi_{rho+ell lambda+(k-<a^vee,rho+ell lambda>)alpha},
    // exactly, on the polynomial representatives at X = 0
    for (SpaceId id : {SpaceId::P1, SpaceId::P2, SpaceId::Gr24}) {
        const auto& s = make_space(id);
        for (const auto& alpha : s.psi)
            for (long ell : {1L, 4L}) {
                BiPoly minus = character_identity_poly(s, qvec_neg(alpha));
                BiPoly plus = character_identity_poly(s, alpha);
                long c = s.G->pair_co(alpha, s.G->rho).to_long() +
                         ell * s.G->pair_co(alpha, s.lambda).to_long();
                // instantiate ell on both sides, then substitute k -> k - c
                std::vector<Rational> lhs = minus.at_ell(Rational(ell));
                BiPoly shifted = plus.subst_k_affine(Rational(-c), Rational(1), Rational(0));
                std::vector<Rational> rhs = shifted.at_ell(Rational(ell));
                lhs.resize(std::max(lhs.size(), rhs.size()), Rational(0));
                rhs.resize(lhs.size(), Rational(0));
                for (size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == -rhs[i]);
            }
    }
}

TEST_CASE("exact symmetric torsion vs asymptotic expansion (P2)") {
    const auto& p2 = make_space(SpaceId::P2);
    X0Metric m = X0Metric::lambda_over_2pi();
    long ell = 5;
    Bounded ex = torsion_symmetric_exact(p2, ell, TorusPoint::id(), m, 1e-9);
    AsymptoticValue as = torsion_symmetric_asymptotic(p2, ell, TorusPoint::id(), m, 10, 1e-9);
    CHECK(std::abs(ex.value - as.value()) <= ex.bound + as.bound());
    CHECK(std::fabs(ex.value.imag()) <= ex.bound);
}

TEST_CASE("flag expansion self-consistency and fixed-point leading term") {
    const auto& f3 = make_space(SpaceId::Flag3);
    TorusPoint X = TorusPoint::rational(qv({Rational(1, 5), Rational(1, 7)}));
    X0Metric m = X0Metric::lambda_over_2pi();
    long ell = 100;
    AsymptoticValue a6 = torsion_flag_asymptotic(f3, ell, X, m, 6, 1e-9);
    AsymptoticValue a10 = torsion_flag_asymptotic(f3, ell, X, m, 10, 1e-9);
    CHECK(std::abs(a6.value() - a10.value()) <= a6.bound() + a10.bound());

    // log ell coefficient equals the fixed point formula
    cplx lead = a10.coeff(0, 1, static_cast<double>(ell));
    cplx fp = fixed_point_leading(f3, ell, X);
    CHECK(std::abs(lead - fp) < 1e-9);

    const auto& p1 = make_space(SpaceId::P1);
    TorusPoint Xp = TorusPoint::rational(qv({Rational(1, 12)}));  // phi = pi/3
    cplx fpp = fixed_point_leading(p1, 7, Xp);
    double phi = kPi / 3.0;
    double expect = std::cos((7 + 2) * phi / 2.0) / (-2.0 * std::sin(phi / 2.0) * std::sin(phi / 2.0));
    CHECK(std::abs(fpp - cplx(expect, 0.0)) < 1e-12);
    AsymptoticValue ap = torsion_flag_asymptotic(p1, 7, Xp, m, 8, 1e-9);
    CHECK(std::abs(ap.coeff(0, 1, 7.0) - fpp) < 1e-9);
    // equivalently -bzeta sum_alpha chi_{+k alpha}
    ExpPoly chi = character_family(p1, p1.G->positive[0], Xp).instantiate_v(7);
    CHECK(std::abs(-zops::zeta_op(chi).eval(0, 1) - fpp) < 1e-12);
    // ell = 0, phi = pi: cos(pi)/(-2) = 1/2
    TorusPoint Xpi = TorusPoint::rational(qv({Rational(1, 4)}));
    CHECK(std::abs(fixed_point_leading(p1, 0, Xpi) - cplx(0.5, 0.0)) < 1e-12);
}

TEST_CASE("signed character log-sums: exact value and expansion") {
    const RootSystem& A1 = RootSystem::get(RSType::A1);
    // A1, lambda = omega, ell = 3: exact value 2 log 3
    auto jp = jantzen_pair(RSType::A1, A1.fundamental[0], TorusPoint::id(), 3, 8, 1e-8);
    CHECK(std::fabs(jp.exact.value.real() - 2.0 * std::log(3.0)) < 1e-12);
    CHECK(std::fabs(jp.exact.value.imag()) < 1e-12);

    for (long ell : {20L, 40L}) {
        auto j = jantzen_pair(RSType::A1, A1.fundamental[0], TorusPoint::id(), ell, 8, 1e-8);
        CHECK(std::abs(j.exact.value - j.asymptotic.value) <=
              j.exact.bound + j.asymptotic.bound);
    }
    const RootSystem& A2 = RootSystem::get(RSType::A2);
    auto j2 = jantzen_pair(RSType::A2, A2.rho, TorusPoint::id(), 20, 8, 1e-5);
    CHECK(std::abs(j2.exact.value - j2.asymptotic.value) <= j2.exact.bound + j2.asymptotic.bound);
    // and at a regular point
    TorusPoint X = TorusPoint::rational(qv({Rational(1, 5), Rational(1, 7)}));
    auto j3 = jantzen_pair(RSType::A2, A2.rho, X, 20, 8, 1e-5);
    CHECK(std::abs(j3.exact.value - j3.asymptotic.value) <= j3.exact.bound + j3.asymptotic.bound);
}

TEST_CASE("leading coefficients match the closed constants") {
    auto f1 = finski_coefficients(make_space(SpaceId::P1), 10, 1e-9);
    CHECK(std::fabs(f1.top_log - 0.5) < 1e-10);
    CHECK(std::fabs(f1.sub_log - 2.0 / 3.0) < 1e-10);
    CHECK(std::fabs(f1.top_log - f1.top_log_target) < 1e-6);
    CHECK(std::fabs(f1.sub_log - f1.sub_log_target) < 1e-6);
    CHECK(std::fabs(f1.sub_const - f1.sub_const_target) < 1e-6);

    auto f2 = finski_coefficients(make_space(SpaceId::P2), 10, 1e-9);
    CHECK(std::fabs(f2.sub_log - 7.0 / 4.0) < 1e-10);
    CHECK(std::fabs(f2.top_log - f2.top_log_target) < 1e-6);
    CHECK(std::fabs(f2.sub_const - f2.sub_const_target) < 1e-6);
}
