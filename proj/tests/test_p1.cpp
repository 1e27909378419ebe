#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "torsionkit/torsion_hs.hpp"
#include "torsionkit/torsion_p1.hpp"

using namespace torsionkit;
namespace tp = torsionkit::p1;

namespace {
constexpr double kPi = std::numbers::pi;

double simpson(double a, double b, int n, auto&& f) {
    double h = (b - a) / n, s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}
}  // namespace

TEST_CASE("exact torsion special values") {
    PiAngle pi_ang = PiAngle::of_pi(Rational(1));
    Bounded t0 = tp::exact(0, pi_ang, 0.0, 1e-10);
    CHECK(std::fabs(t0.re()) <= t0.bound + 1e-14);
    Bounded t1 = tp::exact(1, pi_ang, 0.0, 1e-10);
    CHECK(std::fabs(t1.re()) <= t1.bound + 1e-14);
    // reflection: T(O(-l)) = T(O(l-2)) in the Fubini-Study normalization
    PiAngle phi = PiAngle::of_pi(Rational(1, 3));
    for (long l : {3L, 6L}) {
        Bounded a = tp::exact(-l, phi, 0.0, 1e-10);
        Bounded b = tp::exact(l - 2, phi, 0.0, 1e-10);
        CHECK(std::fabs(a.re() - b.re()) <= a.bound + b.bound + 1e-13);
    }
}

TEST_CASE("exact torsion agrees with the homogeneous-space formula") {
    const auto& s = make_space(SpaceId::P1);
    // alpha(X) = 1/6 gives the rotation angle phi = pi/3
    TorusPoint X = TorusPoint::rational(QVec{Rational(1, 12)});
    X0Metric m = X0Metric::rational_vec(s.lambda);  // alpha^vee(X0) = 1
    for (long ell : {2L, 9L}) {
        Bounded hs = torsion_symmetric_exact(s, ell, X, m, 1e-9);
        Bounded px = tp::exact(ell, PiAngle::of_pi(Rational(1, 3)), 0.0, 1e-9);
        CHECK(std::fabs(hs.value.real() - px.re()) <= hs.bound + px.bound + 1e-12);
    }
}

TEST_CASE("exact vs asymptotic expansion") {
    for (Rational fr : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
        PiAngle phi = PiAngle::of_pi(fr);
        for (long ell : {50L, 100L, 200L}) {
            Bounded ex = tp::exact(ell, phi, 0.25, 1e-10);
            AsymptoticValue as = tp::asymptotic(ell, phi, 0.25, 10);
            double err = std::abs(ex.value - as.value());
            CHECK(err <= as.bound_trunc + as.bound_eval + ex.bound);
            CHECK(err <= as.bound_trunc + 1e-9);  // display bound dominates
        }
    }
}

TEST_CASE("asymptotic expansion matches the flag evaluator") {
    const auto& s = make_space(SpaceId::P1);
    TorusPoint X = TorusPoint::rational(QVec{Rational(1, 12)});
    X0Metric m = X0Metric::rational_vec(s.lambda);
    long ell = 60;
    AsymptoticValue flag = torsion_flag_asymptotic(s, ell, X, m, 10, 1e-9);
    AsymptoticValue px = tp::asymptotic(ell, PiAngle::of_pi(Rational(1, 3)), 0.0, 10);
    CHECK(std::abs(flag.value() - px.value()) < 1e-9);
    // log ell coefficients agree: cos((ell+2) phi/2)/(-2 sin^2(phi/2))
    double phi = kPi / 3.0;
    double lead = std::cos((ell + 2) * phi / 2.0) / (-2.0 * std::sin(phi / 2.0) * std::sin(phi / 2.0));
    CHECK(std::abs(px.coeff(0, 1, static_cast<double>(ell)) - cplx(lead, 0.0)) < 1e-12);
    CHECK(std::abs(flag.coeff(0, 1, static_cast<double>(ell)) - cplx(lead, 0.0)) < 1e-12);
}

TEST_CASE("boundary kernel and its derivatives") {
    double t = 1.0;
    // both branch formulas against a long-double direct evaluation
    for (double x : {0.3, 0.74, 0.76, 0.9, 0.995}) {
        long double xl = x, tl = t;
        long double direct = (xl / sinl(tl * xl / 2) - 1.0L / sinl(tl / 2)) /
                             (tl * (1 - xl * xl));
        CHECK(tp::f_kernel(x, t) == doctest::Approx(static_cast<double>(direct)).epsilon(1e-11));
    }
    CHECK(std::isfinite(tp::f_kernel(1.0, t)));
    CHECK(tp::f_kernel(-0.4, t) == tp::f_kernel(0.4, t));  // even
    // partial-fraction series oracle at r = 0.3
    double series = 0.0;
    for (int p = 1; p <= 200000; ++p) {
        double cp = 2.0 * p * kPi / t;
        double term = (4.0 / (t * t)) * cp * cp / ((cp * cp - 0.09) * (1.0 - cp * cp));
        series += (p % 2 == 0 ? term : -term);
    }
    CHECK(tp::f_kernel(0.3, t) == doctest::Approx(-series).epsilon(1e-8));
    // f^{(0)}(1) equals the kernel value at 1
    CHECK(tp::f_deriv_at_one(0, t) == doctest::Approx(tp::f_kernel(1.0, t)).epsilon(1e-8));
}

TEST_CASE("sine and cosine integrals") {
    CHECK(tp::si_ci(1.0).si == doctest::Approx(0.9460830703671830).epsilon(1e-12));
    CHECK(tp::si_ci(1.0).ci == doctest::Approx(0.3374039229009681).epsilon(1e-11));
    // quadrature oracle at x = 50 (asymptotic branch)
    double si50 = simpson(0.0, 50.0, 200000, [](double r) { return r == 0.0 ? 1.0 : std::sin(r) / r; });
    CHECK(tp::si_ci(50.0).si == doctest::Approx(si50).epsilon(1e-10));
    // Ci via Si of the complementary cosine integral: Ci(x) = gamma + log x +
    // int_0^x (cos r - 1)/r dr
    double ci50 = lerch::kEulerGamma + std::log(50.0) +
                  simpson(0.0, 50.0, 200000,
                          [](double r) { return r == 0.0 ? 0.0 : (std::cos(r) - 1.0) / r; });
    CHECK(tp::si_ci(50.0).ci == doctest::Approx(ci50).epsilon(1e-9));
}

TEST_CASE("sharp-term series, integral oracle, Si/Ci decomposition") {
    // series vs integral representation at small ell
    for (long ell : {2L, 6L}) {
        Bounded hs = tp::lie_hash_series(ell, 1.0, 48);
        double oracle = tp::oscillatory_integral_oracle(std::labs(ell + 1), 1.0, 1e-10);
        CHECK(std::fabs(hs.re() - oracle) < 1e-7);
        CHECK(std::fabs(hs.re() - oracle) <= hs.bound + 1e-9);
    }
    // t -> 0 limit of the leading coefficient: -2 B_2(-ell/2)
    Bounded small = tp::lie_hash_series(2, 1e-4, 10);
    CHECK(small.re() == doctest::Approx(-2.0 * (13.0 / 6.0)).epsilon(1e-6));

    // Si/Ci decomposition of the integral
    double t = 1.0;
    for (long lt : {50L, 100L}) {
        double x = static_cast<double>(lt) * t;
        auto sc = tp::si_ci(x);
        double fpart = simpson(-1.0, 1.0, 400000, [&](double r) {
            return std::cos(x * r / 2.0) * tp::f_kernel(r, t);
        });
        double rhs = -fpart -
                     (std::sin(x / 2.0) * sc.si -
                      std::cos(x / 2.0) * (lerch::kEulerGamma - sc.ci + std::log(x))) /
                         (t * std::sin(t / 2.0));
        double oracle = tp::oscillatory_integral_oracle(lt, t, 1e-10);
        CHECK(std::fabs(oracle - rhs) < 1e-8);
    }
}

TEST_CASE("log-sum expansion and the full Lie-torsion asymptotics") {
    double t = 1.0;
    for (long ltilde : {60L, 120L}) {
        AsymptoticValue ls = tp::logsum_asymptotic(ltilde, t, 10);
        double direct = tp::lie_log_sum(ltilde - 1, t);
        CHECK(std::fabs(ls.value().real() - direct) <= ls.bound() + 1e-10);
    }
    // sharp-part expansion vs oracle with error contracting >= 3x per doubling
    std::vector<double> errs;
    for (long ltilde : {50L, 100L, 200L}) {
        AsymptoticValue ha = tp::hash_asymptotic(ltilde, t, 4);
        double oracle = tp::oscillatory_integral_oracle(ltilde, t, 1e-11);
        double err = std::fabs(ha.value().real() - oracle);
        CHECK(err <= ha.bound());
        errs.push_back(err);
    }
    CHECK(errs[0] / errs[1] >= 3.0);
    CHECK(errs[1] / errs[2] >= 3.0);
    // bracketing at N and N+2
    for (long ltilde : {50L, 100L}) {
        double oracle = tp::oscillatory_integral_oracle(ltilde, t, 1e-11);
        for (int N : {4, 6}) {
            AsymptoticValue ha = tp::hash_asymptotic(ltilde, t, N);
            CHECK(std::fabs(ha.value().real() - oracle) <= ha.bound());
        }
    }
    // full value: series evaluation vs expanded evaluation
    for (long ell : {49L, 99L}) {
        Bounded srs = tp::lie_series(ell, t, 58);
        AsymptoticValue asym = tp::lie_asymptotic(ell, t, 8);
        CHECK(std::fabs(srs.re() - asym.value().real()) <= srs.bound + asym.bound() + 1e-7);
    }
}

TEST_CASE("series order consistency") {
    Bounded a = tp::lie_series(4, 1.0, 40);
    Bounded b = tp::lie_series(4, 1.0, 50);
    CHECK(std::fabs(a.re() - b.re()) <= a.bound + b.bound);
    CHECK(std::fabs(a.im()) < 1e-12);
    // spec'd finite-sum spot value at ell = 2, t = 1
    double expect = 0.0;
    for (int m = 1; m <= 3; ++m)
        expect += std::sin((2.0 * m - 3.0) / 2.0) / std::sin(0.5) * std::log(static_cast<double>(m));
    CHECK(tp::lie_log_sum(2, 1.0) == doctest::Approx(expect).epsilon(1e-14));
}
