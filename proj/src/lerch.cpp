#include "torsionkit/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace torsionkit::lerch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;

std::mutex g_phi_mutex;

// Numerator polynomials of Phi(z,-m,a) = P_{m,a}(z) / (1-z)^{m+1}.
// Recursion in ascending m: p'_i = (a+i) p_i + (m+2-a-i) p_{i-1}.
struct PhiPoly {
    std::vector<double> coef;
    double abs_sum;
};
PhiPoly phi_poly(int m, int a) {
    static std::map<int, std::vector<std::vector<mpz_class>>> exact;
    static std::map<int, std::vector<PhiPoly>> dbl;
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto& ez = exact[a];
    auto& dz = dbl[a];
    if (ez.empty()) ez.push_back({mpz_class(1)});
    while (static_cast<int>(ez.size()) <= m) {
        int mm = static_cast<int>(ez.size()) - 1;
        const auto& p = ez.back();
        std::vector<mpz_class> q(p.size() + 1, mpz_class(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (i < p.size()) q[i] += mpz_class(a + static_cast<long>(i)) * p[i];
            if (i >= 1) q[i] += mpz_class(mm + 2 - a - static_cast<long>(i)) * p[i - 1];
        }
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        ez.push_back(std::move(q));
    }
    while (dz.size() < ez.size()) {
        const auto& src = ez[dz.size()];
        PhiPoly pp;
        pp.abs_sum = 0.0;
        for (const auto& c : src) {
            double d = c.get_d();
            pp.coef.push_back(d);
            pp.abs_sum += std::fabs(d);
        }
        dz.push_back(std::move(pp));
    }
    return dz[m];
}

cplx cpow_int(cplx z, int e) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

// value + coarse absolute error of Phi(e^{i phi}, -m, a)
std::pair<cplx, double> phi_neg_int_b(const PiAngle& z, int m, int a) {
    if (m < 0 || a < 0) throw std::domain_error("phi_neg_int: negative argument");
    if (z.is_zero()) {
        double v = zeta_neg_int(m, Rational(a)).to_double();
        return {cplx(v, 0.0), std::fabs(v) * 4 * kEps};
    }
    const PhiPoly& p = phi_poly(m, a);
    cplx zz = z.unit();
    cplx num(0.0, 0.0);
    for (size_t i = p.coef.size(); i-- > 0;) num = num * zz + p.coef[i];
    cplx omz = 1.0 - zz;
    cplx den = cpow_int(omz, m + 1);
    cplx v = num / den;
    double err = (p.abs_sum * (2.0 * p.coef.size() + 4) * kEps) / std::abs(den) +
                 std::abs(v) * (m + 3) * 4 * kEps;
    return {v, err};
}

double binom_d(int n, int k) { return combinat::binomial(n, k).to_double(); }

struct KahanC {
    cplx s{0.0, 0.0}, c{0.0, 0.0};
    double abs_sum = 0.0;
    void add(cplx x) {
        abs_sum += std::abs(x);
        cplx y = x - c;
        cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

Rational zeta_neg_int(int m, const Rational& a) {
    return -combinat::bernoulli_poly(m + 1, a) / Rational(m + 1);
}

cplx phi_neg_int(const PiAngle& z, int m, int a) { return phi_neg_int_b(z, m, a).first; }

Bounded hurwitz_zeta(double s, double a) {
    if (!(s > 1.0) || !(a > 0.0)) throw std::domain_error("hurwitz_zeta: need s > 1, a > 0");
    const int M = std::max(4, static_cast<int>(std::ceil(22.0 - a)));
    const int J = 14;
    KahanC sum;
    for (int k = 0; k < M; ++k) sum.add(std::pow(k + a, -s));
    double y = M + a;
    double tail = std::pow(y, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(y, -s);
    double rising = s;  // s(s+1)...(s+2j-2)
    double corr = 0.0, abs_corr = 0.0;
    for (int j = 1; j <= J; ++j) {
        double b = (combinat::bernoulli(2 * j) / Rational(combinat::factorial(2 * j))).to_double();
        double t = b * rising * std::pow(y, -s - 2 * j + 1);
        corr += t;
        abs_corr += std::fabs(t);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
    }
    double b_next =
        (combinat::bernoulli(2 * J + 2) / Rational(combinat::factorial(2 * J + 2))).to_double();
    double rem = std::fabs(b_next * rising * std::pow(y, -s - 2 * J - 1));
    double v = sum.s.real() + tail + corr;
    double err = 2.0 * rem + (sum.abs_sum + std::fabs(tail) + abs_corr) * 8 * kEps;
    return {cplx(v, 0.0), err};
}

double remainder_bound_C(const PiAngle& z, int N, int a) {
    if (N < 1) throw std::domain_error("remainder_bound_C: need N >= 1");
    double nfact = combinat::factorial(N).get_d();
    Bounded zpart;
    if (z.is_zero()) {
        zpart = 2.0 * riemann_zeta(N + 1);
    } else {
        double phat = z.abs_or_2pi() / kTwoPi;  // in (0, 1/2]
        zpart = hurwitz_zeta(N + 1, phat) + hurwitz_zeta(N + 1, 1.0 - phat);
    }
    double faul = combinat::faulhaber_power_sum(a, N).to_double();
    double v = nfact * std::pow(kTwoPi, -(N + 1)) * zpart.re() + faul;
    double err = nfact * std::pow(kTwoPi, -(N + 1)) * zpart.bound;
    return (v + err + std::fabs(faul) * 4 * kEps) * (1.0 + 8 * kEps);
}

Bounded sderiv_asymptotic(const PiAngle& z, int n, double v, int a, int N) {
    if (N < 1 || n < 0 || a < 0 || !(v > 0.0))
        throw std::domain_error("sderiv_asymptotic: bad arguments");
    double logv = std::log(v);
    cplx acc(0.0, 0.0);
    double slop = 0.0;
    for (int m = 0; m <= n; ++m) {
        auto [p, perr] = phi_neg_int_b(z, n - m, a);
        double c = binom_d(n, m) * std::pow(v, m);
        double w = (combinat::harmonic(m) - combinat::harmonic(n)).to_double() - logv;
        acc += c * w * p;
        slop += std::fabs(c * w) * (perr + std::abs(p) * 8 * kEps);
    }
    if (z.is_zero()) {
        double lead = std::pow(v, n + 1) * (logv / (n + 1) - 1.0 / double((n + 1) * (n + 1)));
        acc += lead;
        slop += std::fabs(lead) * 8 * kEps;
    }
    for (int m = 1; m < N; ++m) {
        auto [p, perr] = phi_neg_int_b(z, m + n, a);
        double d = std::pow(-v, m) * m * binom_d(m + n, n);
        acc += p / d;
        slop += (perr + std::abs(p) * 8 * kEps) / std::fabs(d);
    }
    double trunc = remainder_bound_C(z, N + n, a) / (std::pow(v, N) * N * binom_d(N + n, n));
    return {acc, trunc + slop + std::abs(acc) * 4 * kEps};
}

Bounded sderiv_reference(const PiAngle& z, int n, long v0, double tol) {
    if (v0 < 1 || !(tol > 0.0)) throw std::domain_error("sderiv_reference: bad arguments");
    // Cost model for the float part of the bound, used only for selection.
    auto float_model = [&](double V) {
        double mass = 2.0 * std::pow(V + 1.0, n + 1) * std::log(V + 2.0) / (n + 1);
        return mass * kEps * 16.0;
    };
    long bestV = -1;
    int bestN = -1;
    double best = std::numeric_limits<double>::infinity();
    std::vector<long> ladder;
    for (long V = std::max<long>(v0, 8); V <= 1000000; V += std::max<long>(4, V / 2))
        ladder.push_back(V);
    for (long V : ladder) {
        double fl = float_model(static_cast<double>(V));
        if (fl > tol) break;  // larger V only gets worse
        for (int N = 1; N <= 30; ++N) {
            double tr = remainder_bound_C(z, N + n, 1) /
                        (std::pow(static_cast<double>(V), N) * N * binom_d(N + n, n));
            double tot = tr + fl;
            if (tot < best * (1.0 - 1e-12)) {
                best = tot;
                bestV = V;
                bestN = N;
            }
        }
        if (best <= 0.45 * tol) break;  // smallest adequate V wins
    }
    if (bestV < 0 || best > 0.9 * tol)
        throw std::runtime_error("tolerance unreachable");

    const long V = bestV;
    const int N = bestN;
    KahanC sum;
    double phase_slop = 0.0;
    for (long k = v0; k <= V; ++k) {
        double mag = std::pow(static_cast<double>(k), n) * std::log(static_cast<double>(k));
        cplx term = z.is_zero() ? cplx(mag, 0.0) : z.unit_pow(k - v0) * mag;
        sum.add(term);
        phase_slop += std::fabs(mag) * kEps * 10.0;
    }
    Bounded tail = sderiv_asymptotic(z, n, static_cast<double>(V), 1, N);
    cplx phase = z.unit_pow(V + 1 - v0);
    cplx value = phase * tail.value - sum.s;
    double bound = tail.bound + std::abs(tail.value) * 8 * kEps + 2.0 * kEps * sum.abs_sum +
                   phase_slop + std::abs(value) * 4 * kEps;
    return {value, bound};
}

namespace {
std::mutex g_memo_mutex;
std::string angle_key(const PiAngle& a) {
    if (a.exact()) return "E" + a.pi_mult().str();
    char buf[32];
    snprintf(buf, sizeof buf, "F%a", a.rad());
    return buf;
}
}  // namespace

namespace {

// zeta'(s) = -sum_{m>=2} log(m)/m^s for s >= 4, by direct summation with an
// integral tail bound.
Bounded zeta_prime_pos(double s) {
    long M = s >= 8.0 ? 64 : 4096;
    double sum = 0.0, mass = 0.0;
    for (long m = M - 1; m >= 2; --m) {
        double t = std::log(static_cast<double>(m)) * std::pow(static_cast<double>(m), -s);
        sum += t;
        mass += t;
    }
    double lM = std::log(static_cast<double>(M - 1));
    double tail_up = std::pow(static_cast<double>(M - 1), 1.0 - s) *
                     (lM / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    return {cplx(-sum, 0.0), tail_up + mass * 8 * kEps};
}

// certified zeta'(-n) without the reference engine:
//   n = 0: -log sqrt(2 pi)
//   n even: (-1)^{n/2} n! zeta(n+1) / (2 (2 pi)^n)
//   n odd >= 3: zeta(-n) (log 2pi + gamma - H_n - zeta'(n+1)/zeta(n+1)),
// from the logarithmic derivative of the functional equation.
Bounded zeta_prime_neg_closed(int n) {
    if (n == 0) return {cplx(-kLogSqrt2Pi, 0.0), 1e-15};
    if (n % 2 == 0) {
        Bounded z = riemann_zeta(n + 1);
        double f = combinat::factorial(n).get_d() / (2.0 * std::pow(kTwoPi, n));
        double sgn = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        return {sgn * f * z.value, f * z.bound + std::abs(f * z.value) * 8 * kEps};
    }
    Rational zneg = zeta_neg_int(n, Rational(1));
    Bounded zp = zeta_prime_pos(n + 1.0);
    Bounded zv = riemann_zeta(n + 1.0);
    // ratio zp/zv with bound propagation
    cplx ratio = zp.value / zv.value;
    double rbound = (zp.bound + std::abs(ratio) * zv.bound) / std::abs(zv.value);
    double bracket = std::log(kTwoPi) + kEulerGamma - combinat::harmonic(n).to_double();
    cplx v = zneg.to_double() * (bracket - ratio);
    double err = std::fabs(zneg.to_double()) * (rbound + 8 * kEps * (std::fabs(bracket) + std::abs(ratio))) +
                 std::abs(v) * 8 * kEps;
    return {v, err};
}

}  // namespace

Bounded zeta_prime_term(const PiAngle& phi, int n, double tol) {
    static std::map<std::pair<std::string, int>, Bounded> memo;
    auto key = std::make_pair(angle_key(phi), n);
    {
        std::lock_guard<std::mutex> lock(g_memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end() && it->second.bound <= tol) return it->second;
    }
    Bounded r;
    if (phi.is_zero() && n != 1) {
        r = zeta_prime_neg_closed(n);
        if (r.bound > tol) throw std::runtime_error("tolerance unreachable");
    } else {
        Bounded d = sderiv_reference(phi, n, 1, tol);
        r = phi.unit() * d;
    }
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo.find(key);
    if (it == memo.end() || it->second.bound > r.bound) memo[key] = r;
    return r;
}

Bounded zeta_prime_neg(int n, double tol) {
    return zeta_prime_term(PiAngle::zero(), n, tol);
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: need x > 0");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // B_{2j}/(2j x^{2j}) tail
    static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double inv2 = 1.0 / (x * x);
    double s = std::log(x) - 0.5 / x;
    double p = inv2;
    for (double bj : b) {
        s -= bj * p;
        p *= inv2;
    }
    return acc + s;
}

std::pair<double, double> digamma_and_rrot(const PiAngle& phi) {
    if (phi.is_zero()) throw std::domain_error("digamma_and_rrot: phi must be in (0, 2 pi)");
    double phat;
    if (phi.exact()) {
        Rational m = phi.pi_mult();
        if (m.sign() <= 0) m += Rational(2);
        phat = (m / Rational(2)).to_double();
    } else {
        double r = phi.rad();
        if (r <= 0.0) r += kTwoPi;
        phat = r / kTwoPi;
    }
    double psi_half_sum = (digamma(phat) + digamma(1.0 - phat)) / 4.0;
    double rrot = zeta_prime_term(phi, 0, 1e-10).im();
    return {psi_half_sum, rrot};
}

}  // namespace torsionkit::lerch
