#include "torsionkit/combinat.hpp"

#include <mutex>
#include <stdexcept>

namespace torsionkit::combinat {

namespace {
std::mutex g_mutex;
std::vector<Rational> g_bernoulli = {Rational(1)};
std::vector<Rational> g_harmonic = {Rational(0)};
}  // namespace

Rational bernoulli(int m) {
    if (m < 0) throw std::domain_error("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(g_mutex);
    // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1, solved for B_m.
    while (static_cast<int>(g_bernoulli.size()) <= m) {
        int n = static_cast<int>(g_bernoulli.size());
        Rational s(0);
        Rational c(1);  // C(n+1, j), built incrementally
        for (int j = 0; j < n; ++j) {
            s += c * g_bernoulli[j];
            c *= Rational(n + 1 - j, j + 1);
        }
        g_bernoulli.push_back(-s / Rational(n + 1));
    }
    return g_bernoulli[m];
}

Rational bernoulli_poly(int m, const Rational& x) {
    if (m < 0) throw std::domain_error("bernoulli_poly: negative index");
    bernoulli(m);  // fill cache
    Rational acc(0);
    Rational xp(1);
    for (int h = 0; h <= m; ++h) {
        acc += binomial(m, h) * bernoulli(m - h) * xp;
        xp *= x;
    }
    return acc;
}

Rational harmonic(int m) {
    if (m < 0) throw std::domain_error("harmonic: negative index");
    std::lock_guard<std::mutex> lock(g_mutex);
    while (static_cast<int>(g_harmonic.size()) <= m) {
        long n = static_cast<long>(g_harmonic.size());
        g_harmonic.push_back(g_harmonic.back() + Rational(1, n));
    }
    return g_harmonic[m];
}

Rational binomial(long n, int k) {
    if (k < 0) throw std::domain_error("binomial: negative k");
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= Rational(n - j, j + 1);
    return r;
}

Rational binomial_rat(const Rational& n, int k) {
    if (k < 0) throw std::domain_error("binomial: negative k");
    Rational r(1);
    for (int j = 0; j < k; ++j) r *= (n - Rational(j)) / Rational(j + 1);
    return r;
}

mpz_class factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational multinomial(int n, const std::vector<int>& parts) {
    int s = 0;
    mpz_class den(1);
    for (int k : parts) {
        if (k < 0) throw std::domain_error("multinomial: negative part");
        s += k;
        den *= factorial(k);
    }
    if (s != n) throw std::domain_error("multinomial: parts do not sum to n");
    return Rational(factorial(n), den);
}

Rational faulhaber_power_sum(int a, int N) {
    if (a < 0 || N < 0) throw std::domain_error("faulhaber_power_sum: negative argument");
    Rational s(0);
    for (long m = 1; m < a; ++m) s += Rational(m).pow_int(N);
    return s;
}

std::pair<Rational, Rational> nichtha_identity(int m, int j, const Rational& a) {
    if (m < 1 || j < 0) throw std::domain_error("nichtha_identity: need m >= 1, j >= 0");
    Rational lhs(0);
    for (int r = 0; r <= j; ++r)
        lhs += binomial(j, r) * a.pow_int(r) / Rational(j + m - r);

    Rational inner(0);
    for (int r = 0; r < m; ++r)
        inner += binomial(j + r, j) * (-a).pow_int(m - 1 - r);
    Rational rhs = (a.pow_int(m + j) * Rational(m % 2 == 0 ? 1 : -1) +
                    (a + Rational(1)).pow_int(j + 1) * inner) /
                   (Rational(m) * binomial(j + m, m));
    return {lhs, rhs};
}

}  // namespace torsionkit::combinat
