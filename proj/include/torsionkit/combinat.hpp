#pragma once

#include <utility>

#include "torsionkit/rational.hpp"

namespace torsionkit::combinat {

// Bernoulli number B_m (B_1 = -1/2). Memoized; thread-safe.
Rational bernoulli(int m);

// Bernoulli polynomial B_m(x) = sum_h C(m,h) B_{m-h} x^h.
Rational bernoulli_poly(int m, const Rational& x);

// Harmonic number H_m = sum_{j=1}^m 1/j, H_0 = 0. Memoized.
Rational harmonic(int m);

// Generalized binomial coefficient for any integer upper argument:
// prod_{j=0}^{k-1} (n-j) / k!.
Rational binomial(long n, int k);

// Binomial with a rational upper argument (same product form).
Rational binomial_rat(const Rational& n, int k);

mpz_class factorial(int n);

// n! / (k_1! k_2! ... k_r!), requires sum k_i == n.
Rational multinomial(int n, const std::vector<int>& parts);

// sum_{m=1}^{a-1} m^N, the Faulhaber value of zeta(-N) - zeta(-N, a).
// Zero for a in {0, 1}.
Rational faulhaber_power_sum(int a, int N);

// Both sides of the closed form for sum_r C(j,r) a^r / (j+m-r).
// lhs and rhs are equal for every m >= 1, j >= 0, rational a.
std::pair<Rational, Rational> nichtha_identity(int m, int j, const Rational& a);

}  // namespace torsionkit::combinat
