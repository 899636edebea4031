#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace k3o {

using Int = long long;

/// Euler totient. Trial-division factorization; inputs stay tiny (<= ~10^4).
Int euler_phi(Int n);

/// Moebius function: 0 on square factors, (-1)^t for t distinct primes.
Int moebius(Int n);

/// All positive divisors of n, increasing.
std::vector<Int> divisors(Int n);

/// Prime factorization as (prime, exponent) pairs, primes increasing.
std::vector<std::pair<Int, Int>> factorize(Int n);

/// Exact sum of k-th powers of all primitive d-th roots of unity:
/// mu(d/g) * phi(d) / phi(d/g) with g = gcd(d, k).
Int ramanujan_sum(Int d, Int k);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// computed by exact division of x^n - 1 by the lower Phi_d.
std::vector<Int> cyclotomic_poly(Int n);

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }
inline Int lcm(Int a, Int b) { return std::lcm(a, b); }

bool is_prime(Int n);

} // namespace k3o
