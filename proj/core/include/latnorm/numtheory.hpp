#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace latnorm {

/// Number of positive divisors of n (n >= 1).
long long tau(long long n);

bool is_prime(long long n);

/// Prime factorization as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Divisors of n in ascending order.
std::vector<long long> divisors(long long n);

/// base^exp mod m, with 0^0 = 1; m >= 1.
long long pow_mod(long long base, long long exp, long long m);

/// Least k >= 1 with r^k = 1 (mod m); returns 1 when m == 1.
/// Throws std::invalid_argument when gcd(r, m) != 1.
long long multiplicative_order(long long r, long long m);

/// Sum of the n/n1 terms r^(j*n1), j = 0..n/n1-1, reduced mod m.
/// This is the exact integer (r^n - 1)/(r^n1 - 1) taken mod m; n1 must divide n.
long long geometric_sum_mod(long long r, long long n1, long long n, long long m);

}  // namespace latnorm
