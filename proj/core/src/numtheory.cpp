#include "latnorm/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace latnorm {

long long tau(long long n) {
    if (n < 1) throw std::invalid_argument("tau requires n >= 1");
    long long count = 1;
    for (const auto& [p, a] : factorize(n)) count *= a + 1;
    return count;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int a = 0;
        while (n % p == 0) {
            n /= p;
            ++a;
        }
        out.emplace_back(p, a);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (const auto& [p, a] : factorize(n)) {
        const std::size_t base = out.size();
        long long pk = 1;
        for (int k = 1; k <= a; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long pow_mod(long long base, long long exp, long long m) {
    if (m < 1) throw std::invalid_argument("pow_mod requires modulus >= 1");
    base %= m;
    if (base < 0) base += m;
    long long acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return acc;
}

long long multiplicative_order(long long r, long long m) {
    if (m < 1) throw std::invalid_argument("multiplicative_order requires m >= 1");
    if (m == 1) return 1;
    long long rr = r % m;
    if (rr < 0) rr += m;
    if (std::gcd(rr, m) != 1)
        throw std::invalid_argument("multiplicative_order requires gcd(r, m) = 1, got gcd(" +
                                    std::to_string(r) + ", " + std::to_string(m) + ") != 1");
    long long x = rr % m, k = 1;
    while (x != 1) {
        x = x * rr % m;
        ++k;
    }
    return k;
}

long long geometric_sum_mod(long long r, long long n1, long long n, long long m) {
    if (n1 < 1 || n < 1 || n % n1 != 0)
        throw std::invalid_argument("geometric_sum_mod requires n1 | n");
    if (m < 1) throw std::invalid_argument("geometric_sum_mod requires modulus >= 1");
    const long long terms = n / n1;
    const long long step = pow_mod(r, n1, m);
    long long acc = 0, term = 1 % m;
    for (long long j = 0; j < terms; ++j) {
        acc = (acc + term) % m;
        term = term * step % m;
    }
    return acc;
}

}  // namespace latnorm
