#include "latnorm/zm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latnorm {

std::string ZmTriple::text() const {
    return "ZM(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

ZmTriple validate_zm_triple(long long m, long long n, long long r) {
    if (m < 1 || n < 1 || r < 1)
        throw std::invalid_argument("ZM parameters must be positive integers");
    const long long rr = m == 1 ? 0 : r % m;
    if (m > 1) {
        // gcd(m, r-1) is invariant under reducing r mod m.
        const long long g = std::gcd(m, ((rr - 1) % m + m) % m);
        if (g != 1)
            throw std::invalid_argument("ZM(" + std::to_string(m) + "," + std::to_string(n) +
                                        "," + std::to_string(r) + "): gcd(m, r-1) = " +
                                        std::to_string(g) + " != 1");
    }
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("ZM(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(r) + "): gcd(m,n) = " +
                                    std::to_string(std::gcd(m, n)) + " != 1");
    if (pow_mod(rr, n, m) != 1 % m)
        throw std::invalid_argument("ZM(" + std::to_string(m) + "," + std::to_string(n) + "," +
                                    std::to_string(r) + "): r^n != 1 (mod m)");
    ZmTriple t;
    t.m = m;
    t.n = n;
    t.r = rr;
    t.d = m == 1 ? 1 : multiplicative_order(rr, m);
    return t;
}

bool zm_triple_in_L(const ZmTriple& t, const ZmSubgroupTriple& u) {
    if (u.m1 < 1 || u.n1 < 1 || u.s < 0) return false;
    if (t.m % u.m1 != 0 || t.n % u.n1 != 0 || u.s >= u.m1) return false;
    const long long sum = geometric_sum_mod(t.r, u.n1, t.n, u.m1);
    return (u.s % u.m1) * sum % u.m1 == 0;
}

std::vector<ZmSubgroupTriple> enumerate_L(const ZmTriple& t) {
    std::vector<ZmSubgroupTriple> out;
    for (long long m1 : divisors(t.m))
        for (long long n1 : divisors(t.n)) {
            const long long sum = geometric_sum_mod(t.r, n1, t.n, m1);
            for (long long s = 0; s < m1; ++s)
                if (s * sum % m1 == 0) out.push_back({m1, n1, s});
        }
    // divisors() ascends, so the loop order already gives (m1, n1, s) ascending.
    return out;
}

std::vector<ZmTriple> valid_nonabelian_triples(long long max_mn) {
    std::vector<ZmTriple> out;
    for (long long m = 3; m <= max_mn; ++m)
        for (long long n = 2; m * n <= max_mn; ++n) {
            if (std::gcd(m, n) != 1) continue;
            for (long long r = 2; r < m; ++r) {
                if (std::gcd(m, r) != 1 || std::gcd(m, r - 1) != 1) continue;
                if (pow_mod(r, n, m) != 1) continue;
                ZmTriple t;
                t.m = m;
                t.n = n;
                t.r = r;
                t.d = multiplicative_order(r, m);
                out.push_back(t);
            }
        }
    std::sort(out.begin(), out.end(), [](const ZmTriple& a, const ZmTriple& b) {
        return std::tuple(a.order(), a.m, a.n, a.r) < std::tuple(b.order(), b.m, b.n, b.r);
    });
    return out;
}

}  // namespace latnorm
