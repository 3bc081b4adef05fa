#pragma once

#include <string>
#include <vector>

#include "latnorm/numtheory.hpp"

namespace latnorm {

/// Validated parameters (m, n, r) of the metacyclic presentation
/// <a, b | a^m = b^n = 1, b^-1 a b = a^r> with gcd(m, n) = gcd(m, r-1) = 1
/// and r^n = 1 (mod m). r is stored reduced mod m (0 only when m = 1).
/// d is the multiplicative order of r mod m; the group is abelian iff d = 1.
struct ZmTriple {
    long long m = 1;
    long long n = 1;
    long long r = 0;
    long long d = 1;

    long long order() const { return m * n; }
    bool abelian() const { return d == 1; }
    long long tau_sum() const { return tau(m) + tau(n); }
    std::string text() const;
};

/// One member (m1, n1, s) of the analytic subgroup index set: m1 | m,
/// n1 | n, 0 <= s < m1, and m1 divides s * (r^n - 1)/(r^n1 - 1) where the
/// quotient is the exact geometric-sum integer.
struct ZmSubgroupTriple {
    long long m1 = 1;
    long long n1 = 1;
    long long s = 0;

    bool operator==(const ZmSubgroupTriple&) const = default;
};

/// Checks all defining conditions; throws std::invalid_argument naming the
/// first violated one. Accepts abelian degenerate triples (m = 1).
ZmTriple validate_zm_triple(long long m, long long n, long long r);

/// True iff (m1, n1, s) satisfies the subgroup-triple membership conditions.
bool zm_triple_in_L(const ZmTriple& t, const ZmSubgroupTriple& u);

/// All subgroup triples, sorted by (m1, n1, s). The divisibility condition is
/// evaluated with exact term-by-term modular geometric sums.
std::vector<ZmSubgroupTriple> enumerate_L(const ZmTriple& t);

/// All valid non-abelian triples with m*n <= max_mn, sorted by (m*n, m, n, r).
std::vector<ZmTriple> valid_nonabelian_triples(long long max_mn);

}  // namespace latnorm
