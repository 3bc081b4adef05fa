#include "doctest.h"

#include <algorithm>
#include <set>

#include "latnorm/constructors.hpp"
#include "latnorm/normalizers.hpp"
#include "latnorm/zm.hpp"
#include "latnorm/zm_analysis.hpp"
#include "support/oracles.hpp"

using namespace latnorm;

TEST_CASE("validate_zm_triple") {
    const ZmTriple d30 = validate_zm_triple(15, 2, 14);
    CHECK(d30.d == 2);
    CHECK_FALSE(d30.abelian());

    CHECK_THROWS_WITH_AS(validate_zm_triple(4, 2, 3), doctest::Contains("gcd(m, r-1) = 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_zm_triple(3, 6, 2), doctest::Contains("gcd(m,n)"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate_zm_triple(7, 3, 3), doctest::Contains("r^n != 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(validate_zm_triple(0, 2, 1), std::invalid_argument);

    const ZmTriple z54 = validate_zm_triple(5, 4, 2);
    CHECK(z54.d == 4);  // 2^4 = 16 = 1 (mod 5)

    // r stored reduced mod m
    CHECK(validate_zm_triple(15, 2, 29).r == 14);

    // abelian degenerate case: m = 1 gives Z_n, flagged via d = 1
    const ZmTriple zn = validate_zm_triple(1, 12, 1);
    CHECK(zn.abelian());
    CHECK(zn.r == 0);
    CHECK(zn.d == 1);
}

TEST_CASE("enumerate_L for ZM(3,2,2), by hand") {
    const ZmTriple t = validate_zm_triple(3, 2, 2);
    const std::vector<ZmSubgroupTriple> expect = {
        {1, 1, 0}, {1, 2, 0}, {3, 1, 0}, {3, 1, 1}, {3, 1, 2}, {3, 2, 0}};
    CHECK(enumerate_L(t) == expect);
}

TEST_CASE("whole-group and trivial triples always belong to L") {
    for (const ZmTriple& t : valid_nonabelian_triples(80)) {
        CHECK(zm_triple_in_L(t, {1, 1, 0}));
        CHECK(zm_triple_in_L(t, {t.m, t.n, 0}));
        CHECK_FALSE(zm_triple_in_L(t, {t.m, t.n, t.m}));  // s < m1 violated
    }
}

TEST_CASE("|L| matches independent counts") {
    CHECK(enumerate_L(validate_zm_triple(15, 2, 14)).size() == 28);
    CHECK(oracles::dihedral_subgroup_count(15) == 28);
    CHECK(enumerate_L(validate_zm_triple(27, 2, 26)).size() ==
          static_cast<std::size_t>(oracles::dihedral_subgroup_count(27)));
    // abelian degenerate: L enumerates the tau(n) subgroups of Z_n
    CHECK(enumerate_L(validate_zm_triple(1, 12, 1)).size() == tau(12));
}

TEST_CASE("subgroup_from_triple on ZM(3,2,2)") {
    const ZmTriple t = validate_zm_triple(3, 2, 2);
    const Group g = make_zm(t);

    CHECK(subgroup_from_triple(g, t, {3, 2, 0}).size == 1);  // generators are the identity
    CHECK(subgroup_from_triple(g, t, {1, 1, 0}).size == 6);  // contains a and b

    // (3,1,s) are the three order-2 subgroups <b a^s>
    std::set<int> seen;
    for (long long s = 0; s < 3; ++s) {
        const Subgroup h = subgroup_from_triple(g, t, {3, 1, s});
        CHECK(h.size == 2);
        h.members.for_each([&](int x) { seen.insert(x); });
    }
    CHECK(seen.size() == 4);  // identity plus three distinct involutions

    CHECK_THROWS_WITH_AS(subgroup_from_triple(g, t, {3, 2, 1}), doctest::Contains("not a member"),
                         std::invalid_argument);
    CHECK_THROWS_AS(subgroup_from_triple(make_cyclic(6), t, {1, 1, 0}), std::invalid_argument);
}

TEST_CASE("verify_bijection on the named triples") {
    for (auto [m, n, r] : {std::tuple{3LL, 2LL, 2LL}, {15LL, 2LL, 14LL}, {7LL, 3LL, 2LL},
                           {5LL, 4LL, 2LL}, {1LL, 12LL, 1LL}}) {
        const BijectionReport rep = verify_bijection(validate_zm_triple(m, n, r));
        CHECK(rep.pass);
        CHECK(rep.first_discrepancy.empty());
        CHECK(rep.l_size == rep.lattice_size);
    }
    CHECK(verify_bijection(validate_zm_triple(3, 2, 2)).lattice_size == 6);
    CHECK(verify_bijection(validate_zm_triple(15, 2, 14)).lattice_size == 28);
}

TEST_CASE("subgroup_from_triple is injective and order-correct across L") {
    for (const ZmTriple& t : valid_nonabelian_triples(60)) {
        const Group g = make_zm(t);
        std::set<std::vector<int>> distinct;
        for (const ZmSubgroupTriple& u : enumerate_L(t)) {
            const Subgroup h = subgroup_from_triple(g, t, u);
            CHECK(h.size == t.order() / (u.m1 * u.n1));
            distinct.insert(h.members.members());
        }
        CHECK(distinct.size() == enumerate_L(t).size());
    }
}

TEST_CASE("center formula Z = <b^d>") {
    for (const ZmTriple& t : valid_nonabelian_triples(60)) {
        const Group g = make_zm(t);
        const int b_to_d = static_cast<int>((t.d % t.n) * t.m);
        CHECK(center(g).members == closure(g, {b_to_d}).members);
    }
}

TEST_CASE("zm_search finds the expected triples") {
    const auto k4 = zm_search(60, 4);
    auto has = [](const std::vector<ZmSearchHit>& hits, long long m, long long n, long long r) {
        return std::any_of(hits.begin(), hits.end(), [&](const ZmSearchHit& h) {
            return h.triple.m == m && h.triple.n == n && h.triple.r == r;
        });
    };
    CHECK(has(k4, 15, 2, 14));

    const auto k2 = zm_search(60, 2);
    CHECK(has(k2, 3, 2, 2));
    // k = 2 hits are exactly the non-abelian order-pq triples in range
    for (const ZmSearchHit& h : k2) {
        CHECK(is_prime(h.triple.m));
        CHECK(is_prime(h.triple.n));
    }
    for (const ZmTriple& t : valid_nonabelian_triples(60))
        if (is_prime(t.m) && is_prime(t.n)) CHECK(has(k2, t.m, t.n, t.r));

    // results are sorted by (order, m, n, r)
    for (std::size_t i = 1; i < k4.size(); ++i) {
        const auto key = [](const ZmSearchHit& h) {
            return std::tuple(h.order, h.triple.m, h.triple.n, h.triple.r);
        };
        CHECK(key(k4[i - 1]) < key(k4[i]));
    }
}

TEST_CASE("zm_search tau bound filter") {
    const auto bounded = zm_search(60, 4, 6);
    const auto unbounded = zm_search(60, 4);
    CHECK(bounded.size() == unbounded.size());  // bound 6 keeps every k=4 hit
    for (const ZmSearchHit& h : bounded) CHECK(h.tau_sum <= 6);
    CHECK(zm_search(60, 4, 3).empty());
}

TEST_CASE("zm_search is deterministic under threading") {
    const auto serial = zm_search(60, 4, -1, 1);
    const auto parallel = zm_search(60, 4, -1, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].triple.m == parallel[i].triple.m);
        CHECK(serial[i].triple.n == parallel[i].triple.n);
        CHECK(serial[i].triple.r == parallel[i].triple.r);
    }
}

TEST_CASE("deficiency respects the tau lower bound") {
    for (const ZmTriple& t : valid_nonabelian_triples(60)) {
        const Group g = make_zm(t);
        const NormalizerReport rep = normalizer_report(g, enumerate_subgroups(g));
        CHECK(rep.deficiency_k >= t.tau_sum() - 2);
    }
}
