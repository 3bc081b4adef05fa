#include "doctest.h"

#include <algorithm>
#include <set>

#include "latnorm/constructors.hpp"
#include "latnorm/lattice.hpp"
#include "support/oracles.hpp"

using namespace latnorm;

namespace {

int index_of_size(const SubgroupLattice& lat, int size) {
    for (int i = 0; i < lat.size(); ++i)
        if (lat.at(i).size == size) return i;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("enumerate_subgroups counts") {
    CHECK(enumerate_subgroups(make_cyclic(12)).size() == 6);  // one per divisor
    CHECK(enumerate_subgroups(direct_product(make_cyclic(2), make_cyclic(2))).size() == 5);
    CHECK(enumerate_subgroups(make_alternating(4)).size() == 10);
}

TEST_CASE("enumeration matches the subset-scan oracle exactly") {
    for (const Group& g : {make_cyclic(6), make_symmetric(3), make_quaternion(8),
                           make_cyclic(12), make_dihedral(10), make_alternating(4),
                           make_zm(3, 4, 2)}) {
        const SubgroupLattice lat = enumerate_subgroups(g);
        const auto oracle = oracles::subgroups_by_subset_scan(g);
        REQUIRE(lat.size() == static_cast<int>(oracle.size()));
        // completeness: every product-closed subset appears in the lattice
        for (const ElementSet& members : oracle) CHECK(lat.index_of(members) >= 0);
    }
}

TEST_CASE("canonical order and endpoints") {
    const SubgroupLattice lat = enumerate_subgroups(make_alternating(4));
    CHECK(lat.at(lat.trivial_index()).size == 1);
    CHECK(lat.at(lat.full_index()).size == 12);
    for (int i = 1; i < lat.size(); ++i) {
        const Subgroup &prev = lat.at(i - 1), &cur = lat.at(i);
        const bool ordered = prev.size < cur.size ||
                             (prev.size == cur.size &&
                              ElementSet::compare(prev.members, cur.members) < 0);
        CHECK(ordered);
    }
}

TEST_CASE("every cyclic subgroup appears") {
    for (const Group& g : {make_symmetric(4), make_zm(5, 4, 2), make_dihedral(18)}) {
        const SubgroupLattice lat = enumerate_subgroups(g);
        for (int x = 0; x < g.order(); ++x)
            CHECK(lat.index_of(closure(g, {x}).members) >= 0);
    }
}

TEST_CASE("closure under meet and join") {
    for (const Group& g : {make_symmetric(4), make_quaternion(16), make_zm(7, 3, 2)}) {
        const SubgroupLattice lat = enumerate_subgroups(g);
        for (int i = 0; i < lat.size(); ++i)
            for (int j = i; j < lat.size(); ++j) {
                const ElementSet meet = lat.at(i).members.intersect(lat.at(j).members);
                CHECK(lat.index_of(meet) >= 0);
                ElementSet u = lat.at(i).members;
                u |= lat.at(j).members;
                CHECK(lat.index_of(closure(g, u).members) >= 0);
            }
    }
}

TEST_CASE("is_maximal_in") {
    const SubgroupLattice z4 = enumerate_subgroups(make_cyclic(4));
    REQUIRE(z4.size() == 3);
    CHECK(z4.is_maximal_in(1, 2));        // Z2 < Z4, index 2
    CHECK_FALSE(z4.is_maximal_in(0, 2));  // Z2 lies strictly between
    CHECK_THROWS_AS(z4.is_maximal_in(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(z4.is_maximal_in(1, 1), std::invalid_argument);

    const SubgroupLattice a4 = enumerate_subgroups(make_alternating(4));
    const int v4 = index_of_size(a4, 4);
    CHECK(a4.is_maximal_in(v4, a4.full_index()));
}

TEST_CASE("open_interval") {
    const SubgroupLattice z5 = enumerate_subgroups(make_cyclic(5));
    CHECK(z5.open_interval(0, z5.full_index()).empty());

    const SubgroupLattice z4 = enumerate_subgroups(make_cyclic(4));
    CHECK(z4.open_interval(0, z4.full_index()) == std::vector<int>{1});

    const SubgroupLattice a4 = enumerate_subgroups(make_alternating(4));
    const auto mid = a4.open_interval(0, a4.full_index());
    CHECK(mid.size() == 8);  // three Z2, four Z3, V4
    CHECK_THROWS_AS(a4.open_interval(1, 2), std::invalid_argument);  // incomparable Z2s
}

TEST_CASE("covers is the transitive reduction of inclusion") {
    for (const Group& g : {make_symmetric(4), make_cyclic(48), make_zm(15, 4, 2),
                           make_alternating(5)}) {
        const SubgroupLattice lat = enumerate_subgroups(g);
        for (int h = 0; h < lat.size(); ++h)
            for (int k = 0; k < lat.size(); ++k) {
                if (h == k || !lat.includes(h, k)) continue;
                const bool has_between = !lat.open_interval(h, k).empty();
                CHECK(lat.covers(h, k) == !has_between);
            }
    }
}

TEST_CASE("enumeration is deterministic") {
    const Group g = make_symmetric(4);
    const SubgroupLattice first = enumerate_subgroups(g);
    const SubgroupLattice second = enumerate_subgroups(g);
    REQUIRE(first.size() == second.size());
    for (int i = 0; i < first.size(); ++i)
        CHECK(first.at(i).members == second.at(i).members);
    CHECK(first.cover_edges() == second.cover_edges());
}

TEST_CASE("progress callback fires for larger enumerations") {
    const Group g = parse_group_spec("Z2 x Z2 x Z2 x Z2 x Z2").build();
    int calls = 0;
    const SubgroupLattice lat = enumerate_subgroups(g, [&](int) { ++calls; });
    CHECK(lat.size() == 374);  // sum of Gaussian binomials [5 k]_2
    CHECK(calls > 0);
}
