#include "doctest.h"

#include <algorithm>

#include "latnorm/constructors.hpp"
#include "latnorm/normalizers.hpp"

using namespace latnorm;

namespace {

struct Analyzed {
    Group g;
    SubgroupLattice lat;
    NormalizerReport rep;
};

Analyzed run(Group g) {
    SubgroupLattice lat = enumerate_subgroups(g);
    NormalizerReport rep = normalizer_report(g, lat);
    return {std::move(g), std::move(lat), std::move(rep)};
}

int find_order2_subgroup(const SubgroupLattice& lat) {
    for (int i = 0; i < lat.size(); ++i)
        if (lat.at(i).size == 2) return i;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("normalizer basics") {
    const Group s3 = make_symmetric(3);
    CHECK(normalizer(s3, s3.whole_subgroup()).size == 6);
    CHECK(normalizer(s3, s3.trivial_subgroup()).size == 6);

    // a transposition subgroup is self-normalizing (3 conjugates force index 3)
    const SubgroupLattice lat = enumerate_subgroups(s3);
    const int z2 = find_order2_subgroup(lat);
    const Subgroup n = normalizer(s3, lat.at(z2));
    CHECK(n.members == lat.at(z2).members);
}

TEST_CASE("normalizer of the Klein four subgroup of A4 is all of A4") {
    const Group a4 = make_alternating(4);
    const SubgroupLattice lat = enumerate_subgroups(a4);
    for (int i = 0; i < lat.size(); ++i)
        if (lat.at(i).size == 4) CHECK(normalizer(a4, lat.at(i)).size == 12);
}

TEST_CASE("normalizer_report on the named examples") {
    const Analyzed z5 = run(make_cyclic(5));
    CHECK(z5.lat.size() == 2);
    CHECK(z5.rep.normalizer_set.size() == 1);
    CHECK(z5.rep.deficiency_k == 1);

    CHECK(run(make_zm(3, 2, 2)).rep.deficiency_k == 2);

    const Analyzed q8 = run(make_quaternion(8));
    CHECK(q8.lat.size() == 6);
    CHECK(q8.rep.normalizer_set.size() == 1);
    CHECK(q8.rep.deficiency_k == 5);

    const Analyzed a4 = run(make_alternating(4));
    CHECK(a4.lat.size() == 10);
    CHECK(a4.rep.deficiency_k == 4);
}

TEST_CASE("report structure invariants") {
    for (const Group& src : {make_symmetric(4), make_quaternion(16), make_zm(5, 4, 3),
                             make_cyclic(1), make_dihedral(12)}) {
        const Analyzed a = run(src);
        // H is always contained in its normalizer
        for (int i = 0; i < a.lat.size(); ++i)
            CHECK(a.lat.includes(i, a.rep.normalizer_of[i]));
        // trivial and whole group normalize to the whole group
        CHECK(a.rep.normalizer_of[a.lat.trivial_index()] == a.lat.full_index());
        CHECK(a.rep.normalizer_of[a.lat.full_index()] == a.lat.full_index());
        // the trivial subgroup is a normalizer only in the trivial group
        if (a.g.order() > 1)
            CHECK_FALSE(a.rep.in_normalizer_set(a.lat.trivial_index()));
        // partition sizes add up
        CHECK(static_cast<int>(a.rep.normalizer_set.size() + a.rep.non_normalizers.size()) ==
              a.lat.size());
        CHECK(a.rep.deficiency_k == static_cast<int>(a.rep.non_normalizers.size()));
        // deficiency 0 iff trivial
        CHECK((a.rep.deficiency_k == 0) == (a.g.order() == 1));
    }
}

TEST_CASE("normalizer equivariance and normality, exhaustive at small orders") {
    for (const Group& g : {make_symmetric(3), make_quaternion(8), make_alternating(4),
                           make_dihedral(8), make_zm(7, 3, 2), make_cyclic(24)}) {
        const SubgroupLattice lat = enumerate_subgroups(g);
        for (int i = 0; i < lat.size(); ++i) {
            const Subgroup n = normalizer(g, lat.at(i));
            bool invariant_under_all = true;
            for (int x = 0; x < g.order(); ++x) {
                // N(xHx^-1) = x N(H) x^-1
                const Subgroup lhs = normalizer(g, conjugate_subgroup(g, lat.at(i), x));
                const Subgroup rhs = conjugate_subgroup(g, n, x);
                CHECK(lhs.members == rhs.members);
                invariant_under_all &=
                    conjugate_subgroup(g, lat.at(i), x).members == lat.at(i).members;
            }
            // N(H) = G exactly when H is invariant under every conjugation
            CHECK((n.size == g.order()) == invariant_under_all);
        }
    }
}

TEST_CASE("density verdicts for the named examples") {
    auto density = [](Group g) {
        const Analyzed a = run(std::move(g));
        return has_dense_normalizers(a.g, a.lat, a.rep);
    };

    CHECK(density(make_cyclic(7)).dense);       // vacuous: no qualifying pairs
    CHECK(density(make_zm(3, 2, 2)).dense);     // split by self-normalizing Z2
    CHECK(density(make_zm(7, 3, 2)).dense);
    CHECK_FALSE(density(make_cyclic(6)).dense);

    const Analyzed z4 = run(make_cyclic(4));
    const DensityVerdict v = has_dense_normalizers(z4.g, z4.lat, z4.rep);
    REQUIRE_FALSE(v.dense);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->h == z4.lat.trivial_index());
    CHECK(v.witness->k == z4.lat.full_index());
}

TEST_CASE("density witness really violates the condition") {
    for (const Group& src : {make_cyclic(4), make_cyclic(6), make_alternating(4),
                             make_quaternion(8), make_cyclic(30)}) {
        const Analyzed a = run(src);
        const DensityVerdict v = has_dense_normalizers(a.g, a.lat, a.rep);
        REQUIRE_FALSE(v.dense);
        REQUIRE(v.witness.has_value());
        const int h = v.witness->h, k = v.witness->k;
        CHECK(a.lat.includes(h, k));
        CHECK_FALSE(a.lat.is_maximal_in(h, k));
        for (int x : a.lat.open_interval(h, k)) CHECK_FALSE(a.rep.in_normalizer_set(x));
    }
}

TEST_CASE("density is independent of pair iteration order") {
    for (const Group& src : {make_cyclic(4), make_zm(3, 2, 2), make_alternating(4),
                             make_cyclic(7), make_dihedral(10)}) {
        const Analyzed a = run(src);
        const bool dense = has_dense_normalizers(a.g, a.lat, a.rep).dense;
        // independent recomputation, iterating pairs in reverse
        bool recheck = true;
        for (int h = a.lat.size() - 1; h >= 0 && recheck; --h)
            for (int k = a.lat.size() - 1; k >= 0 && recheck; --k) {
                if (h == k || !a.lat.includes(h, k) || a.lat.covers(h, k)) continue;
                bool split = false;
                for (int x : a.lat.open_interval(h, k)) split |= a.rep.in_normalizer_set(x);
                recheck = split;
            }
        CHECK(dense == recheck);
    }
}

TEST_CASE("unique_subgroup_of_order_p") {
    CHECK(unique_subgroup_of_order_p(enumerate_subgroups(make_cyclic(8)), 2));
    CHECK(unique_subgroup_of_order_p(enumerate_subgroups(make_quaternion(16)), 2));
    CHECK_FALSE(unique_subgroup_of_order_p(
        enumerate_subgroups(direct_product(make_cyclic(2), make_cyclic(2))), 2));
    CHECK_THROWS_AS(unique_subgroup_of_order_p(enumerate_subgroups(make_cyclic(8)), 3),
                    std::invalid_argument);
}
