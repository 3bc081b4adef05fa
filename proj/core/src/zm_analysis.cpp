#include "latnorm/zm_analysis.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "latnorm/constructors.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/normalizers.hpp"
#include "latnorm/parallel.hpp"

namespace latnorm {

Subgroup subgroup_from_triple(const Group& zm_group, const ZmTriple& t,
                              const ZmSubgroupTriple& u) {
    // The triple only addresses groups in make_zm's index encoding; check the
    // defining relations at the expected indices rather than trusting callers.
    const int a = static_cast<int>(1 % t.m);
    const int b = static_cast<int>((1 % t.n) * t.m);
    if (zm_group.order() != t.order() || zm_group.element_order(a) != t.m ||
        zm_group.element_order(b) != t.n ||
        zm_group.op(zm_group.op(zm_group.inverse(b), a), b) !=
            static_cast<int>(t.r % t.m))
        throw std::invalid_argument("group was not built by make_zm(" + t.text() + ")");
    if (!zm_triple_in_L(t, u)) {
        std::ostringstream msg;
        msg << "(" << u.m1 << "," << u.n1 << "," << u.s << ") is not a member of L for "
            << t.text();
        throw std::invalid_argument(msg.str());
    }
    // a^j sits at index j mod m, b^x a^y at (x mod n)*m + y.
    const int a_pow_m1 = static_cast<int>(u.m1 % t.m);
    const int alpha = static_cast<int>((u.n1 % t.n) * t.m + u.s);
    return closure(zm_group, {a_pow_m1, alpha});
}

BijectionReport verify_bijection(const ZmTriple& t) {
    BijectionReport rep;
    rep.triple = t;

    const Group g = make_zm(t);
    const SubgroupLattice lat = enumerate_subgroups(g);
    const std::vector<ZmSubgroupTriple> triples = enumerate_L(t);

    rep.l_size = static_cast<long long>(triples.size());
    rep.lattice_size = lat.size();
    rep.counts_match = rep.l_size == rep.lattice_size;
    if (!rep.counts_match)
        rep.first_discrepancy = "|L| = " + std::to_string(rep.l_size) +
                                " but brute-force lattice has " +
                                std::to_string(rep.lattice_size) + " subgroups";

    rep.all_distinct = true;
    rep.all_in_lattice = true;
    rep.orders_match = true;
    std::vector<char> hit(lat.size(), 0);
    for (const ZmSubgroupTriple& u : triples) {
        const Subgroup h = subgroup_from_triple(g, t, u);
        std::ostringstream where;
        where << "(" << u.m1 << "," << u.n1 << "," << u.s << ")";
        const long long expected = t.order() / (u.m1 * u.n1);
        if (h.size != expected && rep.orders_match) {
            rep.orders_match = false;
            if (rep.first_discrepancy.empty())
                rep.first_discrepancy = "|H_" + where.str() + "| = " + std::to_string(h.size) +
                                        ", expected mn/(m1*n1) = " + std::to_string(expected);
        }
        const int idx = lat.index_of(h.members);
        if (idx < 0) {
            if (rep.all_in_lattice && rep.first_discrepancy.empty())
                rep.first_discrepancy = "H_" + where.str() + " missing from the lattice";
            rep.all_in_lattice = false;
            continue;
        }
        if (hit[idx]) {
            if (rep.all_distinct && rep.first_discrepancy.empty())
                rep.first_discrepancy = "H_" + where.str() + " duplicates another triple's subgroup";
            rep.all_distinct = false;
        }
        hit[idx] = 1;
    }
    rep.pass = rep.counts_match && rep.all_distinct && rep.all_in_lattice && rep.orders_match;
    return rep;
}

std::vector<ZmSearchHit> zm_search(long long max_mn, int target_k, long long tau_bound,
                                   int threads) {
    if (max_mn < 1 || max_mn > kMaxGroupOrder)
        throw std::invalid_argument("zm_search bound must be in 1.." +
                                    std::to_string(kMaxGroupOrder));
    std::vector<ZmTriple> candidates = valid_nonabelian_triples(max_mn);
    if (tau_bound >= 0)
        std::erase_if(candidates,
                      [tau_bound](const ZmTriple& t) { return t.tau_sum() > tau_bound; });

    std::vector<std::optional<ZmSearchHit>> slots(candidates.size());
    parallel_for(candidates.size(), threads, [&](std::size_t i) {
        const ZmTriple& t = candidates[i];
        const Group g = make_zm(t);
        const SubgroupLattice lat = enumerate_subgroups(g);
        const NormalizerReport rep = normalizer_report(g, lat);
        if (rep.deficiency_k == target_k)
            slots[i] = ZmSearchHit{t, t.order(), lat.size(), rep.deficiency_k, t.tau_sum()};
    });

    std::vector<ZmSearchHit> hits;
    for (auto& slot : slots)
        if (slot) hits.push_back(std::move(*slot));
    // candidates are already sorted by (mn, m, n, r); slots preserve that.
    return hits;
}

}  // namespace latnorm
