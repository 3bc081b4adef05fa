#include "latnorm/analysis.hpp"

#include <algorithm>

#include "latnorm/numtheory.hpp"

namespace latnorm {

GroupAnalysis analyze(const Group& g) {
    const SubgroupLattice lat = enumerate_subgroups(g);
    const NormalizerReport rep = normalizer_report(g, lat);
    return analyze(g, lat, rep);
}

GroupAnalysis analyze(const Group& g, const SubgroupLattice& lat, const NormalizerReport& rep) {
    GroupAnalysis a;
    a.label = g.label();
    a.order = g.order();
    a.lattice_size = lat.size();
    a.normalizer_count = static_cast<int>(rep.normalizer_set.size());
    a.deficiency = rep.deficiency_k;

    const DensityVerdict verdict = has_dense_normalizers(g, lat, rep);
    a.dense = verdict.dense;
    if (verdict.witness) {
        a.witness = GroupAnalysis::Witness{verdict.witness->h, verdict.witness->k,
                                           lat.at(verdict.witness->h).size,
                                           lat.at(verdict.witness->k).size};
    }

    for (int i : rep.non_normalizers) a.non_normalizer_orders.push_back(lat.at(i).size);
    std::sort(a.non_normalizer_orders.begin(), a.non_normalizer_orders.end());

    a.abelian = g.is_abelian();
    a.cyclic = g.is_cyclic();
    a.all_prime_order = all_nontrivial_elements_prime_order(g);
    a.all_sylow_cyclic = all_sylow_subgroups_cyclic(g);
    a.center_size = center(g).size;

    a.factorization = factorize(g.order());
    for (const auto& [p, e] : a.factorization)
        a.unique_order_p[p] = unique_subgroup_of_order_p(lat, static_cast<int>(p));

    a.subgroup_orders.reserve(lat.size());
    for (const Subgroup& s : lat.subgroups()) a.subgroup_orders.push_back(s.size);
    std::sort(a.subgroup_orders.begin(), a.subgroup_orders.end());
    return a;
}

}  // namespace latnorm
