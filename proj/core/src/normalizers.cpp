#include "latnorm/normalizers.hpp"

#include <algorithm>
#include <stdexcept>

namespace latnorm {

bool NormalizerReport::in_normalizer_set(int lattice_index) const {
    return std::binary_search(normalizer_set.begin(), normalizer_set.end(), lattice_index);
}

Subgroup normalizer(const Group& g, const Subgroup& h) {
    const int n = g.order();
    const std::vector<int> members = h.members.members();
    ElementSet out(n);
    int size = 0;
    for (int x = 0; x < n; ++x) {
        bool stabilizes = true;
        for (int m : members)
            if (!h.members.contains(g.conjugate(x, m))) {
                stabilizes = false;
                break;
            }
        // |x H x^-1| = |H|, so containment already gives equality.
        if (stabilizes) {
            out.insert(x);
            ++size;
        }
    }
    return Subgroup{n, std::move(out), size};
}

NormalizerReport normalizer_report(const Group& g, const SubgroupLattice& lat) {
    NormalizerReport rep;
    rep.normalizer_of.resize(lat.size());
    for (int i = 0; i < lat.size(); ++i) {
        const Subgroup norm = normalizer(g, lat.at(i));
        const int j = lat.index_of(norm.members);
        if (j < 0) throw std::logic_error("normalizer missing from enumerated lattice");
        rep.normalizer_of[i] = j;
    }
    rep.normalizer_set = rep.normalizer_of;
    std::sort(rep.normalizer_set.begin(), rep.normalizer_set.end());
    rep.normalizer_set.erase(std::unique(rep.normalizer_set.begin(), rep.normalizer_set.end()),
                             rep.normalizer_set.end());
    for (int i = 0; i < lat.size(); ++i)
        if (!rep.in_normalizer_set(i)) rep.non_normalizers.push_back(i);
    rep.deficiency_k = lat.size() - static_cast<int>(rep.normalizer_set.size());
    return rep;
}

DensityVerdict has_dense_normalizers(const Group&, const SubgroupLattice& lat,
                                     const NormalizerReport& rep) {
    for (int h = 0; h < lat.size(); ++h)
        for (int k = 0; k < lat.size(); ++k) {
            if (h == k || lat.at(h).size >= lat.at(k).size) continue;
            if (lat.at(k).size % lat.at(h).size != 0) continue;
            if (!lat.includes(h, k) || lat.covers(h, k)) continue;
            bool split = false;
            for (int x : rep.normalizer_set) {
                if (x == h || x == k) continue;
                if (lat.at(x).size <= lat.at(h).size || lat.at(x).size >= lat.at(k).size)
                    continue;
                if (lat.includes(h, x) && lat.includes(x, k)) {
                    split = true;
                    break;
                }
            }
            if (!split) return DensityVerdict{false, DensityWitness{h, k}};
        }
    return DensityVerdict{true, std::nullopt};
}

bool unique_subgroup_of_order_p(const SubgroupLattice& lat, int p) {
    const int order = lat.at(lat.full_index()).size;
    if (p < 1 || order % p != 0)
        throw std::invalid_argument("p = " + std::to_string(p) +
                                    " does not divide the group order " + std::to_string(order));
    int count = 0;
    for (const Subgroup& s : lat.subgroups())
        if (s.size == p) ++count;
    return count == 1;
}

}  // namespace latnorm
