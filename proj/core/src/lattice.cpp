#include "latnorm/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace latnorm {

int SubgroupLattice::index_of(const ElementSet& members) const {
    const auto it = index_.find(members);
    return it == index_.end() ? -1 : it->second;
}

bool SubgroupLattice::covers(int h, int k) const {
    const auto& ups = covers_up_[h];
    return std::binary_search(ups.begin(), ups.end(), k);
}

void SubgroupLattice::check_strict_pair(int h, int k) const {
    if (h < 0 || k < 0 || h >= size() || k >= size())
        throw std::invalid_argument("subgroup index out of range");
    if (h == k || !includes(h, k))
        throw std::invalid_argument("expected a strict inclusion H < K");
}

bool SubgroupLattice::is_maximal_in(int h, int k) const {
    check_strict_pair(h, k);
    return covers(h, k);
}

std::vector<int> SubgroupLattice::open_interval(int h, int k) const {
    check_strict_pair(h, k);
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        if (x == h || x == k) continue;
        if (subs_[x].size <= subs_[h].size || subs_[x].size >= subs_[k].size) continue;
        if (includes(h, x) && includes(x, k)) out.push_back(x);
    }
    return out;
}

SubgroupLattice enumerate_subgroups(const Group& g, const std::function<void(int)>& progress) {
    const int n = g.order();

    std::unordered_map<ElementSet, int, ElementSetHash> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) -> bool {
        if (seen.emplace(s.members, static_cast<int>(found.size())).second) {
            found.push_back(std::move(s));
            if (progress && found.size() % 256 == 0) progress(static_cast<int>(found.size()));
            return true;
        }
        return false;
    };

    // Seed: the cyclic subgroup generated by each element.
    for (int x = 0; x < n; ++x) {
        ElementSet members(n);
        int size = 0;
        int y = 0;
        do {
            members.insert(y);
            ++size;
            y = g.op(y, x);
        } while (y != 0);
        add(Subgroup{n, std::move(members), size});
    }
    const std::size_t cyclic_count = found.size();

    // Fixpoint: join every known subgroup with every cyclic subgroup. Any
    // subgroup <g1,...,gk> arises as nested joins of cyclic subgroups, so
    // no joins of two non-cyclic members are needed for completeness.
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t c = 0; c < cyclic_count; ++c) {
            // found may reallocate inside add(); re-take references each round.
            const ElementSet& cm = found[c].members;
            if (cm.subset_of(found[i].members)) continue;
            ElementSet u = found[i].members;
            u |= cm;
            add(closure(g, u));
        }
    }

    SubgroupLattice lat;
    lat.subs_ = std::move(found);
    std::sort(lat.subs_.begin(), lat.subs_.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size != b.size) return a.size < b.size;
        return ElementSet::compare(a.members, b.members) < 0;
    });
    lat.index_.reserve(lat.subs_.size());
    for (int i = 0; i < lat.size(); ++i) lat.index_.emplace(lat.subs_[i].members, i);

    // Covering relation: H is covered in K iff no other proper subgroup of K
    // strictly contains H. Grouping by upper member keeps this quadratic per K.
    lat.covers_up_.assign(lat.size(), {});
    std::vector<int> subs_of_k;
    for (int k = 0; k < lat.size(); ++k) {
        subs_of_k.clear();
        for (int i = 0; i < lat.size(); ++i)
            if (i != k && lat.subs_[i].size < lat.subs_[k].size &&
                lat.subs_[k].size % lat.subs_[i].size == 0 && lat.includes(i, k))
                subs_of_k.push_back(i);
        for (int h : subs_of_k) {
            bool is_cover = true;
            for (int x : subs_of_k) {
                if (x == h || lat.subs_[x].size <= lat.subs_[h].size) continue;
                if (lat.subs_[x].size % lat.subs_[h].size) continue;
                if (lat.includes(h, x)) {
                    is_cover = false;
                    break;
                }
            }
            if (is_cover) {
                lat.covers_up_[h].push_back(k);
                lat.edges_.emplace_back(h, k);
            }
        }
    }
    for (auto& ups : lat.covers_up_) std::sort(ups.begin(), ups.end());
    std::sort(lat.edges_.begin(), lat.edges_.end());
    return lat;
}

}  // namespace latnorm
