#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "latnorm/group.hpp"

namespace latnorm {

/// The complete subgroup lattice of one group: every subgroup, canonically
/// sorted by (size, then lexicographic member sequence), plus the inclusion
/// order and its transitive reduction (the covering relation).
///
/// Index 0 is always the trivial subgroup and size()-1 the whole group.
/// Instances are immutable after enumeration and safe for concurrent reads.
class SubgroupLattice {
public:
    const std::vector<Subgroup>& subgroups() const { return subs_; }
    const Subgroup& at(int i) const { return subs_[i]; }
    int size() const { return static_cast<int>(subs_.size()); }

    int trivial_index() const { return 0; }
    int full_index() const { return size() - 1; }

    /// Lattice index of a subgroup bitmap, or -1.
    int index_of(const ElementSet& members) const;

    /// H <= K as bitmaps.
    bool includes(int h, int k) const { return subs_[h].members.subset_of(subs_[k].members); }

    /// K covers H: H < K with nothing strictly between.
    bool covers(int h, int k) const;

    /// True iff covers(h, k). Requires h < k strictly; throws otherwise.
    bool is_maximal_in(int h, int k) const;

    /// All X with H < X < K, in canonical order. Requires h < k strictly.
    std::vector<int> open_interval(int h, int k) const;

    /// Cover edges as (lower, upper) pairs, lexicographically sorted.
    const std::vector<std::pair<int, int>>& cover_edges() const { return edges_; }

private:
    friend SubgroupLattice enumerate_subgroups(const Group&, const std::function<void(int)>&);

    void check_strict_pair(int h, int k) const;

    std::vector<Subgroup> subs_;
    std::unordered_map<ElementSet, int, ElementSetHash> index_;
    std::vector<std::vector<int>> covers_up_;  // per lower index: sorted upper indices
    std::vector<std::pair<int, int>> edges_;
};

/// Exhaustively enumerates all subgroups: seeds with every cyclic subgroup
/// <g>, then joins known subgroups with cyclic ones to a fixpoint. Every
/// subgroup is a join of cyclic subgroups, so the fixpoint is complete.
/// The optional progress callback receives the running subgroup count.
SubgroupLattice enumerate_subgroups(const Group& g,
                                    const std::function<void(int)>& progress = {});

}  // namespace latnorm
