#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latnorm/group.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/normalizers.hpp"

namespace latnorm {

/// One group's full normalizer profile: lattice size, |N_G|, deficiency,
/// density, plus the structural flags the classification sweeps need.
struct GroupAnalysis {
    std::string label;
    int order = 0;

    int lattice_size = 0;
    int normalizer_count = 0;
    int deficiency = 0;

    bool dense = false;
    struct Witness {
        int h_index = -1, k_index = -1;
        int h_order = 0, k_order = 0;
    };
    std::optional<Witness> witness;  // present iff not dense

    std::vector<int> non_normalizer_orders;  // ascending multiset

    bool abelian = false;
    bool cyclic = false;
    bool all_prime_order = false;
    bool all_sylow_cyclic = false;
    int center_size = 0;

    std::map<long long, bool> unique_order_p;  // per prime divisor of the order
    std::vector<std::pair<long long, int>> factorization;
    std::vector<int> subgroup_orders;  // ascending multiset over the lattice
};

/// Enumerates the lattice and computes the complete record.
GroupAnalysis analyze(const Group& g);

/// Same, reusing an already-enumerated lattice and report.
GroupAnalysis analyze(const Group& g, const SubgroupLattice& lat, const NormalizerReport& rep);

}  // namespace latnorm
