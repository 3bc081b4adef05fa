#pragma once

#include <stdexcept>
#include <vector>

#include "latnorm/group.hpp"
#include "latnorm/numtheory.hpp"

// Independent test oracles. These deliberately avoid closure() and the
// lattice enumerator so they can stand as second routes to the same numbers.
namespace oracles {

// Every non-empty product-closed subset of a finite group is a subgroup.
// Scans all 2^n subsets; only usable for tiny groups (n <= ~14).
inline std::vector<latnorm::ElementSet> subgroups_by_subset_scan(const latnorm::Group& g) {
    const int n = g.order();
    if (n > 14) throw std::invalid_argument("subset scan oracle limited to order <= 14");
    std::vector<latnorm::ElementSet> out;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        bool closed = true;
        for (int a = 0; a < n && closed; ++a) {
            if (!((mask >> a) & 1)) continue;
            for (int b = 0; b < n && closed; ++b) {
                if (!((mask >> b) & 1)) continue;
                closed = (mask >> g.op(a, b)) & 1;
            }
        }
        if (!closed) continue;
        latnorm::ElementSet members(n);
        for (int a = 0; a < n; ++a)
            if ((mask >> a) & 1) members.insert(a);
        out.push_back(std::move(members));
    }
    return out;
}

inline long long subgroup_count_by_subset_scan(const latnorm::Group& g) {
    return static_cast<long long>(subgroups_by_subset_scan(g).size());
}

// Subgroup count of the dihedral group of order 2m: tau(m) cyclic rotation
// subgroups plus sum over d | m of m/d dihedral-type subgroups = sigma(m).
inline long long dihedral_subgroup_count(long long m) {
    long long sigma = 0;
    for (long long d : latnorm::divisors(m)) sigma += d;
    return latnorm::tau(m) + sigma;
}

}  // namespace oracles
