#pragma once

#include <string>
#include <vector>

#include "latnorm/group.hpp"
#include "latnorm/zm.hpp"

namespace latnorm {

/// H_(m1,n1,s) = <a^m1, b^n1 a^s> inside a group built by make_zm(t).
/// The triple must be a member of enumerate_L(t); |H| = mn/(m1*n1).
Subgroup subgroup_from_triple(const Group& zm_group, const ZmTriple& t,
                              const ZmSubgroupTriple& u);

/// Outcome of checking the analytic subgroup parametrization against the
/// brute-force lattice of the same group.
struct BijectionReport {
    ZmTriple triple;
    long long l_size = 0;        // |enumerate_L(t)|
    long long lattice_size = 0;  // brute-force count
    bool counts_match = false;
    bool all_distinct = false;   // materialized subgroups pairwise distinct
    bool all_in_lattice = false; // every materialized subgroup found in the lattice
    bool orders_match = false;   // every |H| equals mn/(m1*n1)
    bool pass = false;
    std::string first_discrepancy;  // empty when pass
};

/// Builds the group, enumerates its lattice by brute force, materializes every
/// member of L and cross-checks counts, distinctness and the order formula.
BijectionReport verify_bijection(const ZmTriple& t);

struct ZmSearchHit {
    ZmTriple triple;
    long long order = 0;
    int lattice_size = 0;
    int deficiency = 0;
    long long tau_sum = 0;
};

/// All valid non-abelian triples with mn <= max_mn whose group has the target
/// deficiency; optionally pre-filtered by tau(m)+tau(n) <= tau_bound
/// (tau_bound < 0 disables the filter). Results are ordered by (mn, m, n, r)
/// regardless of thread count.
std::vector<ZmSearchHit> zm_search(long long max_mn, int target_k, long long tau_bound = -1,
                                   int threads = 1);

}  // namespace latnorm
