#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latnorm/analysis.hpp"
#include "latnorm/constructors.hpp"

namespace latnorm {

/// The sweep catalog: every constructor atom (cyclic, dihedral, quaternion,
/// alternating, symmetric, non-abelian ZM triple) of order 2..max_order plus
/// all binary direct products of two atoms within the bound, deduplicated by
/// normalized spec and sorted by (order, label). The trivial group is
/// deliberately excluded: the density and deficiency classifications under
/// test start at non-trivial groups.
std::vector<GroupSpec> build_catalog(int max_order);

/// Structural reading of the classification of groups by deficiency,
/// restricted to what is decidable from one analysis record:
///   k=1: prime order;
///   k=2: cyclic of order p^2, or non-abelian of order pq;
///   k=3: cyclic of order p^3 or pq, or non-abelian of order p^2 q whose
///        Sylow subgroups are cyclic with the (unique) one of order p^2 normal;
///   k=4 (only for groups that are not ZM-groups): cyclic of order p^4, the
///        non-cyclic group of order 4, or the A4 profile (order 12,
///        non-abelian, non-cyclic Sylow 2-subgroup, all elements of prime
///        order).
/// Returns the predicted k, or nullopt where the classification is silent
/// (ZM-groups beyond k=3, and anything with k >= 5).
std::optional<int> theorem_deficiency(const GroupAnalysis& a);

/// Non-abelian with all Sylow subgroups cyclic.
bool is_zm_group(const GroupAnalysis& a);

/// Dense normalizers predicted exactly for prime-order groups and non-abelian
/// groups of order pq (p != q primes).
bool theorem_dense(const GroupAnalysis& a);

/// True iff the observed deficiency is consistent with theorem_deficiency:
/// equal where a prediction exists, otherwise outside the classified range
/// ({1,2,3} for ZM-groups, {1,2,3,4} for everything else).
bool deficiency_consistent(const GroupAnalysis& a);

enum class SweepCheck { density, deficiency };

struct SweepRow {
    GroupAnalysis analysis;
    std::optional<int> expected_k;     // deficiency check
    std::optional<bool> expected_dense;  // density check
    bool match = true;
};

struct SweepResult {
    std::vector<SweepRow> rows;          // filtered by k when requested
    std::vector<std::string> mismatches; // over the whole catalog
    bool pass = true;
};

/// Analyzes the whole catalog (optionally in parallel) and evaluates the
/// selected classification. With k_filter set, rows are restricted to groups
/// whose observed or predicted deficiency equals k; the verdict always spans
/// the full catalog.
SweepResult run_sweep(int max_order, SweepCheck check,
                      std::optional<int> k_filter = std::nullopt, int threads = 1);

}  // namespace latnorm
