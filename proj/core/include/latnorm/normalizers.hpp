#pragma once

#include <optional>
#include <vector>

#include "latnorm/lattice.hpp"

namespace latnorm {

/// N_G(H) for every lattice member, the deduplicated set of subgroups that
/// occur as normalizers, and the deficiency k = |L(G)| - |N_G|.
struct NormalizerReport {
    std::vector<int> normalizer_of;   // lattice index -> lattice index of N_G(H)
    std::vector<int> normalizer_set;  // sorted, deduplicated
    std::vector<int> non_normalizers; // sorted complement
    int deficiency_k = 0;

    bool in_normalizer_set(int lattice_index) const;
};

/// A pair H < K with H not maximal in K whose open interval misses the
/// normalizer set entirely.
struct DensityWitness {
    int h = -1;
    int k = -1;
};

struct DensityVerdict {
    bool dense = false;
    std::optional<DensityWitness> witness;  // set iff not dense
};

/// N_G(H) = {g : g H g^-1 = H}; always a subgroup containing H.
Subgroup normalizer(const Group& g, const Subgroup& h);

/// Complete normalizer map over an enumerated lattice. Deterministic.
NormalizerReport normalizer_report(const Group& g, const SubgroupLattice& lat);

/// Dense normalizers: every pair H < K with H not maximal in K (including
/// H = 1 and K = G) has some member of the normalizer set strictly between.
/// The witness, when present, is the first violating pair in canonical order.
DensityVerdict has_dense_normalizers(const Group& g, const SubgroupLattice& lat,
                                     const NormalizerReport& rep);

/// True iff exactly one lattice member has size p. Throws std::invalid_argument
/// when p does not divide the group order.
bool unique_subgroup_of_order_p(const SubgroupLattice& lat, int p);

}  // namespace latnorm
