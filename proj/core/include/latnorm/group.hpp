#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace latnorm {

inline constexpr int kMaxGroupOrder = 512;

/// Membership bitmap over the element indices 0..universe-1 of one group.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    int universe() const { return universe_; }

    bool contains(int i) const {
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void insert(int i) { words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }

    int count() const;
    bool subset_of(const ElementSet& other) const;
    ElementSet& operator|=(const ElementSet& other);
    ElementSet intersect(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const { return words_ == other.words_; }

    /// Orders sets of equal universe by their sorted member sequences:
    /// at the lowest differing element index, the set containing it comes first.
    static int compare(const ElementSet& a, const ElementSet& b);

    std::size_t hash() const;

    std::vector<int> members() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int i = static_cast<int>(w * 64) + __builtin_ctzll(bits);
                f(i);
                bits &= bits - 1;
            }
        }
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// A subgroup of a fixed parent group, stored as a membership bitmap.
/// Invariants: contains index 0, closed under product and inverse,
/// size == members.count() and size divides parent_order.
struct Subgroup {
    int parent_order = 0;
    ElementSet members;
    int size = 0;

    bool contains(int g) const { return members.contains(g); }
    bool operator==(const Subgroup& other) const { return members == other.members; }
};

/// A finite group materialized as a Cayley table over indices 0..order-1.
///
/// Construction relabels the table so the identity sits at index 0, then
/// validates the full group axioms: identity row/column, two-sided inverses,
/// and associativity by the complete triple loop. Element orders are cached.
/// Instances are immutable and safe for concurrent reads.
class Group {
public:
    /// table is row-major, table[g*order + h] = g*h. Throws std::invalid_argument
    /// on anything that is not a group table of order 1..512.
    Group(std::vector<int> table, int order, std::string label);

    static Group from_rows(const std::vector<std::vector<int>>& rows, std::string label);

    int order() const { return order_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    int inverse(int a) const { return inverse_[a]; }
    int element_order(int a) const { return element_orders_[a]; }
    const std::vector<int>& element_orders() const { return element_orders_; }

    /// g^e for e >= 0 (e reduced by the element's order internally).
    int power(int g, long long e) const;

    int conjugate(int g, int h) const { return op(op(g, h), inverse(g)); }

    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool is_abelian() const { return abelian_; }
    /// True iff some element generates the whole group.
    bool is_cyclic() const;

    Subgroup trivial_subgroup() const;
    Subgroup whole_subgroup() const;

private:
    void validate_and_relabel();

    int order_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<int> element_orders_;
    bool abelian_ = false;
    std::string label_;
};

/// Smallest subgroup of g containing gens (worklist closure over products).
/// Throws std::invalid_argument if any index is out of range.
Subgroup closure(const Group& g, std::span<const int> gens);
Subgroup closure(const Group& g, std::initializer_list<int> gens);
Subgroup closure(const Group& g, const ElementSet& gens);

/// {g h g^-1 : h in H}; same size as H.
Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by);

/// Elements commuting with everything.
Subgroup center(const Group& g);

/// True iff every non-identity element has prime order.
bool all_nontrivial_elements_prime_order(const Group& g);

/// True iff some member of h generates all of h.
bool subgroup_is_cyclic(const Group& g, const Subgroup& h);

/// True iff for every prime p | order there is an element of order p^a where
/// p^a is the largest power of p dividing the order (a cyclic Sylow subgroup).
bool all_sylow_subgroups_cyclic(const Group& g);

}  // namespace latnorm
