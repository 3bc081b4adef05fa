#include "latnorm/group.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "latnorm/numtheory.hpp"

namespace latnorm {

int ElementSet::count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
    ElementSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] & other.words_[i];
    return out;
}

int ElementSet::compare(const ElementSet& a, const ElementSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff) {
            const std::uint64_t low = diff & (~diff + 1);
            return (a.words_[i] & low) ? -1 : 1;
        }
    }
    return 0;
}

std::size_t ElementSet::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<int> ElementSet::members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
}

Group::Group(std::vector<int> table, int order, std::string label)
    : order_(order), table_(std::move(table)), label_(std::move(label)) {
    if (order_ < 1 || order_ > kMaxGroupOrder)
        throw std::invalid_argument("group order must be in 1.." +
                                    std::to_string(kMaxGroupOrder) + ", got " +
                                    std::to_string(order_));
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("Cayley table has wrong size");
    for (int v : table_)
        if (v < 0 || v >= order_)
            throw std::invalid_argument("Cayley table entry out of range: " + std::to_string(v));
    validate_and_relabel();
}

Group Group::from_rows(const std::vector<std::vector<int>>& rows, std::string label) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("Cayley table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return Group(std::move(flat), n, std::move(label));
}

void Group::validate_and_relabel() {
    const int n = order_;
    auto at = [&](int a, int b) -> int& { return table_[static_cast<std::size_t>(a) * n + b]; };

    // Locate the two-sided identity, then relabel it to index 0 by swapping labels.
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = at(e, g) == g && at(g, e) == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("table has no two-sided identity element");
    if (identity != 0) {
        auto swap01 = [&](int x) { return x == 0 ? identity : (x == identity ? 0 : x); };
        std::vector<int> relabeled(table_.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                relabeled[static_cast<std::size_t>(swap01(a)) * n + swap01(b)] = swap01(at(a, b));
        table_ = std::move(relabeled);
    }

    // Full associativity check; report the first offending triple.
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = at(g, h);
            for (int k = 0; k < n; ++k)
                if (at(gh, k) != at(g, at(h, k))) {
                    std::ostringstream msg;
                    msg << "associativity fails at (g=" << g << ", h=" << h << ", k=" << k
                        << "): (g*h)*k=" << at(gh, k) << " but g*(h*k)=" << at(g, at(h, k));
                    throw std::invalid_argument(msg.str());
                }
        }

    inverse_.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (at(g, h) == 0 && at(h, g) == 0) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] < 0)
            throw std::invalid_argument("element " + std::to_string(g) +
                                        " has no two-sided inverse");
    }

    element_orders_.assign(n, 0);
    for (int g = 0; g < n; ++g) {
        int x = g, ord = 1;
        while (x != 0) {
            x = at(x, g);
            ++ord;
        }
        element_orders_[g] = ord;
    }

    abelian_ = true;
    for (int g = 0; g < n && abelian_; ++g)
        for (int h = g + 1; h < n; ++h)
            if (at(g, h) != at(h, g)) {
                abelian_ = false;
                break;
            }
}

int Group::power(int g, long long e) const {
    const int ord = element_orders_[g];
    e %= ord;
    if (e < 0) e += ord;
    int acc = 0;
    for (long long i = 0; i < e; ++i) acc = op(acc, g);
    return acc;
}

bool Group::is_cyclic() const {
    for (int g = 0; g < order_; ++g)
        if (element_orders_[g] == order_) return true;
    return false;
}

Subgroup Group::trivial_subgroup() const {
    ElementSet s(order_);
    s.insert(0);
    return Subgroup{order_, std::move(s), 1};
}

Subgroup Group::whole_subgroup() const {
    ElementSet s(order_);
    for (int g = 0; g < order_; ++g) s.insert(g);
    return Subgroup{order_, std::move(s), order_};
}

namespace {

Subgroup close_over(const Group& g, std::vector<int> seed) {
    const int n = g.order();
    ElementSet in(n);
    std::vector<int> members;
    members.reserve(16);
    auto add = [&](int x) {
        if (!in.contains(x)) {
            in.insert(x);
            members.push_back(x);
        }
    };
    add(0);
    for (int s : seed) {
        if (s < 0 || s >= n) throw std::invalid_argument("generator index out of range");
        add(s);
    }
    // Worklist: when an element takes its turn, multiply it both ways against
    // everything known so far; later arrivals pick up the remaining pairs.
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int x = members[i];
        for (std::size_t j = 0; j < members.size(); ++j) {
            const int y = members[j];
            add(g.op(x, y));
            add(g.op(y, x));
        }
    }
    return Subgroup{n, std::move(in), static_cast<int>(members.size())};
}

}  // namespace

Subgroup closure(const Group& g, std::span<const int> gens) {
    return close_over(g, std::vector<int>(gens.begin(), gens.end()));
}

Subgroup closure(const Group& g, std::initializer_list<int> gens) {
    return close_over(g, std::vector<int>(gens));
}

Subgroup closure(const Group& g, const ElementSet& gens) {
    return close_over(g, gens.members());
}

Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, int by) {
    if (by < 0 || by >= g.order()) throw std::invalid_argument("conjugating element out of range");
    ElementSet out(g.order());
    h.members.for_each([&](int x) { out.insert(g.conjugate(by, x)); });
    return Subgroup{g.order(), std::move(out), h.size};
}

Subgroup center(const Group& g) {
    const int n = g.order();
    ElementSet out(n);
    int size = 0;
    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int h = 0; h < n && central; ++h) central = g.op(z, h) == g.op(h, z);
        if (central) {
            out.insert(z);
            ++size;
        }
    }
    return Subgroup{n, std::move(out), size};
}

bool all_nontrivial_elements_prime_order(const Group& g) {
    for (int x = 1; x < g.order(); ++x)
        if (!is_prime(g.element_order(x))) return false;
    return true;
}

bool subgroup_is_cyclic(const Group& g, const Subgroup& h) {
    bool found = false;
    h.members.for_each([&](int x) {
        if (g.element_order(x) == h.size) found = true;
    });
    return found;
}

bool all_sylow_subgroups_cyclic(const Group& g) {
    // An element of order p^a (maximal) generates a Sylow p-subgroup, and a
    // cyclic Sylow subgroup provides such an element; all Sylow p-subgroups
    // are conjugate, hence isomorphic.
    for (const auto& [p, a] : factorize(g.order())) {
        long long pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        bool found = false;
        for (int x = 0; x < g.order() && !found; ++x) found = g.element_order(x) == pa;
        if (!found) return false;
    }
    return true;
}

}  // namespace latnorm
