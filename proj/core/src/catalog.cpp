#include "latnorm/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "latnorm/numtheory.hpp"
#include "latnorm/parallel.hpp"

namespace latnorm {

std::vector<GroupSpec> build_catalog(int max_order) {
    if (max_order < 1 || max_order > kMaxGroupOrder)
        throw std::invalid_argument("catalog bound must be in 1.." +
                                    std::to_string(kMaxGroupOrder));
    using Atom = GroupSpec::Atom;
    std::vector<Atom> atoms;
    for (int n = 2; n <= max_order; ++n)
        atoms.push_back({Atom::Kind::cyclic, n, {}});
    for (int n = 4; n <= max_order; n += 2)
        atoms.push_back({Atom::Kind::dihedral, n, {}});
    for (int n = 8; n <= max_order; n *= 2)
        atoms.push_back({Atom::Kind::quaternion, n, {}});
    for (int d = 3; d <= 5; ++d)
        if (Atom{Atom::Kind::alternating, d, {}}.order() <= max_order)
            atoms.push_back({Atom::Kind::alternating, d, {}});
    for (int d = 2; d <= 5; ++d)
        if (Atom{Atom::Kind::symmetric, d, {}}.order() <= max_order)
            atoms.push_back({Atom::Kind::symmetric, d, {}});
    for (const ZmTriple& t : valid_nonabelian_triples(max_order))
        atoms.push_back({Atom::Kind::zm, 0, t});

    std::vector<GroupSpec> specs;
    std::set<std::string> seen;
    auto add = [&](GroupSpec spec) {
        if (seen.insert(spec.normalized()).second) specs.push_back(std::move(spec));
    };
    for (const Atom& a : atoms) add(GroupSpec({a}));
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i; j < atoms.size(); ++j)
            if (atoms[i].order() * atoms[j].order() <= max_order)
                add(GroupSpec({atoms[i], atoms[j]}));

    std::sort(specs.begin(), specs.end(), [](const GroupSpec& a, const GroupSpec& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.normalized() < b.normalized();
    });
    return specs;
}

namespace {

int count_subgroups_of_size(const GroupAnalysis& a, long long size) {
    return static_cast<int>(
        std::count(a.subgroup_orders.begin(), a.subgroup_orders.end(), size));
}

}  // namespace

bool is_zm_group(const GroupAnalysis& a) { return !a.abelian && a.all_sylow_cyclic; }

std::optional<int> theorem_deficiency(const GroupAnalysis& a) {
    const auto& f = a.factorization;
    const bool pq = f.size() == 2 && f[0].second == 1 && f[1].second == 1;
    const bool p2q = f.size() == 2 && ((f[0].second == 2 && f[1].second == 1) ||
                                       (f[0].second == 1 && f[1].second == 2));

    if (is_prime(a.order)) return 1;
    if (a.cyclic && f.size() == 1 && f[0].second == 2) return 2;
    if (!a.abelian && pq) return 2;
    if (a.cyclic && f.size() == 1 && f[0].second == 3) return 3;
    if (a.cyclic && pq) return 3;
    if (!a.abelian && p2q && a.all_sylow_cyclic) {
        const long long p = f[0].second == 2 ? f[0].first : f[1].first;
        if (count_subgroups_of_size(a, p * p) == 1) return 3;
    }
    if (!is_zm_group(a)) {
        if (a.cyclic && f.size() == 1 && f[0].second == 4) return 4;
        if (a.order == 4 && !a.cyclic) return 4;
        if (a.order == 12 && !a.abelian && !a.all_sylow_cyclic && a.all_prime_order) return 4;
    }
    return std::nullopt;
}

bool theorem_dense(const GroupAnalysis& a) {
    if (is_prime(a.order)) return true;
    const auto& f = a.factorization;
    return !a.abelian && f.size() == 2 && f[0].second == 1 && f[1].second == 1;
}

bool deficiency_consistent(const GroupAnalysis& a) {
    const std::optional<int> predicted = theorem_deficiency(a);
    if (predicted) return a.deficiency == *predicted;
    if (is_zm_group(a)) return a.deficiency > 3;
    return a.deficiency > 4;
}

SweepResult run_sweep(int max_order, SweepCheck check, std::optional<int> k_filter,
                      int threads) {
    const std::vector<GroupSpec> specs = build_catalog(max_order);
    std::vector<GroupAnalysis> analyses(specs.size());
    parallel_for(specs.size(), threads,
                 [&](std::size_t i) { analyses[i] = analyze(specs[i].build()); });

    SweepResult result;
    for (GroupAnalysis& a : analyses) {
        SweepRow row;
        row.match = true;
        if (check == SweepCheck::density) {
            row.expected_dense = theorem_dense(a);
            row.match = a.dense == *row.expected_dense;
            if (!row.match)
                result.mismatches.push_back(a.label + ": dense=" +
                                            (a.dense ? "true" : "false") +
                                            " but the classification predicts " +
                                            (*row.expected_dense ? "true" : "false"));
        } else {
            row.expected_k = theorem_deficiency(a);
            row.match = deficiency_consistent(a);
            if (!row.match) {
                std::string expect = row.expected_k ? std::to_string(*row.expected_k)
                                    : is_zm_group(a) ? std::string("> 3")
                                                     : std::string("> 4");
                result.mismatches.push_back(a.label + ": observed k=" +
                                            std::to_string(a.deficiency) +
                                            " but the classification predicts k " +
                                            (row.expected_k ? "= " : "") + expect);
            }
        }
        const bool keep =
            check == SweepCheck::density || !k_filter ||
            a.deficiency == *k_filter || (row.expected_k && *row.expected_k == *k_filter);
        row.analysis = std::move(a);
        if (keep) result.rows.push_back(std::move(row));
    }
    result.pass = result.mismatches.empty();
    return result;
}

}  // namespace latnorm
