#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "latnorm/analysis.hpp"
#include "latnorm/catalog.hpp"
#include "latnorm/constructors.hpp"
#include "latnorm/lattice.hpp"
#include "latnorm/normalizers.hpp"
#include "latnorm/parallel.hpp"
#include "latnorm/zm_analysis.hpp"

namespace {

using latnorm::Group;
using latnorm::GroupAnalysis;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    bool json = false;
    bool quiet = false;
    int threads = 0;  // 0 = auto
};

Group build_input_group(const std::string& spec, const std::string& file) {
    if (!file.empty()) return latnorm::load_cayley_table(file);
    return latnorm::parse_group_spec(spec).build();
}

json analysis_to_json(const GroupAnalysis& a) {
    json flags;
    flags["abelian"] = a.abelian;
    flags["all_prime_order"] = a.all_prime_order;
    json uop = json::object();
    for (const auto& [p, unique] : a.unique_order_p) uop[std::to_string(p)] = unique;
    flags["unique_order_p"] = uop;

    json out;
    out["label"] = a.label;
    out["order"] = a.order;
    out["lattice_size"] = a.lattice_size;
    out["normalizer_count"] = a.normalizer_count;
    out["deficiency"] = a.deficiency;
    out["dense"] = a.dense;
    if (a.witness) {
        out["dense_witness"] = {{"h_index", a.witness->h_index},
                                {"k_index", a.witness->k_index},
                                {"h_order", a.witness->h_order},
                                {"k_order", a.witness->k_order}};
    }
    out["non_normalizer_orders"] = a.non_normalizer_orders;
    out["flags"] = flags;
    return out;
}

int cmd_analyze(const GlobalOptions& opts, const std::string& spec, const std::string& file) {
    const Group g = build_input_group(spec, file);
    std::function<void(int)> progress;
    if (!opts.quiet && g.order() >= 256)
        progress = [](int found) { std::cerr << "... " << found << " subgroups so far\n"; };
    const latnorm::SubgroupLattice lat = latnorm::enumerate_subgroups(g, progress);
    const latnorm::NormalizerReport rep = latnorm::normalizer_report(g, lat);
    const GroupAnalysis a = latnorm::analyze(g, lat, rep);
    std::cout << analysis_to_json(a).dump(2) << "\n";
    return kExitOk;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int cmd_sweep(const GlobalOptions& opts, int max_order, const std::string& check_name,
              std::optional<int> k_filter) {
    const latnorm::SweepCheck check = check_name == "density"
                                          ? latnorm::SweepCheck::density
                                          : latnorm::SweepCheck::deficiency;
    const latnorm::SweepResult result =
        latnorm::run_sweep(max_order, check, k_filter, opts.threads);

    if (opts.json) {
        json rows = json::array();
        for (const auto& row : result.rows) {
            json r = analysis_to_json(row.analysis);
            if (check == latnorm::SweepCheck::density)
                r["expected_dense"] = *row.expected_dense;
            else
                r["expected_deficiency"] = row.expected_k ? json(*row.expected_k) : json();
            r["match"] = row.match;
            rows.push_back(std::move(r));
        }
        json out;
        out["rows"] = std::move(rows);
        out["verdict"] = {{"pass", result.pass}, {"mismatches", result.mismatches}};
        std::cout << out.dump(2) << "\n";
    } else if (check == latnorm::SweepCheck::density) {
        std::cout << "label,order,lattice_size,normalizer_count,deficiency,dense,"
                     "expected_dense,match\n";
        for (const auto& row : result.rows) {
            const GroupAnalysis& a = row.analysis;
            std::cout << a.label << "," << a.order << "," << a.lattice_size << ","
                      << a.normalizer_count << "," << a.deficiency << "," << bool_text(a.dense)
                      << "," << bool_text(*row.expected_dense) << "," << bool_text(row.match)
                      << "\n";
        }
    } else {
        std::cout << "label,order,lattice_size,normalizer_count,deficiency,"
                     "expected_deficiency,match\n";
        for (const auto& row : result.rows) {
            const GroupAnalysis& a = row.analysis;
            std::cout << a.label << "," << a.order << "," << a.lattice_size << ","
                      << a.normalizer_count << "," << a.deficiency << ",";
            if (row.expected_k) std::cout << *row.expected_k;
            std::cout << "," << bool_text(row.match) << "\n";
        }
    }

    if (!opts.quiet) {
        for (const std::string& m : result.mismatches) std::cerr << "mismatch: " << m << "\n";
        std::cerr << "sweep verdict: " << (result.pass ? "PASS" : "FAIL") << " ("
                  << result.rows.size() << " rows)\n";
    }
    return result.pass ? kExitOk : kExitVerdictFail;
}

int cmd_zm(const GlobalOptions& opts, int max_mn, int k, long long tau_bound,
           bool verify_bijection) {
    const auto hits = latnorm::zm_search(max_mn, k, tau_bound, opts.threads);

    bool all_bijections_pass = true;
    std::vector<latnorm::BijectionReport> bijections;
    if (verify_bijection) {
        bijections.resize(hits.size());
        latnorm::parallel_for(hits.size(), opts.threads, [&](std::size_t i) {
            bijections[i] = latnorm::verify_bijection(hits[i].triple);
        });
        for (const auto& b : bijections) all_bijections_pass &= b.pass;
    }

    if (opts.json) {
        json rows = json::array();
        for (std::size_t i = 0; i < hits.size(); ++i) {
            const auto& h = hits[i];
            json r = {{"m", h.triple.m},        {"n", h.triple.n},
                      {"r", h.triple.r},        {"d", h.triple.d},
                      {"order", h.order},       {"lattice_size", h.lattice_size},
                      {"deficiency", h.deficiency}, {"tau_sum", h.tau_sum}};
            if (verify_bijection) r["bijection"] = bijections[i].pass ? "pass" : "fail";
            rows.push_back(std::move(r));
        }
        json out;
        out["rows"] = std::move(rows);
        if (verify_bijection) out["all_bijections_pass"] = all_bijections_pass;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "m,n,r,d,order,lattice_size,deficiency,tau_sum";
        if (verify_bijection) std::cout << ",bijection";
        std::cout << "\n";
        for (std::size_t i = 0; i < hits.size(); ++i) {
            const auto& h = hits[i];
            std::cout << h.triple.m << "," << h.triple.n << "," << h.triple.r << ","
                      << h.triple.d << "," << h.order << "," << h.lattice_size << ","
                      << h.deficiency << "," << h.tau_sum;
            if (verify_bijection) std::cout << "," << (bijections[i].pass ? "pass" : "fail");
            std::cout << "\n";
        }
    }

    if (!opts.quiet) {
        if (verify_bijection)
            for (std::size_t i = 0; i < hits.size(); ++i)
                if (!bijections[i].pass)
                    std::cerr << "bijection failure for " << hits[i].triple.text() << ": "
                              << bijections[i].first_discrepancy << "\n";
        std::cerr << "zm search: " << hits.size() << " triples with k=" << k;
        if (verify_bijection)
            std::cerr << ", bijection " << (all_bijections_pass ? "PASS" : "FAIL");
        std::cerr << "\n";
    }
    return all_bijections_pass ? kExitOk : kExitVerdictFail;
}

int cmd_dot(const GlobalOptions& opts, const std::string& spec, bool color_normalizers) {
    const Group g = latnorm::parse_group_spec(spec).build();
    if (g.order() > 200)
        throw std::invalid_argument("dot renders groups of order <= 200, got " +
                                    std::to_string(g.order()));
    const latnorm::SubgroupLattice lat = latnorm::enumerate_subgroups(g);
    std::optional<latnorm::NormalizerReport> rep;
    if (color_normalizers) rep = latnorm::normalizer_report(g, lat);

    std::cout << "digraph \"" << g.label() << "\" {\n";
    std::cout << "  rankdir=BT;\n";
    std::cout << "  node [shape=circle];\n";
    for (int i = 0; i < lat.size(); ++i) {
        std::cout << "  s" << i << " [label=\"" << lat.at(i).size << "\"";
        if (rep && rep->in_normalizer_set(i))
            std::cout << ", style=filled, fillcolor=lightsteelblue";
        std::cout << "];\n";
    }
    for (const auto& [lower, upper] : lat.cover_edges())
        std::cout << "  s" << lower << " -> s" << upper << ";\n";
    std::cout << "}\n";
    (void)opts;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgroup lattices, normalizer sets and deficiency for small finite groups"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "emit JSON instead of CSV where applicable");
    app.add_flag("--quiet", opts.quiet, "suppress progress and verdict chatter on stderr");
    app.add_option("--threads", opts.threads, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber);

    auto* analyze = app.add_subcommand("analyze", "analyze one group, JSON to stdout");
    std::string spec_text, file_path;
    analyze->add_option("spec", spec_text, "group spec, e.g. \"Z4 x Z2\" or \"ZM(15,2,14)\"");
    analyze->add_option("--file", file_path, "read a Cayley table file instead");

    auto* sweep = app.add_subcommand("sweep", "classification sweep over the catalog, CSV");
    int max_order = 60;
    std::string check_name;
    int sweep_k = -1;
    sweep->add_option("--max-order", max_order, "catalog order bound")
        ->required()
        ->check(CLI::Range(1, latnorm::kMaxGroupOrder));
    sweep->add_option("--check", check_name, "which classification to verify")
        ->required()
        ->check(CLI::IsMember({"density", "deficiency"}));
    sweep->add_option("--k", sweep_k, "restrict deficiency rows to one k");

    auto* zm = app.add_subcommand("zm", "search ZM triples by deficiency, CSV");
    int max_mn = 120, zm_k = 4;
    long long tau_bound = -1;
    bool verify_bij = false;
    zm->add_option("--max-mn", max_mn, "bound on m*n")
        ->required()
        ->check(CLI::Range(1, latnorm::kMaxGroupOrder));
    zm->add_option("--k", zm_k, "target deficiency")->required();
    zm->add_option("--tau-bound", tau_bound, "pre-filter by tau(m)+tau(n) <= bound");
    zm->add_flag("--verify-bijection", verify_bij,
                 "cross-check the subgroup parametrization per hit");

    auto* dot = app.add_subcommand("dot", "Hasse diagram of the subgroup lattice, DOT");
    std::string dot_spec;
    bool color_normalizers = false;
    dot->add_option("spec", dot_spec, "group spec")->required();
    dot->add_flag("--color-normalizers", color_normalizers,
                  "fill nodes that occur as normalizers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) {
            if (spec_text.empty() == file_path.empty())
                throw std::invalid_argument("analyze needs exactly one of <spec> or --file");
            return cmd_analyze(opts, spec_text, file_path);
        }
        if (app.got_subcommand(sweep))
            return cmd_sweep(opts, max_order, check_name,
                             sweep_k >= 0 ? std::optional<int>(sweep_k) : std::nullopt);
        if (app.got_subcommand(zm)) return cmd_zm(opts, max_mn, zm_k, tau_bound, verify_bij);
        if (app.got_subcommand(dot)) return cmd_dot(opts, dot_spec, color_normalizers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
