// Command-line front end: analysis of a single graph, the rooted
// shallow-minor verifier, the k<=6 clique-minor pipeline, the generators,
// and the exhaustive search campaigns with JSON-lines checkpoints.
//
// Exit codes: 0 ok, 1 usage, 2 invalid input, 3 theorem violation or
// counterexample candidate, 4 inconclusive.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "kempe/coloring.hpp"
#include "kempe/enumerate.hpp"
#include "kempe/generators.hpp"
#include "kempe/graph.hpp"
#include "kempe/io.hpp"
#include "kempe/matching.hpp"
#include "kempe/minors.hpp"
#include "kempe/search.hpp"

namespace {

using namespace kempe;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitTheoremViolation = 3;
constexpr int kExitInconclusive = 4;

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

struct AnalyzeOpts {
    std::string input;
    int oracle_bound = 10;
    bool trace = false;
};

int run_analyze(const AnalyzeOpts& opts) {
    Graph g = load_graph_file(opts.input);
    std::cout << "n: " << g.vertex_count() << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    if (g.vertex_count() == 0) return kExitOk;

    auto [chi, witness] = chromatic_number(g);
    std::cout << "chi: " << chi << "\n";
    auto two = colorings_of_size(g, chi, 2);
    bool unique = two.size() == 1;
    std::cout << "unique_chi_coloring: " << (unique ? "yes" : "no") << "\n";
    std::cout << "kempe_on_first_chi_coloring: " << (is_kempe(g, two[0]) ? "yes" : "no") << "\n";

    auto anti = find_antitriangle(g);
    if (anti)
        std::cout << "antitriangle: {" << (*anti)[0] << "," << (*anti)[1] << "," << (*anti)[2]
                  << "}\n";
    else
        std::cout << "antitriangle: none\n";

    std::cout << "vertex_connectivity: " << vertex_connectivity(g) << "\n";

    if (g.vertex_count() <= opts.oracle_bound)
        std::cout << "hadwiger: " << hadwiger_number(g, opts.oracle_bound) << "\n";
    else
        std::cout << "hadwiger: skipped (n > " << opts.oracle_bound << ")\n";
    if (g.vertex_count() <= opts.oracle_bound + 2)
        std::cout << "shallow: " << shallow_number(g, opts.oracle_bound + 2) << "\n";
    else
        std::cout << "shallow: skipped (n > " << opts.oracle_bound + 2 << ")\n";

    if (opts.trace && !anti && unique) {
        Graph co = complement(g);
        std::vector<Edge> medges;
        for (const auto& cls : two[0].classes) {
            if (cls.size() != 2) { medges.clear(); break; }
            auto vs = cls.to_vector();
            medges.emplace_back(vs[0], vs[1]);
        }
        if (!medges.empty()) {
            for (const DecompStep& st : kotzig_decompose(co, Matching(medges)))
                std::cout << decomp_step_to_json(st).dump() << "\n";
        }
    }
    return kExitOk;
}

struct VerifyT4Opts {
    std::string input;
    long long sample = 0;
    bool trace = false;
};

int run_verify_t4(const VerifyT4Opts& opts) {
    Graph g = load_graph_file(opts.input);
    if (find_antitriangle(g))
        throw std::invalid_argument("verify-t4: graph has an antitriangle");
    auto [chi, witness] = chromatic_number(g);
    auto two = colorings_of_size(g, chi, 2);
    if (two.size() != 1)
        throw std::invalid_argument("verify-t4: graph does not have a unique minimum coloring");
    const Coloring& c = two[0];
    std::cout << "chi: " << chi << "\n";

    if (opts.trace) {
        bool all_pairs = true;
        std::vector<Edge> medges;
        for (const auto& cls : c.classes) {
            if (cls.size() != 2) { all_pairs = false; break; }
            auto vs = cls.to_vector();
            medges.emplace_back(vs[0], vs[1]);
        }
        if (all_pairs)
            for (const DecompStep& st : kotzig_decompose(complement(g), Matching(medges)))
                std::cout << decomp_step_to_json(st).dump() << "\n";
    }

    long long total = transversal_count(c);
    long long todo = opts.sample > 0 ? std::min(opts.sample, total) : total;
    long long ok = 0;
    for (long long i = 0; i < todo; ++i) {
        VertexSet t = transversal_by_index(c, i);
        CliqueMinor minor = shallow_minor_rooted(g, c, t);  // throws on violation
        auto val = validate_clique_minor(g, minor, true, t);
        if (!val) throw theorem_violation("verify-t4: " + val.reason);
        ++ok;
    }
    std::cout << "transversals_checked: " << ok << " of " << total << "\n";
    std::cout << "all_valid: yes\n";
    return kExitOk;
}

struct MinorK6Opts {
    std::string input;
    std::string coloring_file;
    int k4_bound = 16;
};

int run_minor_k6(const MinorK6Opts& opts) {
    Graph g = load_graph_file(opts.input);
    std::optional<Coloring> coloring;
    if (!opts.coloring_file.empty()) {
        coloring = coloring_from_json(json::parse(read_file(opts.coloring_file)));
    } else {
        auto found = kempe_colorings_up_to(g, 6, 1);
        if (found.empty())
            throw std::invalid_argument("minor-k6: no Kempe-coloring of size <= 6 found");
        coloring = found.front();
    }
    if (!is_kempe(g, *coloring))
        throw std::invalid_argument("minor-k6: the supplied coloring is not a Kempe-coloring");
    std::cout << "k: " << coloring->size() << "\n";

    CliqueMinor minor = kempe_clique_minor_k6(g, *coloring, opts.k4_bound);
    std::cout << "minor: " << minor_to_json(minor).dump() << "\n";
    // adjacency certificate: one witnessing edge per branch-set pair
    for (std::size_t i = 0; i < minor.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < minor.branch_sets.size(); ++j) {
            for (int u : minor.branch_sets[i]) {
                VertexSet hits = g.neighbors(u) & minor.branch_sets[j];
                if (!hits.empty()) {
                    std::cout << "sets " << i << "," << j << ": edge {" << u << "," << hits.front()
                              << "}\n";
                    break;
                }
            }
        }
    return kExitOk;
}

void write_outputs(const std::string& base, const Graph& g, const Coloring* c, const Matching* m) {
    write_file(base + ".graph.json", graph_to_json(g).dump(2) + "\n");
    std::cout << "wrote " << base << ".graph.json\n";
    if (c) {
        write_file(base + ".coloring.json", coloring_to_json(*c).dump() + "\n");
        std::cout << "wrote " << base << ".coloring.json\n";
    }
    if (m) {
        write_file(base + ".matching.json", matching_to_json(*m).dump() + "\n");
        std::cout << "wrote " << base << ".matching.json\n";
    }
}

struct SearchOpts {
    int n = 6;
    int k = 4;
    long long sample = 0;
    double deadline_seconds = 0;
    std::string checkpoint;
};

Deadline instance_deadline(const SearchOpts& opts) {
    if (opts.deadline_seconds <= 0) return Deadline::never();
    return Deadline::after(std::chrono::duration<double>(opts.deadline_seconds));
}

int run_search_p1(const SearchOpts& opts) {
    std::optional<CheckpointFile> checkpoint;
    if (!opts.checkpoint.empty()) checkpoint.emplace(opts.checkpoint);

    long examined = 0, found = 0, none = 0, skipped = 0;
    EnumSpec spec;
    spec.n = opts.n;
    spec.canonical = opts.n <= kCanonicalMaxN;
    enumerate_graphs(spec, [&](const Graph& g) {
        if (!is_triangle_free(g)) return true;
        auto m = find_perfect_matching(g);
        if (!m) return true;
        for (std::size_t i = 0; i < m->edges.size(); ++i)
            for (std::size_t j = i + 1; j < m->edges.size(); ++j) {
                const Edge &e = m->edges[i], &f = m->edges[j];
                int joining = (g.has_edge(e.u, f.u) ? 1 : 0) + (g.has_edge(e.u, f.v) ? 1 : 0) +
                              (g.has_edge(e.v, f.u) ? 1 : 0) + (g.has_edge(e.v, f.v) ? 1 : 0);
                if (joining > 1) return true;
            }
        char key[64];
        std::snprintf(key, sizeof key, "p1:n=%d:m=0x%llx", opts.n,
                      static_cast<unsigned long long>(labeled_mask(g)));
        if (checkpoint && checkpoint->completed(key)) {
            ++skipped;
            return true;
        }
        auto start = std::chrono::steady_clock::now();
        auto a = p1_search(g, *m);
        ++examined;
        Finding f;
        f.key = key;
        f.kind = "p1";
        f.graph = graph_to_json(g);
        f.verdict = a ? "found" : "none";
        if (a) f.certificate = vertex_set_to_json(*a);
        f.runtime_ms = ms_since(start);
        if (checkpoint) checkpoint->append(f);
        if (a) ++found;
        else {
            ++none;
            std::cout << "counterexample-candidate: " << f.key << " "
                      << graph_to_json(g).dump() << "\n";
        }
        return true;
    });
    std::cout << "p1 campaign: examined " << examined << ", found " << found << ", none " << none
              << ", resumed-past " << skipped << "\n";
    return none > 0 ? kExitTheoremViolation : kExitOk;
}

int run_search_c1(const SearchOpts& opts) {
    std::optional<CheckpointFile> checkpoint;
    if (!opts.checkpoint.empty()) checkpoint.emplace(opts.checkpoint);

    long examined = 0, found = 0, none = 0, inconclusive = 0, skipped = 0;
    EnumSpec spec;
    spec.n = opts.n;
    spec.canonical = opts.n <= kCanonicalMaxN;
    enumerate_graphs(spec, [&](const Graph& g) {
        auto colorings = kempe_colorings_up_to(g, opts.k);
        for (std::size_t ci = 0; ci < colorings.size(); ++ci) {
            const Coloring& c = colorings[ci];
            long long total = transversal_count(c);
            long long todo = opts.sample > 0 ? std::min(opts.sample, total) : total;
            for (long long ti = 0; ti < todo; ++ti) {
                char key[96];
                std::snprintf(key, sizeof key, "c1:n=%d:m=0x%llx:c=%zu:t=%lld", opts.n,
                              static_cast<unsigned long long>(labeled_mask(g)), ci, ti);
                if (checkpoint && checkpoint->completed(key)) {
                    ++skipped;
                    continue;
                }
                VertexSet t = transversal_by_index(c, ti);
                auto start = std::chrono::steady_clock::now();
                auto res = c1_check(g, c, t, instance_deadline(opts));
                ++examined;
                Finding f;
                f.key = key;
                f.kind = "c1";
                f.graph = graph_to_json(g);
                f.verdict = to_string(res.verdict);
                if (res.minor) f.certificate = minor_to_json(*res.minor);
                f.runtime_ms = ms_since(start);
                if (checkpoint) checkpoint->append(f);
                switch (res.verdict) {
                    case SearchVerdict::found: ++found; break;
                    case SearchVerdict::none:
                        ++none;
                        std::cout << "counterexample-candidate: " << f.key << " "
                                  << graph_to_json(g).dump() << " t=" << vertex_set_to_json(t).dump()
                                  << "\n";
                        break;
                    default: ++inconclusive; break;
                }
            }
        }
        return true;
    });
    std::cout << "c1 campaign: examined " << examined << ", found " << found << ", none " << none
              << ", inconclusive " << inconclusive << ", resumed-past " << skipped << "\n";
    if (none > 0) return kExitTheoremViolation;
    if (inconclusive > 0) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kempe-colorings, clique minors, and matching decompositions at desk scale"};
    app.require_subcommand(1);

    AnalyzeOpts analyze_opts;
    auto* analyze = app.add_subcommand("analyze", "report coloring/minor invariants of one graph");
    analyze->add_option("--input", analyze_opts.input, "graph file (json or edge list)")
        ->required();
    analyze->add_option("--oracle-bound", analyze_opts.oracle_bound,
                        "max n for the exhaustive minor oracles");
    analyze->add_flag("--trace", analyze_opts.trace,
                      "emit the matching decomposition of the complement as JSON lines");

    VerifyT4Opts t4_opts;
    auto* verify_t4 = app.add_subcommand(
        "verify-t4", "build and validate rooted shallow minors for every transversal");
    verify_t4->add_option("--input", t4_opts.input, "graph file")->required();
    verify_t4->add_option("--sample", t4_opts.sample, "check only the first N transversals");
    verify_t4->add_flag("--trace", t4_opts.trace, "emit the decomposition as JSON lines");

    MinorK6Opts k6_opts;
    auto* minor_k6 =
        app.add_subcommand("minor-k6", "clique minor from a Kempe-coloring of size <= 6");
    minor_k6->add_option("--input", k6_opts.input, "graph file")->required();
    minor_k6->add_option("--coloring", k6_opts.coloring_file,
                         "coloring sidecar (JSON list of lists); default: search for one");
    minor_k6->add_option("--k4-bound", k6_opts.k4_bound, "size cap for the rooted-K4 search");

    auto* generate = app.add_subcommand("generate", "emit generator graphs plus sidecar files");
    generate->require_subcommand(1);
    int gen_k = 3;
    std::string gen_out;
    auto* gen_grid = generate->add_subcommand("grid3k", "3-by-k grid with its column coloring");
    gen_grid->add_option("--k", gen_k, "number of columns (>= 3)")->required();
    gen_grid->add_option("--output", gen_out, "output base path")->required();

    int cover_k = 2;
    std::string cover_out;
    auto* gen_cover = generate->add_subcommand(
        "tournament-cover", "bipartite double cover of the rotational tournament");
    gen_cover->add_option("--k", cover_k, "tournament parameter (n = 2k+1)")->required();
    gen_cover->add_option("--output", cover_out, "output base path")->required();

    int pm_n = 10;
    double pm_density = 0.3;
    std::uint64_t pm_seed = 1;
    std::string pm_out;
    auto* gen_pm =
        generate->add_subcommand("unique-pm", "random graph with a unique perfect matching");
    gen_pm->add_option("--n", pm_n, "even vertex count")->required();
    gen_pm->add_option("--density", pm_density, "attachment probability in [0,1]");
    gen_pm->add_option("--seed", pm_seed, "RNG seed");
    gen_pm->add_option("--output", pm_out, "output base path")->required();

    std::string apex_in, apex_coloring, apex_out;
    int apex_count = 1;
    auto* gen_apex =
        generate->add_subcommand("apex", "add universal vertices as singleton classes");
    gen_apex->add_option("--input", apex_in, "graph file")->required();
    gen_apex->add_option("--coloring", apex_coloring, "coloring sidecar")->required();
    gen_apex->add_option("--count", apex_count, "number of apex vertices");
    gen_apex->add_option("--output", apex_out, "output base path")->required();

    auto* search = app.add_subcommand("search", "exhaustive conjecture campaigns");
    search->require_subcommand(1);
    SearchOpts p1_opts;
    auto* search_p1 = search->add_subcommand(
        "p1", "balanced 4-cycle-splitting sets over triangle-free matched graphs");
    search_p1->add_option("--n", p1_opts.n, "vertex count")->required();
    search_p1->add_option("--checkpoint", p1_opts.checkpoint, "JSON-lines findings file");
    search_p1->add_option("--deadline", p1_opts.deadline_seconds, "per-instance seconds");

    SearchOpts c1_opts;
    auto* search_c1 = search->add_subcommand("c1", "traversed clique minors for Kempe-colorings");
    search_c1->add_option("--n", c1_opts.n, "vertex count")->required();
    search_c1->add_option("--k", c1_opts.k, "max Kempe-coloring size");
    search_c1->add_option("--sample", c1_opts.sample, "transversals per coloring");
    search_c1->add_option("--checkpoint", c1_opts.checkpoint, "JSON-lines findings file");
    search_c1->add_option("--deadline", c1_opts.deadline_seconds, "per-instance seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return run_analyze(analyze_opts);
        if (*verify_t4) return run_verify_t4(t4_opts);
        if (*minor_k6) return run_minor_k6(k6_opts);
        if (*gen_grid) {
            auto [g, c] = grid3k(gen_k);
            write_outputs(gen_out, g, &c, nullptr);
            return kExitOk;
        }
        if (*gen_cover) {
            auto [g, m] = tournament_double_cover(rotational_tournament(cover_k));
            write_outputs(cover_out, g, nullptr, &m);
            return kExitOk;
        }
        if (*gen_pm) {
            auto [g, m] = unique_pm_graph(pm_n, pm_density, pm_seed);
            write_outputs(pm_out, g, nullptr, &m);
            return kExitOk;
        }
        if (*gen_apex) {
            Graph g = load_graph_file(apex_in);
            Coloring c = coloring_from_json(json::parse(read_file(apex_coloring)));
            auto aug = apex_augment(g, c, apex_count);
            write_outputs(apex_out, aug.graph, &aug.coloring, nullptr);
            return kExitOk;
        }
        if (*search_p1) return run_search_p1(p1_opts);
        if (*search_c1) return run_search_c1(c1_opts);
    } catch (const theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kExitTheoremViolation;
    } catch (const deadline_exceeded& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitUsage;
}
