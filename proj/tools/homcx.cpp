// homcx — graph Hom complexes, the G_{k,X} universality construction, and
// Z/2 homology checks.  Reports are single-line JSON on stdout; human
// summaries go to stderr.  Exit codes: 0 success / property holds,
// 1 property fails, 2 input error, 3 cell cap exceeded.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/json_io.hpp"
#include "homcx/universality.hpp"

using namespace homcx;

namespace {

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int fail_input(const std::string& message) {
    Json j;
    j["error"] = {{"kind", "input"}, {"message", message}};
    emit(j);
    std::cerr << "error: " << message << "\n";
    return 2;
}

int fail_cap(const cap_exceeded& e) {
    Json j;
    j["error"] = {{"kind", "cap_exceeded"}, {"stage", e.stage}, {"message", e.what()}};
    emit(j);
    std::cerr << "error: cell cap exceeded in " << e.stage << ": " << e.what() << "\n";
    return 3;
}

struct CommonOpts {
    std::uint64_t max_cells = default_cell_cap;
    std::uint64_t seed = 0;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_out = true) {
    cmd->add_option("--max-cells", opts.max_cells, "Cell cap for constructed objects");
    cmd->add_option("--seed", opts.seed, "Seed for sampled property runs");
    if (with_out) cmd->add_option("--out", opts.out, "Write the constructed object to a file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph Hom complexes, the G_{k,X} construction, and Z/2 Betti verification"};
    app.require_subcommand(1);

    std::string x_path, t_path, g_path, via = "exp";
    std::optional<int> k_opt;
    CommonOpts opts;

    auto* betti_cmd = app.add_subcommand("betti", "Z/2 Betti numbers of a complex");
    betti_cmd->add_option("--x", x_path, "Complex JSON file")->required();
    add_common(betti_cmd, opts, false);

    auto* hom_cmd = app.add_subcommand("hom", "Hom complex of a pair of graphs");
    hom_cmd->add_option("--t", t_path, "Test graph JSON file")->required();
    hom_cmd->add_option("--g", g_path, "Target graph JSON file")->required();
    hom_cmd->add_option("--via", via, "Construction route: exp or poset")
        ->check(CLI::IsMember({"exp", "poset"}));
    add_common(hom_cmd, opts);

    auto* build_cmd = app.add_subcommand("build", "Build the graph G_{k,X}");
    build_cmd->add_option("--x", x_path, "Complex JSON file")->required();
    build_cmd->add_option("--t", t_path, "Test graph JSON file (sets the minimal k)");
    build_cmd->add_option("--k", k_opt, "Subdivision depth (must respect the floor from --t)");
    add_common(build_cmd, opts);

    auto* verify_cmd = app.add_subcommand("verify", "Verify the universality construction");
    verify_cmd->add_option("--t", t_path, "Test graph JSON file")->required();
    verify_cmd->add_option("--x", x_path, "Complex JSON file")->required();
    verify_cmd->add_option("--k", k_opt, "Force a larger subdivision depth");
    verify_cmd->add_option("--via", via, "Hom complex route: exp or poset")
        ->check(CLI::IsMember({"exp", "poset"}));
    add_common(verify_cmd, opts, false);

    auto* dismantle_cmd = app.add_subcommand("dismantle", "Greedy fold-down of a graph");
    dismantle_cmd->add_option("--g", g_path, "Graph JSON file")->required();
    add_common(dismantle_cmd, opts, false);

    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of the ball cover of G_{k,X}");
    nerve_cmd->add_option("--x", x_path, "Complex JSON file")->required();
    nerve_cmd->add_option("--k", k_opt, "Subdivision depth (default 2)");
    add_common(nerve_cmd, opts);

    auto* conj_cmd = app.add_subcommand("conjecture41", "The k = 1 experiment for T = K_2");
    conj_cmd->add_option("--x", x_path, "Complex JSON file")->required();
    add_common(conj_cmd, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_input(e.what());
    }

    try {
        if (*betti_cmd) {
            auto x = complex_from_json(load_json_file(x_path));
            auto betti = betti_z2(x, opts.max_cells);
            emit(betti_to_json(betti, euler_characteristic(x)));
            std::cerr << "betti computed for " << x_path << "\n";
            return 0;
        }

        if (*hom_cmd) {
            Graph t = graph_from_json(load_json_file(t_path));
            Graph g = graph_from_json(load_json_file(g_path));
            Json j;
            j["via"] = via;
            if (via == "exp") {
                auto cx = hom_complex_exponential(t, g, opts.max_cells);
                j["vertices"] = cx.vertex_count();
                j["f_vector"] = f_vector(cx);
                j["betti"] = betti_z2(cx, opts.max_cells);
                if (!opts.out.empty()) write_json_file(opts.out, complex_to_json(cx));
            } else {
                auto hp = hom_poset(t, g, opts.max_cells);
                auto cx = order_complex(hom_poset_order(hp, g), opts.max_cells);
                int atoms = 0;
                for (const auto& m : hp.elements) atoms += m.is_atom();
                j["elements"] = hp.elements.size();
                j["atoms"] = atoms;
                j["f_vector"] = f_vector(cx);
                j["betti"] = betti_z2(cx, opts.max_cells);
                if (!opts.out.empty()) write_json_file(opts.out, hom_poset_to_json(t, g, hp));
            }
            emit(j);
            std::cerr << "hom complex via " << via << " done\n";
            return 0;
        }

        if (*build_cmd) {
            auto x = complex_from_json(load_json_file(x_path));
            int k;
            if (!t_path.empty()) {
                ConstructionParams params = choose_k(graph_from_json(load_json_file(t_path)));
                k = params.k;
                if (k_opt) {
                    if (*k_opt < params.k)
                        return fail_input("k below the admissible floor for this test graph");
                    k = *k_opt;
                }
            } else if (k_opt) {
                k = *k_opt;
            } else {
                return fail_input("build needs --t or --k");
            }
            Graph g = build_g_kx(x, k, opts.max_cells);
            Json j;
            j["k"] = k;
            j["g_size"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_entry_count()}};
            if (!opts.out.empty()) write_json_file(opts.out, graph_to_json(g));
            emit(j);
            std::cerr << "built G_{" << k << ",X} with " << g.vertex_count() << " vertices\n";
            return 0;
        }

        if (*verify_cmd) {
            Graph t = graph_from_json(load_json_file(t_path));
            auto x = complex_from_json(load_json_file(x_path));
            HomRoute route = via == "exp" ? HomRoute::exponential : HomRoute::poset;
            auto report = verify_universality(t, x, k_opt, opts.max_cells, route);
            emit(report_to_json(report));

            std::cerr << "verify: match=" << (report.match ? "yes" : "no")
                      << " nerve=" << (report.nerve_matches ? "yes" : "no");
            try {
                auto spot = sample_lemma_checks(t, x, report.k, 25, opts.seed, opts.max_cells);
                std::cerr << " | sampled lemma checks: " << spot.samples << " cliques, "
                          << spot.diameter_failures << " diameter misses, "
                          << spot.cover_failures << " cover misses\n";
                if (spot.diameter_failures || spot.cover_failures)
                    std::cerr << "warning: sampled lemma check failed\n";
            } catch (const cap_exceeded&) {
                std::cerr << " | sampled lemma checks skipped (cell cap)\n";
            }
            return report.all_checks() ? 0 : 1;
        }

        if (*dismantle_cmd) {
            Graph g = graph_from_json(load_json_file(g_path));
            auto result = dismantle(g);
            emit(dismantle_to_json(g, result));
            std::cerr << (result.dismantlable ? "dismantlable" : "not dismantlable") << " ("
                      << result.folds.steps.size() << " folds)\n";
            return result.dismantlable ? 0 : 1;
        }

        if (*nerve_cmd) {
            auto x = complex_from_json(load_json_file(x_path));
            int k = k_opt.value_or(2);
            auto result = cover_nerve(x, k, opts.max_cells);
            Json j;
            j["k"] = k;
            j["f_vector"] = f_vector(result.nerve);
            j["matches_x"] = result.matches_x;
            if (!opts.out.empty()) write_json_file(opts.out, complex_to_json(result.nerve));
            emit(j);
            std::cerr << "nerve " << (result.matches_x ? "matches" : "does not match") << " X\n";
            return result.matches_x ? 0 : 1;
        }

        if (*conj_cmd) {
            auto x = complex_from_json(load_json_file(x_path));
            auto report = conjecture41(x, opts.max_cells);
            emit(conjecture41_to_json(report));
            std::cerr << "conjecture41: betti " << (report.match ? "match" : "differ")
                      << " (reported, not asserted)\n";
            return 0;
        }
    } catch (const cap_exceeded& e) {
        return fail_cap(e);
    } catch (const input_error& e) {
        return fail_input(e.what());
    }
    return fail_input("no command dispatched");
}
