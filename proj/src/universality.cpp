#include "homcx/universality.hpp"

#include <algorithm>
#include <map>

#include "homcx/hom.hpp"
#include "homcx/sampling.hpp"

namespace homcx {

namespace {

int ball_radius(int k) {
    if (k < 1 || k > 20) throw input_error("k out of the supported range [1, 20]");
    return (1 << k) - 1;
}

}  // namespace

ConstructionParams choose_k(const Graph& t) {
    if (t.vertex_count() == 0) throw input_error("test graph has no vertices");
    if (t.vertex_count() == 1) {
        if (!t.has_loop(0))
            throw input_error("test graph has no edge and is not the looped point");
        return {1, 0, true};
    }
    if (!is_connected(t)) throw input_error("test graph is disconnected");
    ConstructionParams params;
    params.d = diameter(t);
    params.k = 2;
    while ((1 << (params.k - 1)) - 1 < params.d) ++params.k;
    return params;
}

GkxData build_g_kx_data(const SimplicialComplex& x, int k, std::uint64_t max_cells) {
    if (x.vertex_count() == 0) throw input_error("cannot build G_{k,X} for an empty complex");
    ball_radius(k);  // range check

    GkxData data;
    SimplicialComplex current = x;
    std::vector<Face> support(x.vertex_count());
    for (int v = 0; v < x.vertex_count(); ++v) support[v] = {v};

    for (int step = 0; step < k; ++step) {
        Subdivision sub = barycentric_subdivision_traced(current, max_cells);
        std::vector<Face> next_support(sub.complex.vertex_count());
        for (int v = 0; v < sub.complex.vertex_count(); ++v) {
            Face united;
            for (int member : sub.vertex_face[v])
                united.insert(united.end(), support[member].begin(), support[member].end());
            std::sort(united.begin(), united.end());
            united.erase(std::unique(united.begin(), united.end()), united.end());
            next_support[v] = std::move(united);
        }
        data.xk_minus_1 = std::move(current);
        data.barycenter_face = std::move(sub.vertex_face);
        current = std::move(sub.complex);
        support = std::move(next_support);
    }

    data.xk = std::move(current);
    data.support = std::move(support);
    data.graph = looped_one_skeleton(data.xk);
    if (data.graph.cell_count() > max_cells)
        throw cap_exceeded("build_g_kx", "graph size exceeds the cell cap");
    return data;
}

Graph build_g_kx(const SimplicialComplex& x, int k, std::uint64_t max_cells) {
    return build_g_kx_data(x, k, max_cells).graph;
}

Graph ball_subgraph(const Graph& gkx, const SimplicialComplex& x, const std::string& center,
                    int k) {
    x.index_of(center);  // must be an original vertex
    const int radius = ball_radius(k);
    const int c = gkx.index_of(center);
    auto dist = bfs_distances(gkx, c);
    std::vector<int> keep;
    for (int v = 0; v < gkx.vertex_count(); ++v)
        if (dist[v] >= 0 && dist[v] <= radius) keep.push_back(v);
    return induced_subgraph(gkx, keep);
}

Graph intersection_subgraph(const Graph& gkx, const SimplicialComplex& x,
                            const std::vector<std::string>& members, int k) {
    if (members.empty()) throw input_error("intersection over an empty vertex set");
    const int radius = ball_radius(k);
    std::vector<char> keep(gkx.vertex_count(), 1);
    for (const auto& name : members) {
        x.index_of(name);
        auto dist = bfs_distances(gkx, gkx.index_of(name));
        for (int v = 0; v < gkx.vertex_count(); ++v)
            if (dist[v] < 0 || dist[v] > radius) keep[v] = 0;
    }
    std::vector<int> kept;
    for (int v = 0; v < gkx.vertex_count(); ++v)
        if (keep[v]) kept.push_back(v);
    return induced_subgraph(gkx, kept);
}

VertexType vertex_type(const SimplicialComplex& x, int k, const std::string& name,
                       std::uint64_t max_cells) {
    GkxData data = build_g_kx_data(x, k, max_cells);
    int v = -1;
    for (int i = 0; i < data.xk.vertex_count(); ++i)
        if (data.xk.vertex_name(i) == name) {
            v = i;
            break;
        }
    if (v < 0) throw input_error("not a vertex of bd^k(X): " + name);
    VertexType type;
    type.i = static_cast<int>(data.support[v].size()) - 1;
    type.j = static_cast<int>(data.barycenter_face[v].size()) - 1;
    return type;
}

CoverNerve cover_nerve(const SimplicialComplex& x, int k, std::uint64_t max_cells) {
    GkxData data = build_g_kx_data(x, k, max_cells);
    std::vector<std::pair<std::string, std::vector<std::string>>> cover;
    for (int v = 0; v < x.vertex_count(); ++v) {
        Graph ball = ball_subgraph(data.graph, x, x.vertex_name(v), k);
        cover.emplace_back(x.vertex_name(v), ball.vertex_names());
    }
    CoverNerve out;
    out.nerve = nerve(cover, max_cells);
    std::map<std::string, std::string> identity;
    for (const auto& name : out.nerve.vertex_names()) identity[name] = name;
    out.matches_x = complexes_equal_under(out.nerve, x, identity);
    return out;
}

bool UniversalityReport::all_checks() const {
    if (!match || !nerve_matches) return false;
    for (const auto& [name, ok] : balls_dismantlable)
        if (!ok) return false;
    for (const auto& [name, ok] : intersections_dismantlable)
        if (!ok) return false;
    return true;
}

UniversalityReport verify_universality(const Graph& t, const SimplicialComplex& x,
                                       std::optional<int> k_override, std::uint64_t max_cells,
                                       HomRoute route) {
    ConstructionParams params = choose_k(t);
    int k = params.k;
    if (k_override) {
        if (*k_override < params.k)
            throw input_error("k below the admissible floor for this test graph");
        k = *k_override;
    }

    UniversalityReport report;
    report.k = k;

    GkxData data = build_g_kx_data(x, k, max_cells);
    report.g_vertices = static_cast<std::size_t>(data.graph.vertex_count());
    report.g_edges = data.graph.edge_entry_count();

    SimplicialComplex hom_cx = route == HomRoute::exponential
                                   ? hom_complex_exponential(t, data.graph, max_cells)
                                   : hom_complex_order(t, data.graph, max_cells);
    report.complex_f_vector = f_vector(hom_cx);
    report.betti_x = betti_z2(x, max_cells);
    report.betti_hom = betti_z2(hom_cx, max_cells);
    report.match = betti_equal(report.betti_x, report.betti_hom);

    for (int v = 0; v < x.vertex_count(); ++v) {
        Graph ball = ball_subgraph(data.graph, x, x.vertex_name(v), k);
        report.balls_dismantlable.emplace_back(x.vertex_name(v), dismantle(ball).dismantlable);
    }

    for (const auto& level : x.faces(max_cells)) {
        for (const Face& face : level) {
            std::vector<std::string> members;
            std::string label;
            for (int v : face) {
                if (!label.empty()) label += ",";
                label += x.vertex_name(v);
                members.push_back(x.vertex_name(v));
            }
            Graph sub = intersection_subgraph(data.graph, x, members, k);
            bool ok = sub.vertex_count() > 0 && dismantle(sub).dismantlable;
            report.intersections_dismantlable.emplace_back(label, ok);
        }
    }

    CoverNerve nerve_check = cover_nerve(x, k, max_cells);
    report.nerve_matches = nerve_check.matches_x;
    return report;
}

Conjecture41Report conjecture41(const SimplicialComplex& x, std::uint64_t max_cells) {
    Conjecture41Report report;
    Graph g = build_g_kx(x, 1, max_cells);
    report.g_vertices = static_cast<std::size_t>(g.vertex_count());
    report.g_edges = g.edge_entry_count();
    SimplicialComplex hom_cx = hom_complex_exponential(complete_graph(2), g, max_cells);
    report.betti_x = betti_z2(x, max_cells);
    report.betti_hom = betti_z2(hom_cx, max_cells);
    report.match = betti_equal(report.betti_x, report.betti_hom);
    return report;
}

LemmaSampleReport sample_lemma_checks(const Graph& t, const SimplicialComplex& x, int k,
                                      int n_samples, std::uint64_t seed,
                                      std::uint64_t max_cells) {
    ConstructionParams params = choose_k(t);
    if (k < params.k) throw input_error("k below the admissible floor for this test graph");

    GkxData data = build_g_kx_data(x, k, max_cells);
    auto maps = enumerate_homs(t, data.graph, max_cells);

    const int radius = ball_radius(k);
    std::vector<std::vector<int>> ball_dist;
    for (int v = 0; v < x.vertex_count(); ++v)
        ball_dist.push_back(bfs_distances(data.graph, data.graph.index_of(x.vertex_name(v))));

    const int bound = std::max(2, params.d);
    SplitMix64 rng(seed);
    LemmaSampleReport report;
    report.samples = n_samples;

    for (int s = 0; s < n_samples; ++s) {
        auto alpha = sample_map_clique(t, data.graph, maps, rng, 6);
        Graph support = support_subgraph(t, data.graph, alpha);
        if (diameter(support) > bound) ++report.diameter_failures;

        std::vector<int> support_idx;
        for (const auto& f : alpha) support_idx.insert(support_idx.end(), f.begin(), f.end());
        std::sort(support_idx.begin(), support_idx.end());
        support_idx.erase(std::unique(support_idx.begin(), support_idx.end()), support_idx.end());
        bool contained = false;
        for (int v = 0; v < x.vertex_count() && !contained; ++v) {
            contained = std::all_of(support_idx.begin(), support_idx.end(), [&](int w) {
                return ball_dist[v][w] >= 0 && ball_dist[v][w] <= radius;
            });
        }
        if (!contained) ++report.cover_failures;
    }
    return report;
}

}  // namespace homcx
