#include "homcx/sampling.hpp"

#include <algorithm>

#include "homcx/hom.hpp"

namespace homcx {

Graph random_dismantlable_graph(SplitMix64& rng, int n_vertices) {
    if (n_vertices < 1) throw input_error("need at least one vertex");
    std::vector<std::vector<int>> adj(n_vertices);
    adj[0] = {0};
    for (int v = 1; v < n_vertices; ++v) {
        int witness = static_cast<int>(rng.below(v));
        std::vector<int> nbrs = {v, witness};
        // Keep the graphs sparse: at most one extra neighbor per vertex, so
        // the Hom posets downstream stay enumerable.
        int extras = 0;
        for (int u : adj[witness]) {
            if (u == witness || u == v || extras >= 1) continue;
            if (rng.below(4) == 0) {
                nbrs.push_back(u);
                ++extras;
            }
        }
        for (int u : nbrs) {
            adj[v].push_back(u);
            if (u != v) adj[u].push_back(v);
        }
    }

    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n_vertices; ++v) {
        names.push_back(std::to_string(v));
        for (int u : adj[v])
            if (v <= u) edges.emplace_back(v, u);
    }
    return Graph(std::move(names), edges);
}

std::vector<VertexMap> sample_map_clique(const Graph& t, const Graph& g,
                                         const std::vector<VertexMap>& maps, SplitMix64& rng,
                                         int max_size) {
    if (maps.empty()) throw input_error("no graph maps to sample from");
    std::vector<VertexMap> clique = {maps[rng.below(maps.size())]};

    std::vector<int> candidates;
    for (int i = 0; i < static_cast<int>(maps.size()); ++i)
        if (maps_adjacent(t, g, clique[0], maps[i]) && !(maps[i] == clique[0]))
            candidates.push_back(i);

    while (static_cast<int>(clique.size()) < max_size && !candidates.empty()) {
        int pick = candidates[rng.below(candidates.size())];
        clique.push_back(maps[pick]);
        std::vector<int> next;
        for (int i : candidates)
            if (i != pick && maps_adjacent(t, g, maps[pick], maps[i])) next.push_back(i);
        candidates = std::move(next);
    }
    return clique;
}

}  // namespace homcx
