#include "homcx/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>

namespace homcx {

namespace {

// Dense bit-rows for the domination scans in find_dominated/dismantle.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(const Graph& g)
        : n(g.vertex_count()), words((n + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) set(v, u);
    }

    void set(int row, int col) { bits[static_cast<std::size_t>(row) * words + col / 64] |= 1ull << (col % 64); }
    void clear(int row, int col) { bits[static_cast<std::size_t>(row) * words + col / 64] &= ~(1ull << (col % 64)); }
    const std::uint64_t* row(int r) const { return bits.data() + static_cast<std::size_t>(r) * words; }
    std::uint64_t* row(int r) { return bits.data() + static_cast<std::size_t>(r) * words; }
};

bool row_subset(const std::uint64_t* a, const std::uint64_t* b, int words) {
    for (int i = 0; i < words; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// Least dominated pair among alive vertices, or nullopt.  `alive` is a bit
// row of the same width as the adjacency rows, already intersected away.
std::optional<std::pair<int, int>> scan_dominated(const BitRows& adj, const std::vector<char>& alive) {
    for (int v = 0; v < adj.n; ++v) {
        if (!alive[v]) continue;
        for (int w = 0; w < adj.n; ++w) {
            if (w == v || !alive[w]) continue;
            if (row_subset(adj.row(v), adj.row(w), adj.words)) return std::make_pair(v, w);
        }
    }
    return std::nullopt;
}

void drop_vertex(BitRows& adj, int v) {
    for (int u = 0; u < adj.n; ++u) adj.clear(u, v);
    std::fill(adj.row(v), adj.row(v) + adj.words, 0);
}

}  // namespace

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)), adj_(names_.size()) {
    const int n = vertex_count();
    {
        std::unordered_map<std::string, int> seen;
        for (const auto& name : names_)
            if (!seen.emplace(name, 0).second)
                throw input_error("vertex name collision: " + name);
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge references an unknown vertex index");
        adj_[u].push_back(v);
        if (u != v) adj_[v].push_back(u);
    }
    for (auto& row : adj_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

Graph Graph::from_named_edges(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) {
        if (!index.emplace(names[i], i).second)
            throw input_error("duplicate vertex name: " + names[i]);
    }
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw input_error("edge references undeclared vertex: " + a);
        if (ib == index.end()) throw input_error("edge references undeclared vertex: " + b);
        idx_edges.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(names), idx_edges);
}

int Graph::index_of(const std::string& name) const {
    auto v = find_vertex(name);
    if (!v) throw input_error("unknown vertex: " + name);
    return *v;
}

std::optional<int> Graph::find_vertex(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::span<const int> Graph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw input_error("unknown vertex index");
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw input_error("unknown vertex index");
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Graph::edge_entry_count() const {
    std::size_t directed = 0, loops = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        directed += adj_[v].size();
        if (std::binary_search(adj_[v].begin(), adj_[v].end(), v)) ++loops;
    }
    return (directed - loops) / 2 + loops;
}

std::vector<int> neighborhood(const Graph& g, int v) {
    auto nb = g.neighbors(v);
    return {nb.begin(), nb.end()};
}

std::vector<int> bfs_distances(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw input_error("unknown vertex index");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("diameter of an empty graph");
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d < 0) throw input_error("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_graph_map(const Graph& src, const Graph& dst, const VertexMap& f) {
    if (static_cast<int>(f.size()) != src.vertex_count())
        throw input_error("vertex map is not total on the source graph");
    for (int img : f)
        if (img < 0 || img >= dst.vertex_count())
            throw input_error("vertex map image outside the target graph");
    for (int u = 0; u < src.vertex_count(); ++u)
        for (int v : src.neighbors(u))
            if (!dst.adjacent(f[u], f[v])) return false;
    return true;
}

Graph product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            names.push_back("(" + g.vertex_name(a) + "," + h.vertex_name(b) + ")");

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ng; ++a)
        for (int a2 : g.neighbors(a))
            for (int b = 0; b < nh; ++b)
                for (int b2 : h.neighbors(b)) {
                    int u = a * nh + b, v = a2 * nh + b2;
                    if (u <= v) edges.emplace_back(u, v);
                }
    return Graph(std::move(names), edges);
}

Graph exponential_graph(const Graph& h, const Graph& g, std::uint64_t max_cells) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng == 0) throw input_error("exponential graph over an empty exponent graph");

    std::uint64_t count = 1;
    for (int i = 0; i < ng; ++i) {
        if (nh != 0 && count > max_cells / static_cast<std::uint64_t>(nh))
            throw cap_exceeded("exponential_graph", "vertex count of the exponential graph exceeds the cell cap");
        count *= static_cast<std::uint64_t>(nh);
    }
    if (count > max_cells)
        throw cap_exceeded("exponential_graph", "vertex count of the exponential graph exceeds the cell cap");

    // Maps in lexicographic order of their image tuples.
    std::vector<VertexMap> maps;
    maps.reserve(count);
    VertexMap cur(ng, 0);
    if (nh > 0) {
        while (true) {
            maps.push_back(cur);
            int pos = ng - 1;
            while (pos >= 0 && cur[pos] == nh - 1) cur[pos--] = 0;
            if (pos < 0) break;
            ++cur[pos];
        }
    }

    std::vector<std::string> names;
    names.reserve(maps.size());
    for (const auto& f : maps) {
        std::string name = "(";
        for (int i = 0; i < ng; ++i) {
            if (i) name += ",";
            name += h.vertex_name(f[i]);
        }
        name += ")";
        names.push_back(std::move(name));
    }

    auto maps_adjacent = [&](const VertexMap& f, const VertexMap& f2) {
        for (int v = 0; v < ng; ++v)
            for (int v2 : g.neighbors(v))
                if (!h.adjacent(f[v], f2[v2])) return false;
        return true;
    };

    std::vector<std::pair<int, int>> edges;
    std::uint64_t cells = count;
    for (int i = 0; i < static_cast<int>(maps.size()); ++i)
        for (int j = i; j < static_cast<int>(maps.size()); ++j)
            if (maps_adjacent(maps[i], maps[j])) {
                if (++cells > max_cells)
                    throw cap_exceeded("exponential_graph", "edge count of the exponential graph exceeds the cell cap");
                edges.emplace_back(i, j);
            }
    return Graph(std::move(names), edges);
}

std::vector<int> looped_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.has_loop(v)) out.push_back(v);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

    std::vector<int> position(g.vertex_count(), -1);
    std::vector<std::string> names;
    names.reserve(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        int v = keep[i];
        if (v < 0 || v >= g.vertex_count()) throw input_error("induced subgraph: vertex set is not a subset");
        position[v] = i;
        names.push_back(g.vertex_name(v));
    }

    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : g.neighbors(v))
            if (position[u] >= 0 && position[v] <= position[u])
                edges.emplace_back(position[v], position[u]);
    return Graph(std::move(names), edges);
}

std::optional<std::pair<int, int>> find_dominated(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    BitRows adj(g);
    std::vector<char> alive(g.vertex_count(), 1);
    return scan_dominated(adj, alive);
}

DismantleResult dismantle(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("dismantle of an empty graph");

    BitRows adj(g);
    std::vector<char> alive(g.vertex_count(), 1);
    int alive_count = g.vertex_count();

    DismantleResult result;
    while (auto hit = scan_dominated(adj, alive)) {
        auto [v, w] = *hit;
        result.folds.steps.push_back({v, w});
        alive[v] = 0;
        --alive_count;
        drop_vertex(adj, v);
    }

    std::vector<int> survivors;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) survivors.push_back(v);
    result.residual = induced_subgraph(g, survivors);
    result.dismantlable = alive_count == 1 && result.residual.has_loop(0);
    return result;
}

Graph apply_folds(const Graph& g, const FoldSequence& folds) {
    BitRows adj(g);
    std::vector<char> alive(g.vertex_count(), 1);
    for (const auto& step : folds.steps) {
        if (step.folded < 0 || step.folded >= g.vertex_count() || step.witness < 0 ||
            step.witness >= g.vertex_count())
            throw input_error("fold step references an unknown vertex");
        if (!alive[step.folded] || !alive[step.witness] || step.folded == step.witness)
            throw input_error("fold step replays onto a removed vertex");
        if (!row_subset(adj.row(step.folded), adj.row(step.witness), adj.words))
            throw input_error("fold step is not a legal fold: neighborhood not contained");
        alive[step.folded] = 0;
        drop_vertex(adj, step.folded);
    }
    std::vector<int> survivors;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) survivors.push_back(v);
    return induced_subgraph(g, survivors);
}

namespace {
std::vector<std::string> numbered_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return names;
}
}  // namespace

Graph complete_graph(int n, bool reflexive) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (reflexive) edges.emplace_back(i, i);
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(numbered_names(n), edges);
}

Graph cycle_graph(int n, bool reflexive) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (reflexive) edges.emplace_back(i, i);
        if (n > 1) edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(numbered_names(n), edges);
}

Graph path_graph(int n, bool reflexive) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (reflexive) edges.emplace_back(i, i);
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return Graph(numbered_names(n), edges);
}

Graph looped_point() { return Graph({"0"}, {{0, 0}}); }

}  // namespace homcx
