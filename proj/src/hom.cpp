#include "homcx/hom.hpp"

#include <algorithm>
#include <functional>

namespace homcx {

bool MultiHom::leq(const MultiHom& other) const {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (!std::includes(other.sets[i].begin(), other.sets[i].end(), sets[i].begin(),
                           sets[i].end()))
            return false;
    return true;
}

bool MultiHom::is_atom() const {
    for (const auto& s : sets)
        if (s.size() != 1) return false;
    return true;
}

std::vector<VertexMap> enumerate_homs(const Graph& t, const Graph& g, std::uint64_t max_cells) {
    const int nt = t.vertex_count();
    if (nt == 0) throw input_error("test graph has no vertices");

    std::vector<VertexMap> out;
    VertexMap f(nt, -1);

    std::function<void(int)> assign = [&](int x) {
        if (x == nt) {
            if (out.size() + 1 > max_cells)
                throw cap_exceeded("enumerate_homs", "graph map count exceeds the cell cap");
            out.push_back(f);
            return;
        }
        for (int c = 0; c < g.vertex_count(); ++c) {
            bool ok = true;
            for (int y : t.neighbors(x)) {
                if (y > x) continue;
                int image = (y == x) ? c : f[y];
                if (!g.adjacent(c, image)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            f[x] = c;
            assign(x + 1);
            f[x] = -1;
        }
    };
    assign(0);
    return out;
}

namespace {

// BFS order of T's vertices, covering every component, lowest roots first.
std::vector<int> bfs_order(const Graph& t) {
    const int n = t.vertex_count();
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    order.reserve(n);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        order.push_back(root);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int u : t.neighbors(order[head]))
                if (!seen[u]) {
                    seen[u] = 1;
                    order.push_back(u);
                }
        }
    }
    return order;
}

// All nonempty cliques (with loops required) inside `allowed`, ascending.
void emit_looped_cliques(const Graph& g, const std::vector<int>& allowed,
                         const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> looped;
    for (int v : allowed)
        if (g.has_loop(v)) looped.push_back(v);

    std::vector<int> clique;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        for (std::size_t i = from; i < looped.size(); ++i) {
            bool ok = true;
            for (int c : clique)
                if (!g.adjacent(c, looped[i])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            clique.push_back(looped[i]);
            emit(clique);
            extend(i + 1);
            clique.pop_back();
        }
    };
    extend(0);
}

}  // namespace

HomPoset hom_poset(const Graph& t, const Graph& g, std::uint64_t max_cells) {
    const int nt = t.vertex_count();
    if (nt == 0) throw input_error("test graph has no vertices");
    const auto order = bfs_order(t);
    std::vector<int> position(nt);
    for (int p = 0; p < nt; ++p) position[order[p]] = p;

    HomPoset hp;
    MultiHom current;
    current.sets.assign(nt, {});

    std::function<void(int)> assign = [&](int p) {
        if (p == nt) {
            if (hp.elements.size() + 1 > max_cells)
                throw cap_exceeded("hom_poset", "multihomomorphism count exceeds the cell cap");
            hp.elements.push_back(current);
            return;
        }
        const int x = order[p];

        // Candidates must be adjacent to everything already assigned to a
        // neighbor of x.
        std::vector<int> allowed;
        for (int c = 0; c < g.vertex_count(); ++c) {
            bool ok = true;
            for (int y : t.neighbors(x)) {
                if (y == x || position[y] >= p) continue;
                for (int b : current.sets[y])
                    if (!g.adjacent(c, b)) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) allowed.push_back(c);
        }

        auto recurse = [&](const std::vector<int>& chosen) {
            current.sets[x] = chosen;
            assign(p + 1);
            current.sets[x].clear();
        };

        if (t.adjacent(x, x)) {
            emit_looped_cliques(g, allowed, recurse);
        } else {
            if (allowed.size() > 25)
                throw cap_exceeded("hom_poset",
                                   "candidate set too large: subset enumeration exceeds the cell cap");
            const std::uint32_t full = 1u << allowed.size();
            std::vector<int> chosen;
            for (std::uint32_t mask = 1; mask < full; ++mask) {
                chosen.clear();
                for (std::size_t i = 0; i < allowed.size(); ++i)
                    if (mask & (1u << i)) chosen.push_back(allowed[i]);
                recurse(chosen);
            }
        }
    };
    assign(0);
    return hp;
}

std::string multihom_name(const Graph& g, const MultiHom& m) {
    std::string name = "(";
    for (std::size_t x = 0; x < m.sets.size(); ++x) {
        if (x) name += ",";
        name += "{";
        for (std::size_t i = 0; i < m.sets[x].size(); ++i) {
            if (i) name += "|";
            name += g.vertex_name(m.sets[x][i]);
        }
        name += "}";
    }
    name += ")";
    return name;
}

Poset hom_poset_order(const HomPoset& hp, const Graph& g) {
    const int m = static_cast<int>(hp.elements.size());
    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& e : hp.elements) names.push_back(multihom_name(g, e));

    std::vector<std::pair<int, int>> less;
    if (g.vertex_count() <= 64 && m > 0) {
        // Bitmask fast path.
        const std::size_t nt = hp.elements[0].sets.size();
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(m) * nt, 0);
        for (int i = 0; i < m; ++i)
            for (std::size_t x = 0; x < nt; ++x)
                for (int v : hp.elements[i].sets[x])
                    masks[static_cast<std::size_t>(i) * nt + x] |= 1ull << v;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                bool leq = true, equal = true;
                for (std::size_t x = 0; x < nt; ++x) {
                    std::uint64_t a = masks[static_cast<std::size_t>(i) * nt + x];
                    std::uint64_t b = masks[static_cast<std::size_t>(j) * nt + x];
                    if (a & ~b) {
                        leq = false;
                        break;
                    }
                    if (a != b) equal = false;
                }
                if (leq && !equal) less.emplace_back(i, j);
            }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && hp.elements[i].leq(hp.elements[j]) &&
                    !(hp.elements[i] == hp.elements[j]))
                    less.emplace_back(i, j);
    }
    return Poset::from_relation(std::move(names), less);
}

SimplicialComplex hom_complex_order(const Graph& t, const Graph& g, std::uint64_t max_cells) {
    HomPoset hp = hom_poset(t, g, max_cells);
    return order_complex(hom_poset_order(hp, g), max_cells);
}

bool maps_adjacent(const Graph& t, const Graph& g, const VertexMap& f1, const VertexMap& f2) {
    for (int v = 0; v < t.vertex_count(); ++v)
        for (int v2 : t.neighbors(v))
            if (!g.adjacent(f1[v], f2[v2])) return false;
    return true;
}

Graph hom_graph(const Graph& t, const Graph& g, std::uint64_t max_cells) {
    auto maps = enumerate_homs(t, g, max_cells);
    const int m = static_cast<int>(maps.size());

    std::vector<std::string> names;
    names.reserve(m);
    for (const auto& f : maps) {
        std::string name = "(";
        for (int i = 0; i < t.vertex_count(); ++i) {
            if (i) name += ",";
            name += g.vertex_name(f[i]);
        }
        name += ")";
        names.push_back(std::move(name));
    }

    std::vector<std::pair<int, int>> edges;
    std::uint64_t cells = static_cast<std::uint64_t>(m);
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(i, i);  // graph maps are looped in G^T
        ++cells;
        for (int j = i + 1; j < m; ++j)
            if (maps_adjacent(t, g, maps[i], maps[j])) {
                if (++cells > max_cells)
                    throw cap_exceeded("hom_graph", "edge count exceeds the cell cap");
                edges.emplace_back(i, j);
            }
    }
    return Graph(std::move(names), edges);
}

SimplicialComplex hom_complex_exponential(const Graph& t, const Graph& g,
                                          std::uint64_t max_cells) {
    return clique_complex(hom_graph(t, g, max_cells), max_cells);
}

Graph support_subgraph(const Graph& t, const Graph& g, const std::vector<VertexMap>& alpha) {
    if (alpha.empty()) throw input_error("support subgraph of an empty clique");
    for (const auto& f : alpha)
        if (!is_graph_map(t, g, f))
            throw input_error("alpha is not a clique of looped vertices: member is not a graph map");
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (!maps_adjacent(t, g, alpha[i], alpha[j]))
                throw input_error("alpha is not a clique of looped vertices: members not adjacent");

    std::vector<int> support;
    for (const auto& f : alpha) support.insert(support.end(), f.begin(), f.end());
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return induced_subgraph(g, support);
}

}  // namespace homcx
