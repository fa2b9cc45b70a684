// Brute-force reference implementations used as independent oracles by the
// test suites.  Everything here works straight from the definitions and
// stays clear of the library's enumeration and reduction strategies.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "homcx/complex.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"

namespace oracle {

using homcx::Face;
using homcx::Graph;
using homcx::MultiHom;
using homcx::VertexMap;

// Every tuple in V(G)^|V(T)|, filtered by the homomorphism condition.
inline std::vector<VertexMap> all_graph_maps(const Graph& t, const Graph& g) {
    std::vector<VertexMap> out;
    const int nt = t.vertex_count(), ng = g.vertex_count();
    std::uint64_t total = 1;
    for (int i = 0; i < nt; ++i) total *= static_cast<std::uint64_t>(ng);
    for (std::uint64_t code = 0; code < total; ++code) {
        VertexMap f(nt);
        std::uint64_t rest = code;
        for (int i = nt - 1; i >= 0; --i) {
            f[i] = static_cast<int>(rest % ng);
            rest /= ng;
        }
        bool ok = true;
        for (int u = 0; u < nt && ok; ++u)
            for (int v : t.neighbors(u))
                if (!g.adjacent(f[u], f[v])) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(f);
    }
    return out;
}

// Categorical product straight from the adjacency condition.
inline Graph product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::string> names;
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b)
            names.push_back("(" + g.vertex_name(a) + "," + h.vertex_name(b) + ")");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < ng * nh; ++u)
        for (int v = u; v < ng * nh; ++v) {
            int a = u / nh, b = u % nh, a2 = v / nh, b2 = v % nh;
            if (g.adjacent(a, a2) && h.adjacent(b, b2)) edges.emplace_back(u, v);
        }
    return Graph(std::move(names), edges);
}

// Exponential graph from the definition: all maps, all pairs tested.
inline Graph exponential(const Graph& h, const Graph& g) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    std::uint64_t total = 1;
    for (int i = 0; i < ng; ++i) total *= static_cast<std::uint64_t>(nh);
    std::vector<VertexMap> maps;
    for (std::uint64_t code = 0; code < total; ++code) {
        VertexMap f(ng);
        std::uint64_t rest = code;
        for (int i = ng - 1; i >= 0; --i) {
            f[i] = static_cast<int>(rest % nh);
            rest /= nh;
        }
        maps.push_back(f);
    }
    std::vector<std::string> names;
    for (const auto& f : maps) {
        std::string name = "(";
        for (int i = 0; i < ng; ++i) {
            if (i) name += ",";
            name += h.vertex_name(f[i]);
        }
        names.push_back(name + ")");
    }
    auto adjacent = [&](const VertexMap& f1, const VertexMap& f2) {
        for (int v = 0; v < ng; ++v)
            for (int v2 : g.neighbors(v))
                if (!h.adjacent(f1[v], f2[v2])) return false;
        return true;
    };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(maps.size()); ++i)
        for (int j = i; j < static_cast<int>(maps.size()); ++j)
            if (adjacent(maps[i], maps[j])) edges.emplace_back(i, j);
    return Graph(std::move(names), edges);
}

// Every multihomomorphism by iterating all assignments of nonempty vertex
// subsets; feasible only for tiny inputs.
inline std::vector<MultiHom> all_multihoms(const Graph& t, const Graph& g) {
    const int nt = t.vertex_count(), ng = g.vertex_count();
    const std::uint32_t options = (1u << ng) - 1;
    std::vector<MultiHom> out;
    std::vector<std::uint32_t> pick(nt, 1);
    while (true) {
        MultiHom m;
        m.sets.resize(nt);
        for (int x = 0; x < nt; ++x)
            for (int v = 0; v < ng; ++v)
                if (pick[x] & (1u << v)) m.sets[x].push_back(v);
        bool ok = true;
        for (int x = 0; x < nt && ok; ++x)
            for (int y : t.neighbors(x)) {
                for (int a : m.sets[x]) {
                    for (int b : m.sets[y])
                        if (!g.adjacent(a, b)) {
                            ok = false;
                            break;
                        }
                    if (!ok) break;
                }
                if (!ok) break;
            }
        if (ok) out.push_back(std::move(m));
        int pos = nt - 1;
        while (pos >= 0 && pick[pos] == options) pick[pos--] = 1;
        if (pos < 0) break;
        ++pick[pos];
    }
    return out;
}

// All totally ordered subsets of a poset given by an explicit less test.
inline std::vector<Face> all_chains(int n, const std::function<bool(int, int)>& less) {
    std::vector<Face> chains;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Face subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        bool total = true;
        for (std::size_t i = 0; i < subset.size() && total; ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                if (!less(subset[i], subset[j]) && !less(subset[j], subset[i])) {
                    total = false;
                    break;
                }
        if (total) chains.push_back(subset);
    }
    return chains;
}

// Exhaustive fold-order search: true iff some order of folds reaches a
// single looped vertex.  Memoized on the surviving vertex set.
inline bool can_dismantle_some_order(const Graph& g) {
    const int n = g.vertex_count();
    std::map<std::uint32_t, bool> memo;
    std::function<bool(std::uint32_t)> solve = [&](std::uint32_t alive) -> bool {
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (alive & (1u << v)) verts.push_back(v);
        if (verts.size() == 1) return memo[alive] = g.has_loop(verts[0]);
        bool ok = false;
        for (int v : verts) {
            for (int w : verts) {
                if (v == w) continue;
                bool dominated = true;
                for (int u : verts)
                    if (g.adjacent(v, u) && !g.adjacent(w, u)) {
                        dominated = false;
                        break;
                    }
                if (dominated && solve(alive & ~(1u << v))) {
                    ok = true;
                    break;
                }
            }
            if (ok) break;
        }
        return memo[alive] = ok;
    };
    if (n == 0 || n > 31) return false;
    return solve((1u << n) - 1);
}

// Dense Gaussian elimination rank over Z/2.
inline int dense_z2_rank(std::vector<std::vector<int>> rows, int n_cols) {
    int rank = 0;
    for (int col = 0; col < n_cols; ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && rows[r][col])
                for (int c = 0; c < n_cols; ++c) rows[r][c] ^= rows[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace oracle
