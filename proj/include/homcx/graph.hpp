#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homcx/errors.hpp"

namespace homcx {

/// Finite undirected graph with loops allowed.  Vertices are ordered opaque
/// tokens; adjacency is a symmetric set of pairs, a loop being the pair
/// (v,v).  Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Build from vertex names and edges given as index pairs.  The
    /// symmetric closure is applied; duplicate entries are merged.
    Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);

    static Graph from_named_edges(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_.at(v); }

    /// Index of a named vertex; throws input_error for unknown names.
    int index_of(const std::string& name) const;
    std::optional<int> find_vertex(const std::string& name) const;

    /// Sorted neighbor list of v; contains v iff v has a loop.
    std::span<const int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    bool has_loop(int v) const { return adjacent(v, v); }

    /// Number of adjacency entries counted once per unordered pair, loops
    /// included.
    std::size_t edge_entry_count() const;
    std::uint64_t cell_count() const { return names_.size() + edge_entry_count(); }

    bool operator==(const Graph& other) const {
        return names_ == other.names_ && adj_ == other.adj_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> adj_;  // sorted, symmetric, self-entry = loop
};

using VertexMap = std::vector<int>;  // image vertex index per source vertex

struct FoldStep {
    int folded;   // vertex removed (index in the graph the sequence started from)
    int witness;  // vertex with N(folded) <= N(witness) at that step
};

struct FoldSequence {
    std::vector<FoldStep> steps;
};

struct DismantleResult {
    bool dismantlable = false;
    FoldSequence folds;
    Graph residual;
};

/// {u : (v,u) in adjacency}; contains v iff v is looped.
std::vector<int> neighborhood(const Graph& g, int v);

/// Exact shortest-path distances from v; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int v);

/// Max pairwise distance.  Throws input_error on an empty or disconnected
/// graph (loops are ignored for connectivity).
int diameter(const Graph& g);

bool is_connected(const Graph& g);

/// True iff every edge (u,v) of src maps to an edge (f(u),f(v)) of dst.
bool is_graph_map(const Graph& src, const Graph& dst, const VertexMap& f);

/// Categorical product: (g,h) ~ (g',h') iff g ~ g' and h ~ h'.
Graph product(const Graph& g, const Graph& h);

/// Exponential graph H^G on all vertex maps V(G) -> V(H); f ~ f' iff every
/// edge (v,v') of G has (f(v),f'(v')) an edge of H.  Looped vertices are
/// exactly the graph maps G -> H.
Graph exponential_graph(const Graph& h, const Graph& g,
                        std::uint64_t max_cells = default_cell_cap);

std::vector<int> looped_vertices(const Graph& g);

/// Induced subgraph on s (indices; deduplicated, original order kept).
Graph induced_subgraph(const Graph& g, std::span<const int> s);

/// Lexicographically least pair (v,w) with v != w and N(v) subset of N(w),
/// or nullopt when no vertex is dominated.
std::optional<std::pair<int, int>> find_dominated(const Graph& g);

/// Greedy fold-down: repeatedly remove the least dominated vertex.  The
/// result records whether the residual is a single looped vertex, plus a
/// replayable witness sequence (indices refer to the input graph).
DismantleResult dismantle(const Graph& g);

/// Replay a fold sequence, validating each step; throws input_error if a
/// step is not a legal fold at its turn.  Returns the final residual.
Graph apply_folds(const Graph& g, const FoldSequence& folds);

// Small standard graphs used throughout.
Graph complete_graph(int n, bool reflexive = false);
Graph cycle_graph(int n, bool reflexive = false);
Graph path_graph(int n, bool reflexive = false);
Graph looped_point();

}  // namespace homcx
