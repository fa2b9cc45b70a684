#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcx/complex.hpp"
#include "homcx/graph.hpp"

namespace homcx {

/// Multihomomorphism T -> G: a nonempty vertex set of G per vertex of T
/// such that every cross pair along an edge of T is an edge of G.
struct MultiHom {
    std::vector<std::vector<int>> sets;  // per T-vertex, sorted G-indices

    bool operator==(const MultiHom& other) const { return sets == other.sets; }
    /// Pointwise containment.
    bool leq(const MultiHom& other) const;
    bool is_atom() const;
};

struct HomPoset {
    std::vector<MultiHom> elements;
};

/// All graph maps T -> G in lexicographic order of their image tuples.
std::vector<VertexMap> enumerate_homs(const Graph& t, const Graph& g,
                                      std::uint64_t max_cells = default_cell_cap);

/// Every multihomomorphism T -> G, enumerated by backtracking over T in
/// BFS order with common-neighborhood pruning.
HomPoset hom_poset(const Graph& t, const Graph& g, std::uint64_t max_cells = default_cell_cap);

std::string multihom_name(const Graph& g, const MultiHom& m);

/// The containment order on a Hom poset's element list.
Poset hom_poset_order(const HomPoset& hp, const Graph& g);

/// Order complex of the Hom poset.
SimplicialComplex hom_complex_order(const Graph& t, const Graph& g,
                                    std::uint64_t max_cells = default_cell_cap);

/// The looped part of the exponential graph G^T: one vertex per graph map
/// T -> G (every vertex looped), adjacency inherited from G^T.
Graph hom_graph(const Graph& t, const Graph& g, std::uint64_t max_cells = default_cell_cap);

/// Clique complex on the looped vertices of G^T, materializing only the
/// graph maps and their mutual adjacency.
SimplicialComplex hom_complex_exponential(const Graph& t, const Graph& g,
                                          std::uint64_t max_cells = default_cell_cap);

/// Adjacency of two maps as vertices of G^T.
bool maps_adjacent(const Graph& t, const Graph& g, const VertexMap& f1, const VertexMap& f2);

/// Subgraph of G induced by the union of images of a clique of maps.
/// Throws input_error if alpha is not a clique of looped vertices of G^T.
Graph support_subgraph(const Graph& t, const Graph& g, const std::vector<VertexMap>& alpha);

}  // namespace homcx
