#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "homcx/errors.hpp"
#include "homcx/graph.hpp"

namespace homcx {

using Face = std::vector<int>;                      // sorted vertex indices
using FaceFamily = std::vector<std::vector<Face>>;  // faces grouped by dimension

/// Finite abstract simplicial complex given by its facets.  The full face
/// family is materialized lazily and memoized; copies share the memo.
/// The empty complex (no vertices, no facets) is a valid value.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// Public constructor path: enforces maximality (non-maximal input
    /// faces are absorbed) and validates the invariants.
    static SimplicialComplex from_facets(std::vector<std::string> vertex_names,
                                         std::vector<std::vector<std::string>> facets);
    static SimplicialComplex from_facet_indices(std::vector<std::string> vertex_names,
                                                std::vector<Face> facets);

    /// Trusted path for constructions that already computed every face:
    /// facets are derived, the face family cache is pre-seeded.
    static SimplicialComplex from_face_family(std::vector<std::string> vertex_names,
                                              FaceFamily faces);

    /// Trusted path for constructions whose facet list is known to be an
    /// antichain of sorted faces (no absorb pass).
    static SimplicialComplex from_maximal_faces(std::vector<std::string> vertex_names,
                                                std::vector<Face> facets);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(int v) const { return names_.at(v); }
    int index_of(const std::string& name) const;

    /// Facets sorted lexicographically, each face sorted.
    const std::vector<Face>& facets() const { return facets_; }

    int dim() const;  // -1 for the empty complex

    /// All faces by dimension, dimension 0 first, each dimension sorted
    /// lexicographically.  First call materializes under `max_cells`;
    /// later calls return the memo.
    const FaceFamily& faces(std::uint64_t max_cells = default_cell_cap) const;

    std::uint64_t face_count(std::uint64_t max_cells = default_cell_cap) const;

    bool operator==(const SimplicialComplex& other) const {
        return names_ == other.names_ && facets_ == other.facets_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Face> facets_;

    struct FaceCache {
        std::once_flag once;
        FaceFamily by_dim;
    };
    mutable std::shared_ptr<FaceCache> cache_;
};

std::vector<std::size_t> f_vector(const SimplicialComplex& x);

/// Subcomplex of all faces of dimension <= d.
SimplicialComplex skeleton(const SimplicialComplex& x, int d);

/// Barycentric subdivision together with the face of the input complex
/// that each new vertex is the barycenter of.  Vertices of singleton faces
/// keep their original token; a barycenter of a larger face is named
/// "{m1|m2|...}" with member names sorted.
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Face> vertex_face;  // per subdivision vertex, a face of the input
};

Subdivision barycentric_subdivision_traced(const SimplicialComplex& x,
                                           std::uint64_t max_cells = default_cell_cap);
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x,
                                          std::uint64_t max_cells = default_cell_cap);

/// Clique complex on the looped vertices of g: faces are the vertex sets
/// that are cliques under adjacency restricted to looped vertices.
SimplicialComplex clique_complex(const Graph& g, std::uint64_t max_cells = default_cell_cap);

/// Looped 1-skeleton of a complex: its vertices and edges, with a loop at
/// every vertex.
Graph looped_one_skeleton(const SimplicialComplex& x);

/// Finite poset stored as its cover relation (transitive reduction).
class Poset {
public:
    Poset() = default;

    /// Accepts any strict-order pairs (a < b); validates irreflexivity and
    /// acyclicity, then reduces to covers.
    static Poset from_relation(std::vector<std::string> names,
                               const std::vector<std::pair<int, int>>& strictly_less);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    /// covers()[i] lists the elements covering i, ascending.
    const std::vector<std::vector<int>>& covers() const { return covers_; }
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// strictly_greater()[i] lists every j with i < j, ascending (computed
    /// from the covers on each call).
    std::vector<std::vector<int>> strictly_greater() const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> covers_;
};

/// Order complex: vertices are poset elements, faces the chains.
SimplicialComplex order_complex(const Poset& p, std::uint64_t max_cells = default_cell_cap);

/// Nerve of a named cover: vertices are the member names, a set of names
/// forms a face iff the named sets have nonempty intersection.
SimplicialComplex nerve(const std::vector<std::pair<std::string, std::vector<std::string>>>& cover,
                        std::uint64_t max_cells = default_cell_cap);

/// True iff the bijection carries the face family of x exactly onto the
/// face family of y.
bool complexes_equal_under(const SimplicialComplex& x, const SimplicialComplex& y,
                           const std::map<std::string, std::string>& bijection);

// Standard small complexes.
SimplicialComplex full_simplex(int dim);            // Delta^dim on vertices a,b,c,...
SimplicialComplex simplex_boundary(int dim);        // boundary of Delta^dim

}  // namespace homcx
