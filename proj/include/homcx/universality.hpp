#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcx/complex.hpp"
#include "homcx/graph.hpp"
#include "homcx/homology.hpp"

namespace homcx {

struct ConstructionParams {
    int k = 1;
    int d = 0;            // diameter of the test graph
    bool point_case = false;  // T is the single looped vertex
};

/// Minimal admissible k for a test graph: k = 1 when T is the looped
/// point, otherwise the least k >= 2 with 2^(k-1) - 1 >= diam(T).
ConstructionParams choose_k(const Graph& t);

/// G_{k,X} together with the subdivision bookkeeping needed for vertex
/// types and supports.
struct GkxData {
    Graph graph;                   // looped 1-skeleton of bd^k(X)
    SimplicialComplex xk;          // bd^k(X)
    SimplicialComplex xk_minus_1;  // bd^(k-1)(X); equals X when k == 1
    std::vector<Face> barycenter_face;  // per xk vertex: the face of xk_minus_1 it subdivides
    std::vector<Face> support;          // per xk vertex: the face of X it lies in
};

GkxData build_g_kx_data(const SimplicialComplex& x, int k,
                        std::uint64_t max_cells = default_cell_cap);
Graph build_g_kx(const SimplicialComplex& x, int k, std::uint64_t max_cells = default_cell_cap);

/// Induced subgraph of G_{k,X} on the vertices within distance 2^k - 1 of
/// an original vertex of X.
Graph ball_subgraph(const Graph& gkx, const SimplicialComplex& x, const std::string& center,
                    int k);

/// Induced subgraph on the vertices within 2^k - 1 of every member of a
/// nonempty set of original vertices; may be empty.
Graph intersection_subgraph(const Graph& gkx, const SimplicialComplex& x,
                            const std::vector<std::string>& members, int k);

struct VertexType {
    int i = 0;  // dimension of the face of X whose interior holds the vertex
    int j = 0;  // dimension of the face of X^(k-1) it is the barycenter of
};

VertexType vertex_type(const SimplicialComplex& x, int k, const std::string& name,
                       std::uint64_t max_cells = default_cell_cap);

struct CoverNerve {
    SimplicialComplex nerve;
    bool matches_x = false;
};

/// Nerve of the cover of G_{k,X} by ball vertex sets, compared against X
/// under the identity labeling.
CoverNerve cover_nerve(const SimplicialComplex& x, int k,
                       std::uint64_t max_cells = default_cell_cap);

struct UniversalityReport {
    int k = 0;
    std::size_t g_vertices = 0;
    std::size_t g_edges = 0;
    std::vector<std::size_t> complex_f_vector;
    BettiVector betti_x;
    BettiVector betti_hom;
    bool match = false;
    std::vector<std::pair<std::string, bool>> balls_dismantlable;
    std::vector<std::pair<std::string, bool>> intersections_dismantlable;
    bool nerve_matches = false;

    bool all_checks() const;
};

enum class HomRoute { exponential, poset };

/// End-to-end verification: builds G_{k,X}, compares the Z/2 Betti vectors
/// of X and of the clique complex of (G_{k,X})^T, and runs the ball,
/// intersection and nerve checks.  k may be forced larger than the minimal
/// admissible value, never smaller.  The poset route computes the Hom
/// complex as the order complex instead; it is only feasible on small
/// instances.
UniversalityReport verify_universality(const Graph& t, const SimplicialComplex& x,
                                       std::optional<int> k_override = std::nullopt,
                                       std::uint64_t max_cells = default_cell_cap,
                                       HomRoute route = HomRoute::exponential);

struct Conjecture41Report {
    int k = 1;
    std::size_t g_vertices = 0;
    std::size_t g_edges = 0;
    BettiVector betti_x;
    BettiVector betti_hom;
    bool match = false;
};

/// The k = 1 experiment for T = K_2; reports the Betti comparison without
/// asserting it.
Conjecture41Report conjecture41(const SimplicialComplex& x,
                                std::uint64_t max_cells = default_cell_cap);

struct LemmaSampleReport {
    int samples = 0;
    int diameter_failures = 0;  // diam(G_alpha) <= max(2, d)
    int cover_failures = 0;     // support of alpha inside some ball
};

/// Seeded spot-check of the diameter and cover lemmas on random cliques of
/// the clique complex of (G_{k,X})^T.
LemmaSampleReport sample_lemma_checks(const Graph& t, const SimplicialComplex& x, int k,
                                      int n_samples, std::uint64_t seed,
                                      std::uint64_t max_cells = default_cell_cap);

}  // namespace homcx
