#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "homcx/homology.hpp"
#include "homcx/sampling.hpp"
#include "oracles.hpp"

using namespace homcx;

namespace {

int dense_rank(const Z2Matrix& m) {
    std::vector<std::vector<int>> rows(m.n_rows, std::vector<int>(m.n_cols(), 0));
    for (int j = 0; j < m.n_cols(); ++j)
        for (int i : m.columns[j]) rows[i][j] = 1;
    return oracle::dense_z2_rank(rows, m.n_cols());
}

bool boundary_squares_to_zero(const std::vector<Z2Matrix>& matrices) {
    for (std::size_t d = 1; d + 1 < matrices.size(); ++d) {
        for (const auto& col : matrices[d + 1].columns) {
            std::vector<int> acc;
            for (int c : col) {
                std::vector<int> merged;
                std::set_symmetric_difference(acc.begin(), acc.end(),
                                              matrices[d].columns[c].begin(),
                                              matrices[d].columns[c].end(),
                                              std::back_inserter(merged));
                acc = std::move(merged);
            }
            if (!acc.empty()) return false;
        }
    }
    return true;
}

int component_count(const SimplicialComplex& x) {
    Graph skel = looped_one_skeleton(x);
    std::vector<char> seen(skel.vertex_count(), 0);
    int components = 0;
    for (int v = 0; v < skel.vertex_count(); ++v) {
        if (seen[v]) continue;
        ++components;
        auto dist = bfs_distances(skel, v);
        for (int u = 0; u < skel.vertex_count(); ++u)
            if (dist[u] >= 0) seen[u] = 1;
    }
    return components;
}

}  // namespace

TEST_CASE("boundary matrices") {
    auto edge = SimplicialComplex::from_facets({"a", "b"}, {{"a", "b"}});
    auto matrices = boundary_matrices(edge);
    REQUIRE(matrices.size() == 2);
    CHECK(matrices[1].n_rows == 2);
    CHECK(matrices[1].columns == std::vector<std::vector<int>>{{0, 1}});

    auto ring = boundary_matrices(simplex_boundary(2));
    CHECK(ring[1].n_rows == 3);
    CHECK(ring[1].n_cols() == 3);
    CHECK(z2_rank(ring[1]) == 2);
    CHECK(dense_rank(ring[1]) == 2);

    auto pt = boundary_matrices(SimplicialComplex::from_facets({"a"}, {{"a"}}));
    CHECK(pt.size() == 1);
}

TEST_CASE("rank reduction agrees with dense elimination") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Z2Matrix m;
        m.n_rows = 1 + static_cast<int>(rng.below(12));
        const int cols = 1 + static_cast<int>(rng.below(12));
        for (int j = 0; j < cols; ++j) {
            std::vector<int> col;
            for (int i = 0; i < m.n_rows; ++i)
                if (rng.chance_half()) col.push_back(i);
            m.columns.push_back(col);
        }
        CHECK(z2_rank(m) == dense_rank(m));
    }
}

TEST_CASE("rank is independent of column order") {
    SplitMix64 rng(9);
    auto matrices = boundary_matrices(barycentric_subdivision(simplex_boundary(3)));
    for (std::size_t d = 1; d < matrices.size(); ++d) {
        int expected = z2_rank(matrices[d]);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            Z2Matrix m = matrices[d];
            for (std::size_t i = m.columns.size(); i > 1; --i)
                std::swap(m.columns[i - 1], m.columns[rng.below(i)]);
            CHECK(z2_rank(m) == expected);
        }
    }
}

TEST_CASE("betti numbers of standard complexes") {
    CHECK(betti_z2(simplex_boundary(2)) == BettiVector{1, 1});
    CHECK(betti_z2(full_simplex(2)) == BettiVector{1, 0, 0});
    CHECK(betti_z2(simplex_boundary(3)) == BettiVector{1, 0, 1});
    CHECK(betti_z2(SimplicialComplex::from_facets({"a", "b"}, {{"a"}, {"b"}})) == BettiVector{2});
    CHECK(betti_z2(SimplicialComplex()).empty());
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(simplex_boundary(3)) == 2);
    CHECK(euler_characteristic(simplex_boundary(2)) == 0);
    CHECK(euler_characteristic(SimplicialComplex::from_facets({"a"}, {{"a"}})) == 1);
    CHECK(euler_characteristic(SimplicialComplex()) == 0);
}

TEST_CASE("homology invariants across a pool") {
    std::vector<SimplicialComplex> pool = {
        full_simplex(2), full_simplex(3), simplex_boundary(2), simplex_boundary(3),
        clique_complex(cycle_graph(6, true)),
        SimplicialComplex::from_facets({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"d"}}),
        barycentric_subdivision(simplex_boundary(3))};

    for (const auto& x : pool) {
        auto matrices = boundary_matrices(x);
        CHECK(boundary_squares_to_zero(matrices));

        auto betti = betti_z2(x);
        std::int64_t chi_betti = 0, sign = 1;
        for (auto b : betti) {
            chi_betti += sign * b;
            sign = -sign;
        }
        CHECK(chi_betti == euler_characteristic(x));

        CHECK(betti[0] == component_count(x));

        CHECK(betti_z2(barycentric_subdivision(x)) == betti);
    }
}

TEST_CASE("betti respects the cell cap") {
    CHECK_THROWS_AS(betti_z2(full_simplex(7), 50), cap_exceeded);
}
