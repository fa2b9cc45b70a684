#pragma once

#include <cstdint>
#include <vector>

#include "homcx/complex.hpp"

namespace homcx {

/// Sparse boolean matrix over Z/2, column-major; per-column row indices are
/// sorted and duplicate-free.
struct Z2Matrix {
    int n_rows = 0;
    std::vector<std::vector<int>> columns;

    int n_cols() const { return static_cast<int>(columns.size()); }
};

using BettiVector = std::vector<std::int64_t>;

/// Boundary matrices of x; entry d of the result is the boundary map from
/// d-chains to (d-1)-chains (index 0 is the zero map from vertices).
std::vector<Z2Matrix> boundary_matrices(const SimplicialComplex& x,
                                        std::uint64_t max_cells = default_cell_cap);

/// Rank over Z/2 by left-to-right column reduction with a low-to-pivot
/// lookup table.
int z2_rank(const Z2Matrix& m);

/// Unreduced Z/2 Betti numbers b_0..b_dim.  Empty complex gives the empty
/// vector.
BettiVector betti_z2(const SimplicialComplex& x, std::uint64_t max_cells = default_cell_cap);

/// Betti comparison for homotopy-type claims: vectors are reported at full
/// length dim+1, so equal homotopy types may differ by trailing zeros.
bool betti_equal(const BettiVector& a, const BettiVector& b);

/// Alternating sum of the f-vector.
std::int64_t euler_characteristic(const SimplicialComplex& x);

}  // namespace homcx
