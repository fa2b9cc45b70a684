#include "homcx/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace homcx {

namespace {

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ f.size();
        for (int v : f) h = (h * 0x100000001b3ull) ^ static_cast<std::size_t>(v + 0x517cc1b7);
        return h;
    }
};

// Symmetric difference of two sorted index lists.
std::vector<int> xor_columns(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

}  // namespace

std::vector<Z2Matrix> boundary_matrices(const SimplicialComplex& x, std::uint64_t max_cells) {
    const FaceFamily& faces = x.faces(max_cells);
    std::vector<Z2Matrix> out;
    if (faces.empty()) return out;

    out.push_back(Z2Matrix{0, std::vector<std::vector<int>>(faces[0].size())});

    std::unordered_map<Face, int, FaceHash> below;
    for (int i = 0; i < static_cast<int>(faces[0].size()); ++i) below.emplace(faces[0][i], i);

    for (std::size_t d = 1; d < faces.size(); ++d) {
        Z2Matrix m;
        m.n_rows = static_cast<int>(faces[d - 1].size());
        m.columns.reserve(faces[d].size());
        for (const Face& f : faces[d]) {
            std::vector<int> col;
            col.reserve(f.size());
            Face sub(f.size() - 1);
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                for (std::size_t i = 0, j = 0; i < f.size(); ++i)
                    if (i != skip) sub[j++] = f[i];
                col.push_back(below.at(sub));
            }
            std::sort(col.begin(), col.end());
            m.columns.push_back(std::move(col));
        }
        out.push_back(std::move(m));

        below.clear();
        for (int i = 0; i < static_cast<int>(faces[d].size()); ++i) below.emplace(faces[d][i], i);
    }
    return out;
}

int z2_rank(const Z2Matrix& m) {
    std::vector<int> low_to_col(m.n_rows, -1);
    std::vector<std::vector<int>> reduced;
    reduced.reserve(m.columns.size());
    int rank = 0;
    for (const auto& original : m.columns) {
        std::vector<int> col = original;
        while (!col.empty()) {
            int low = col.back();
            int pivot = low_to_col[low];
            if (pivot < 0) {
                low_to_col[low] = static_cast<int>(reduced.size());
                ++rank;
                break;
            }
            col = xor_columns(col, reduced[pivot]);
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

BettiVector betti_z2(const SimplicialComplex& x, std::uint64_t max_cells) {
    auto matrices = boundary_matrices(x, max_cells);
    if (matrices.empty()) return {};
    BettiVector betti(matrices.size());
    std::vector<int> ranks(matrices.size() + 1, 0);
    for (std::size_t d = 1; d < matrices.size(); ++d) ranks[d] = z2_rank(matrices[d]);
    for (std::size_t d = 0; d < matrices.size(); ++d) {
        std::int64_t n_cells = static_cast<std::int64_t>(matrices[d].columns.size());
        betti[d] = n_cells - ranks[d] - ranks[d + 1];
    }
    return betti;
}

bool betti_equal(const BettiVector& a, const BettiVector& b) {
    std::size_t la = a.size(), lb = b.size();
    while (la > 0 && a[la - 1] == 0) --la;
    while (lb > 0 && b[lb - 1] == 0) --lb;
    if (la != lb) return false;
    for (std::size_t i = 0; i < la; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
    std::int64_t chi = 0;
    std::int64_t sign = 1;
    for (std::size_t count : f_vector(x)) {
        chi += sign * static_cast<std::int64_t>(count);
        sign = -sign;
    }
    return chi;
}

}  // namespace homcx
