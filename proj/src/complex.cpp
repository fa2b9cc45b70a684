#include "homcx/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace homcx {

namespace {

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 0x9e3779b97f4a7c15ull ^ f.size();
        for (int v : f) h = (h * 0x100000001b3ull) ^ static_cast<std::size_t>(v + 0x517cc1b7);
        return h;
    }
};

using FaceIndex = std::unordered_map<Face, int, FaceHash>;

Face sorted_unique(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// Derive the maximal faces of a downward-closed family: a d-face is a facet
// iff it is not the codimension-1 face of any (d+1)-face.
std::vector<Face> facets_of_family(const FaceFamily& faces) {
    std::vector<Face> facets;
    for (int d = 0; d < static_cast<int>(faces.size()); ++d) {
        if (faces[d].empty()) continue;
        std::unordered_set<Face, FaceHash> non_maximal;
        if (d + 1 < static_cast<int>(faces.size())) {
            for (const Face& f : faces[d + 1]) {
                Face sub(f.size() - 1);
                for (std::size_t skip = 0; skip < f.size(); ++skip) {
                    for (std::size_t i = 0, j = 0; i < f.size(); ++i)
                        if (i != skip) sub[j++] = f[i];
                    non_maximal.insert(sub);
                }
            }
        }
        for (const Face& f : faces[d])
            if (!non_maximal.count(f)) facets.push_back(f);
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

}  // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertex_names,
                                                 std::vector<std::vector<std::string>> facets) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(vertex_names.size()); ++i)
        if (!index.emplace(vertex_names[i], i).second)
            throw input_error("duplicate vertex name: " + vertex_names[i]);
    std::vector<Face> idx_facets;
    idx_facets.reserve(facets.size());
    for (const auto& facet : facets) {
        Face f;
        f.reserve(facet.size());
        for (const auto& name : facet) {
            auto it = index.find(name);
            if (it == index.end()) throw input_error("facet references unknown vertex: " + name);
            f.push_back(it->second);
        }
        idx_facets.push_back(std::move(f));
    }
    return from_facet_indices(std::move(vertex_names), std::move(idx_facets));
}

SimplicialComplex SimplicialComplex::from_facet_indices(std::vector<std::string> vertex_names,
                                                        std::vector<Face> facets) {
    const int n = static_cast<int>(vertex_names.size());
    for (Face& f : facets) {
        if (f.empty()) throw input_error("empty facet");
        for (int v : f)
            if (v < 0 || v >= n) throw input_error("facet references unknown vertex index");
        f = sorted_unique(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Absorb non-maximal input faces.
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < facets.size() && !contained; ++j) {
            if (facets[j].size() <= facets[i].size()) continue;
            contained = std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                      facets[i].end());
        }
        if (!contained) maximal.push_back(facets[i]);
    }

    std::vector<char> used(n, 0);
    for (const Face& f : maximal)
        for (int v : f) used[v] = 1;
    for (int v = 0; v < n; ++v)
        if (!used[v])
            throw input_error("vertex '" + vertex_names[v] +
                              "' appears in no facet (every declared vertex must)");

    SimplicialComplex x;
    x.names_ = std::move(vertex_names);
    x.facets_ = std::move(maximal);
    return x;
}

namespace {
void check_unique_names(const std::vector<std::string>& names) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names)
        if (!seen.insert(name).second) throw input_error("vertex name collision: " + name);
}
}  // namespace

SimplicialComplex SimplicialComplex::from_maximal_faces(std::vector<std::string> vertex_names,
                                                        std::vector<Face> facets) {
    check_unique_names(vertex_names);
    std::sort(facets.begin(), facets.end());
    SimplicialComplex x;
    x.names_ = std::move(vertex_names);
    x.facets_ = std::move(facets);
    return x;
}

SimplicialComplex SimplicialComplex::from_face_family(std::vector<std::string> vertex_names,
                                                      FaceFamily faces) {
    check_unique_names(vertex_names);
    while (!faces.empty() && faces.back().empty()) faces.pop_back();
    for (auto& level : faces) std::sort(level.begin(), level.end());

    SimplicialComplex x;
    x.names_ = std::move(vertex_names);
    x.facets_ = facets_of_family(faces);
    std::call_once(x.cache_->once, [&] { x.cache_->by_dim = std::move(faces); });
    return x;
}

int SimplicialComplex::index_of(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (names_[i] == name) return i;
    throw input_error("unknown vertex: " + name);
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

const FaceFamily& SimplicialComplex::faces(std::uint64_t max_cells) const {
    std::call_once(cache_->once, [&] {
        FaceFamily by_dim(static_cast<std::size_t>(std::max(0, dim() + 1)));
        std::unordered_set<Face, FaceHash> seen;
        std::uint64_t count = 0;
        for (const Face& facet : facets_) {
            const std::size_t m = facet.size();
            if (m >= 63)
                throw cap_exceeded("face_family", "facet too large to enumerate subsets");
            for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
                Face f;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1ull << i)) f.push_back(facet[i]);
                if (seen.insert(f).second) {
                    if (++count > max_cells)
                        throw cap_exceeded("face_family", "face count exceeds the cell cap");
                    by_dim[f.size() - 1].push_back(std::move(f));
                }
            }
        }
        for (auto& level : by_dim) std::sort(level.begin(), level.end());
        cache_->by_dim = std::move(by_dim);
    });
    return cache_->by_dim;
}

std::uint64_t SimplicialComplex::face_count(std::uint64_t max_cells) const {
    std::uint64_t total = 0;
    for (const auto& level : faces(max_cells)) total += level.size();
    return total;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& x) {
    std::vector<std::size_t> f;
    for (const auto& level : x.faces()) f.push_back(level.size());
    return f;
}

SimplicialComplex skeleton(const SimplicialComplex& x, int d) {
    if (d < 0) throw input_error("skeleton dimension must be nonnegative");
    const FaceFamily& all = x.faces();
    FaceFamily kept;
    for (int i = 0; i <= d && i < static_cast<int>(all.size()); ++i) kept.push_back(all[i]);
    return SimplicialComplex::from_face_family(x.vertex_names(), std::move(kept));
}

Subdivision barycentric_subdivision_traced(const SimplicialComplex& x, std::uint64_t max_cells) {
    const FaceFamily& all = x.faces(max_cells);

    // One subdivision vertex per face of x.
    std::vector<Face> face_list;
    for (const auto& level : all)
        for (const Face& f : level) face_list.push_back(f);

    std::vector<std::string> raw_names;
    raw_names.reserve(face_list.size());
    for (const Face& f : face_list) {
        if (f.size() == 1) {
            raw_names.push_back(x.vertex_name(f[0]));
        } else {
            std::vector<std::string> members;
            members.reserve(f.size());
            for (int v : f) members.push_back(x.vertex_name(v));
            std::sort(members.begin(), members.end());
            std::string name = "{";
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i) name += "|";
                name += members[i];
            }
            name += "}";
            raw_names.push_back(std::move(name));
        }
    }

    // Canonical vertex order: sorted by name.
    std::vector<int> order(face_list.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return raw_names[a] < raw_names[b]; });

    std::vector<int> position(face_list.size());
    std::vector<std::string> names(face_list.size());
    std::vector<Face> vertex_face(face_list.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        position[order[rank]] = static_cast<int>(rank);
        names[rank] = raw_names[order[rank]];
        vertex_face[rank] = face_list[order[rank]];
    }

    FaceIndex face_id;
    for (std::size_t i = 0; i < face_list.size(); ++i)
        face_id.emplace(face_list[i], position[i]);

    // Facets of bd(x) are the complete flags of facets of x.
    std::uint64_t flag_count = 0;
    for (const Face& facet : x.facets()) {
        std::uint64_t permutations = 1;
        for (std::size_t i = 2; i <= facet.size(); ++i) permutations *= i;
        flag_count += permutations;
        if (flag_count > max_cells)
            throw cap_exceeded("barycentric_subdivision", "flag count exceeds the cell cap");
    }

    std::vector<Face> flags;
    flags.reserve(flag_count);
    for (const Face& facet : x.facets()) {
        Face perm = facet;
        std::sort(perm.begin(), perm.end());
        do {
            Face chain;
            Face prefix;
            for (int v : perm) {
                prefix.push_back(v);
                Face key = prefix;
                std::sort(key.begin(), key.end());
                chain.push_back(face_id.at(key));
            }
            std::sort(chain.begin(), chain.end());
            flags.push_back(std::move(chain));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(flags.begin(), flags.end());
    flags.erase(std::unique(flags.begin(), flags.end()), flags.end());

    Subdivision out;
    out.complex = SimplicialComplex::from_maximal_faces(std::move(names), std::move(flags));
    out.vertex_face = std::move(vertex_face);
    return out;
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x, std::uint64_t max_cells) {
    return barycentric_subdivision_traced(x, max_cells).complex;
}

SimplicialComplex clique_complex(const Graph& g, std::uint64_t max_cells) {
    std::vector<int> looped = looped_vertices(g);
    const int m = static_cast<int>(looped.size());
    std::vector<std::string> names;
    names.reserve(m);
    for (int v : looped) names.push_back(g.vertex_name(v));

    FaceFamily by_dim;
    std::uint64_t count = 0;
    Face clique;

    std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& candidates) {
        if (++count > max_cells)
            throw cap_exceeded("clique_complex", "clique count exceeds the cell cap");
        if (by_dim.size() < clique.size()) by_dim.resize(clique.size());
        by_dim[clique.size() - 1].push_back(clique);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            int c = candidates[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j)
                if (g.adjacent(looped[c], looped[candidates[j]])) next.push_back(candidates[j]);
            clique.push_back(c);
            extend(next);
            clique.pop_back();
        }
    };

    for (int s = 0; s < m; ++s) {
        std::vector<int> candidates;
        for (int t = s + 1; t < m; ++t)
            if (g.adjacent(looped[s], looped[t])) candidates.push_back(t);
        clique.push_back(s);
        extend(candidates);
        clique.pop_back();
    }

    return SimplicialComplex::from_face_family(std::move(names), std::move(by_dim));
}

Graph looped_one_skeleton(const SimplicialComplex& x) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < x.vertex_count(); ++v) edges.emplace_back(v, v);
    const FaceFamily& all = x.faces();
    if (all.size() > 1)
        for (const Face& e : all[1]) edges.emplace_back(e[0], e[1]);
    return Graph(x.vertex_names(), edges);
}

Poset Poset::from_relation(std::vector<std::string> names,
                           const std::vector<std::pair<int, int>>& strictly_less) {
    const int m = static_cast<int>(names.size());
    std::vector<std::vector<int>> direct(m);
    for (auto [a, b] : strictly_less) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw input_error("order pair references an unknown element");
        if (a == b) throw input_error("strict order relation contains a reflexive pair");
        direct[a].push_back(b);
    }
    for (auto& row : direct) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    // Kahn topological sort; failure means a cycle.
    std::vector<int> indegree(m, 0);
    for (const auto& row : direct)
        for (int b : row) ++indegree[b];
    std::vector<int> topo;
    topo.reserve(m);
    for (int i = 0; i < m; ++i)
        if (indegree[i] == 0) topo.push_back(i);
    for (std::size_t head = 0; head < topo.size(); ++head)
        for (int b : direct[topo[head]])
            if (--indegree[b] == 0) topo.push_back(b);
    if (static_cast<int>(topo.size()) != m)
        throw input_error("order relation contains a cycle");

    // Closure as bit rows, filled in reverse topological order.
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> greater(static_cast<std::size_t>(m) * words, 0);
    auto row = [&](int i) { return greater.data() + static_cast<std::size_t>(i) * words; };
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int a = *it;
        for (int b : direct[a]) {
            row(a)[b / 64] |= 1ull << (b % 64);
            for (int w = 0; w < words; ++w) row(a)[w] |= row(b)[w];
        }
    }

    // Covers: b in G(a) is a cover iff no c in G(a) has b in G(c).
    Poset p;
    p.names_ = std::move(names);
    p.covers_.assign(m, {});
    std::vector<std::uint64_t> reachable(words);
    for (int a = 0; a < m; ++a) {
        std::fill(reachable.begin(), reachable.end(), 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row(a)[w];
            while (bits) {
                int b = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                for (int ww = 0; ww < words; ++ww) reachable[ww] |= row(b)[ww];
            }
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row(a)[w] & ~reachable[w];
            while (bits) {
                int b = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                p.covers_[a].push_back(b);
            }
        }
        std::sort(p.covers_[a].begin(), p.covers_[a].end());
    }
    return p;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b : covers_[a]) out.emplace_back(a, b);
    return out;
}

std::vector<std::vector<int>> Poset::strictly_greater() const {
    const int m = size();
    const int words = (m + 63) / 64;
    std::vector<std::uint64_t> greater(static_cast<std::size_t>(m) * words, 0);
    auto row = [&](int i) { return greater.data() + static_cast<std::size_t>(i) * words; };

    // Reverse topological order over the cover DAG.
    std::vector<int> indegree(m, 0), topo;
    for (const auto& cov : covers_)
        for (int b : cov) ++indegree[b];
    topo.reserve(m);
    for (int i = 0; i < m; ++i)
        if (indegree[i] == 0) topo.push_back(i);
    for (std::size_t head = 0; head < topo.size(); ++head)
        for (int b : covers_[topo[head]])
            if (--indegree[b] == 0) topo.push_back(b);

    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int a = *it;
        for (int b : covers_[a]) {
            row(a)[b / 64] |= 1ull << (b % 64);
            for (int w = 0; w < words; ++w) row(a)[w] |= row(b)[w];
        }
    }

    std::vector<std::vector<int>> lists(m);
    for (int a = 0; a < m; ++a)
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = row(a)[w];
            while (bits) {
                lists[a].push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    return lists;
}

SimplicialComplex order_complex(const Poset& p, std::uint64_t max_cells) {
    const auto greater = p.strictly_greater();

    // Chain count by DP before enumerating anything, so an over-cap poset
    // fails fast.  chains_from(i) counts the chains whose least element is
    // i; sums saturate.
    {
        constexpr std::uint64_t saturated = ~0ull >> 1;
        auto add_sat = [&](std::uint64_t a, std::uint64_t b) {
            return (a > saturated - b) ? saturated : a + b;
        };
        // Elements in an order compatible with `greater` (reverse of a
        // topological order of the comparability DAG restricted to covers
        // works; greater lists are already transitively closed, so a plain
        // sort by descending greater-count is not sound -- recurse with
        // memo instead).
        std::vector<std::uint64_t> memo(p.size(), 0);
        std::vector<char> done(p.size(), 0);
        std::function<std::uint64_t(int)> chains_from = [&](int i) -> std::uint64_t {
            if (done[i]) return memo[i];
            std::uint64_t total = 1;
            for (int j : greater[i]) total = add_sat(total, chains_from(j));
            done[i] = 1;
            return memo[i] = total;
        };
        std::uint64_t total = 0;
        for (int i = 0; i < p.size(); ++i) total = add_sat(total, chains_from(i));
        if (total > max_cells)
            throw cap_exceeded("order_complex", "chain count exceeds the cell cap");
    }

    FaceFamily by_dim;
    std::uint64_t count = 0;
    Face chain;

    std::function<void(int)> extend = [&](int last) {
        if (++count > max_cells)
            throw cap_exceeded("order_complex", "chain count exceeds the cell cap");
        Face face = chain;
        std::sort(face.begin(), face.end());
        if (by_dim.size() < face.size()) by_dim.resize(face.size());
        by_dim[face.size() - 1].push_back(std::move(face));
        for (int next : greater[last]) {
            chain.push_back(next);
            extend(next);
            chain.pop_back();
        }
    };

    for (int i = 0; i < p.size(); ++i) {
        chain.push_back(i);
        extend(i);
        chain.pop_back();
    }
    return SimplicialComplex::from_face_family(p.names(), std::move(by_dim));
}

SimplicialComplex nerve(
    const std::vector<std::pair<std::string, std::vector<std::string>>>& cover,
    std::uint64_t max_cells) {
    const int m = static_cast<int>(cover.size());
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> members(m);
    {
        std::unordered_set<std::string> seen;
        for (int i = 0; i < m; ++i) {
            if (!seen.insert(cover[i].first).second)
                throw input_error("duplicate cover member name: " + cover[i].first);
            if (cover[i].second.empty())
                throw input_error("empty cover member: " + cover[i].first);
            names.push_back(cover[i].first);
            members[i] = cover[i].second;
            std::sort(members[i].begin(), members[i].end());
            members[i].erase(std::unique(members[i].begin(), members[i].end()), members[i].end());
        }
    }

    FaceFamily by_dim;
    std::uint64_t count = 0;
    Face face;

    std::function<void(int, const std::vector<std::string>&)> extend =
        [&](int last, const std::vector<std::string>& intersection) {
            if (++count > max_cells) throw cap_exceeded("nerve", "face count exceeds the cell cap");
            if (by_dim.size() < face.size()) by_dim.resize(face.size());
            by_dim[face.size() - 1].push_back(face);
            for (int next = last + 1; next < m; ++next) {
                std::vector<std::string> meet;
                std::set_intersection(intersection.begin(), intersection.end(),
                                      members[next].begin(), members[next].end(),
                                      std::back_inserter(meet));
                if (meet.empty()) continue;
                face.push_back(next);
                extend(next, meet);
                face.pop_back();
            }
        };

    for (int i = 0; i < m; ++i) {
        face.push_back(i);
        extend(i, members[i]);
        face.pop_back();
    }
    return SimplicialComplex::from_face_family(std::move(names), std::move(by_dim));
}

bool complexes_equal_under(const SimplicialComplex& x, const SimplicialComplex& y,
                           const std::map<std::string, std::string>& bijection) {
    if (static_cast<int>(bijection.size()) != x.vertex_count())
        throw input_error("mapping is not defined on exactly the vertices of the first complex");
    std::vector<int> image(x.vertex_count(), -1);
    std::unordered_set<int> hit;
    for (const auto& [from, to] : bijection) {
        int xi = x.index_of(from);
        auto yi = [&]() -> int {
            for (int i = 0; i < y.vertex_count(); ++i)
                if (y.vertex_name(i) == to) return i;
            throw input_error("mapping image is not a vertex of the second complex: " + to);
        }();
        image[xi] = yi;
        if (!hit.insert(yi).second) throw input_error("mapping is not injective at: " + to);
    }
    if (x.vertex_count() != y.vertex_count()) return false;

    const FaceFamily& fx = x.faces();
    const FaceFamily& fy = y.faces();
    if (fx.size() != fy.size()) return false;
    for (std::size_t d = 0; d < fx.size(); ++d) {
        std::vector<Face> mapped;
        mapped.reserve(fx[d].size());
        for (const Face& f : fx[d]) {
            Face g(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) g[i] = image[f[i]];
            std::sort(g.begin(), g.end());
            mapped.push_back(std::move(g));
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped != fy[d]) return false;
    }
    return true;
}

namespace {
std::vector<std::string> letter_names(int n) {
    if (n > 26) throw input_error("standard simplices support at most 26 vertices");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}
}  // namespace

SimplicialComplex full_simplex(int dim) {
    if (dim < 0) throw input_error("simplex dimension must be nonnegative");
    Face all(dim + 1);
    for (int i = 0; i <= dim; ++i) all[i] = i;
    return SimplicialComplex::from_facet_indices(letter_names(dim + 1), {all});
}

SimplicialComplex simplex_boundary(int dim) {
    if (dim <= 0) throw input_error("simplex boundary needs dimension at least 1");
    std::vector<Face> facets;
    for (int skip = 0; skip <= dim; ++skip) {
        Face f;
        for (int i = 0; i <= dim; ++i)
            if (i != skip) f.push_back(i);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facet_indices(letter_names(dim + 1), std::move(facets));
}

}  // namespace homcx
