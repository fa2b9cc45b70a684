#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/json_io.hpp"
#include "homcx/sampling.hpp"
#include "oracles.hpp"

using namespace homcx;

namespace {

std::set<std::vector<std::vector<int>>> multihom_set(const HomPoset& hp) {
    std::set<std::vector<std::vector<int>>> out;
    for (const auto& m : hp.elements) out.insert(m.sets);
    return out;
}

}  // namespace

TEST_CASE("enumerate_homs") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    auto maps = enumerate_homs(k2, k3);
    CHECK(maps.size() == 6);
    CHECK(std::is_sorted(maps.begin(), maps.end()));
    auto expected = oracle::all_graph_maps(k2, k3);
    CHECK(maps == expected);

    CHECK(enumerate_homs(k2, cycle_graph(12, true)).size() == 36);

    auto constant = enumerate_homs(path_graph(3), looped_point());
    CHECK(constant.size() == 1);
    CHECK(constant[0] == VertexMap{0, 0, 0});
}

TEST_CASE("hom_poset on the baseline pairs") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    auto hp = hom_poset(k2, k3);
    CHECK(hp.elements.size() == 12);

    int atoms = 0;
    for (const auto& m : hp.elements) atoms += m.is_atom();
    CHECK(atoms == 6);

    auto brute = oracle::all_multihoms(k2, k3);
    std::set<std::vector<std::vector<int>>> brute_set;
    for (const auto& m : brute) brute_set.insert(m.sets);
    CHECK(multihom_set(hp) == brute_set);

    auto tiny = hom_poset(k2, k2);
    CHECK(tiny.elements.size() == 2);
    for (const auto& m : tiny.elements) CHECK(m.is_atom());

    // Elements of Hom(1, G) are the reflexive cliques of G.
    auto cliques = hom_poset(looped_point(), complete_graph(3, true));
    CHECK(cliques.elements.size() == 7);
}

TEST_CASE("hom_poset agrees with brute force on a pool") {
    std::vector<Graph> ts = {complete_graph(2), looped_point(), path_graph(3)};
    std::vector<Graph> gs = {complete_graph(3), complete_graph(2, true), cycle_graph(4),
                             path_graph(3, true)};
    for (const auto& t : ts)
        for (const auto& g : gs) {
            auto hp = hom_poset(t, g);
            auto brute = oracle::all_multihoms(t, g);
            std::set<std::vector<std::vector<int>>> brute_set;
            for (const auto& m : brute) brute_set.insert(m.sets);
            CHECK(multihom_set(hp) == brute_set);
        }
}

TEST_CASE("atoms of the hom poset are exactly the graph maps") {
    std::vector<Graph> ts = {complete_graph(2), path_graph(3)};
    std::vector<Graph> gs = {complete_graph(3), cycle_graph(5, true)};
    for (const auto& t : ts)
        for (const auto& g : gs) {
            auto hp = hom_poset(t, g);
            std::set<VertexMap> atom_maps;
            for (const auto& m : hp.elements) {
                if (!m.is_atom()) continue;
                VertexMap f;
                for (const auto& s : m.sets) f.push_back(s[0]);
                atom_maps.insert(f);
            }
            auto maps = enumerate_homs(t, g);
            CHECK(atom_maps == std::set<VertexMap>(maps.begin(), maps.end()));
        }
}

TEST_CASE("hom_complex_order on the named examples") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    auto circle = hom_complex_order(k2, k3);
    CHECK(f_vector(circle) == std::vector<std::size_t>{12, 12});
    CHECK(betti_z2(circle) == BettiVector{1, 1});

    auto two_points = hom_complex_order(k2, k2);
    CHECK(betti_z2(two_points) == BettiVector{2});

    auto bd_triangle = hom_complex_order(looped_point(), complete_graph(3, true));
    CHECK(f_vector(bd_triangle) == std::vector<std::size_t>{7, 12, 6});
    CHECK(betti_z2(bd_triangle) == BettiVector{1, 0, 0});
}

TEST_CASE("hom_complex_exponential on the named examples") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    auto hexagon = hom_complex_exponential(k2, k3);
    CHECK(hexagon.vertex_count() == 6);
    CHECK(f_vector(hexagon) == std::vector<std::size_t>{6, 6});
    CHECK(betti_z2(hexagon) == BettiVector{1, 1});

    auto ring = hom_complex_exponential(k2, cycle_graph(12, true));
    CHECK(ring.vertex_count() == 36);
    CHECK(betti_equal(betti_z2(ring), BettiVector{1, 1}));

    auto point = hom_complex_exponential(path_graph(3), looped_point());
    CHECK(f_vector(point) == std::vector<std::size_t>{1});
}

TEST_CASE("order and exponential routes have equal Betti vectors") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {complete_graph(2), complete_graph(3)},
        {complete_graph(2), complete_graph(2)},
        {looped_point(), complete_graph(3, true)},
        {complete_graph(2), cycle_graph(5, true)},
        {path_graph(3), path_graph(3, true)},
    };
    for (const auto& [t, g] : pairs)
        CHECK(betti_equal(betti_z2(hom_complex_order(t, g)),
                          betti_z2(hom_complex_exponential(t, g))));
}

TEST_CASE("adjunction Betti agreement on small triples") {
    std::vector<Graph> pool = {complete_graph(2), looped_point(), path_graph(2, true)};
    for (const auto& a : pool)
        for (const auto& b : pool)
            for (const auto& c : pool) {
                auto lhs = betti_z2(hom_complex_order(product(a, b), c));
                auto rhs = betti_z2(hom_complex_order(a, exponential_graph(c, b)));
                CHECK(betti_equal(lhs, rhs));
            }
}

TEST_CASE("support subgraphs and the diameter lemma") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);

    Graph single = support_subgraph(k2, k3, {{0, 1}});
    CHECK(single.vertex_count() == 2);
    CHECK(diameter(single) == 1);

    // An edge of the hexagon in K_3^{K_2}.
    std::vector<VertexMap> edge = {{0, 1}, {2, 1}};
    Graph sup = support_subgraph(k2, k3, edge);
    CHECK(diameter(sup) <= 2);

    Graph c5r = cycle_graph(5, true);
    Graph pt_support = support_subgraph(k2, c5r, {{3, 3}});
    CHECK(pt_support.vertex_count() == 1);
    CHECK(pt_support.has_loop(0));

    // Not a clique: two constant maps at nonadjacent vertices of C_5.
    std::vector<VertexMap> bad = {{0, 0}, {2, 2}};
    CHECK_THROWS_AS(support_subgraph(k2, c5r, bad), input_error);
    // Not looped: not a graph map.
    CHECK_THROWS_AS(support_subgraph(k2, k2, {{0, 0}}), input_error);
}

TEST_CASE("diameter lemma on every clique of small hom graphs") {
    std::vector<Graph> ts = {complete_graph(2), path_graph(3)};
    // Reflexive complete targets are avoided here: every pair of maps is
    // adjacent there, so the clique complex is one giant simplex.
    std::vector<Graph> gs = {complete_graph(3), cycle_graph(5, true), cycle_graph(6, true)};
    for (const auto& t : ts) {
        const int bound = std::max(2, diameter(t));
        for (const auto& g : gs) {
            auto complex = hom_complex_exponential(t, g);
            auto maps = enumerate_homs(t, g);
            for (const auto& level : complex.faces())
                for (const Face& face : level) {
                    std::vector<VertexMap> alpha;
                    for (int v : face) {
                        // Complex vertex names match hom_graph vertex order.
                        alpha.push_back(maps[v]);
                    }
                    CHECK(diameter(support_subgraph(t, g, alpha)) <= bound);
                }
        }
    }
}

TEST_CASE("hom complexes of dismantlable graphs are contractible") {
    SplitMix64 rng(77);
    std::vector<Graph> ss = {complete_graph(2), looped_point(), path_graph(3)};
    int computed = 0;
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_dismantlable_graph(rng, 3 + static_cast<int>(rng.below(4)));
        REQUIRE(dismantle(g).dismantlable);
        for (const auto& s : ss) {
            BettiVector betti;
            try {
                betti = betti_z2(hom_complex_order(s, g, 500000), 500000);
            } catch (const cap_exceeded&) {
                continue;  // acceptable: a denser sample outgrew the budget
            }
            ++computed;
            REQUIRE(!betti.empty());
            CHECK(betti[0] == 1);
            for (std::size_t d = 1; d < betti.size(); ++d) CHECK(betti[d] == 0);
        }
    }
    CHECK(computed >= 12);
}

TEST_CASE("multihom and poset JSON export shapes") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    auto hp = hom_poset(k2, k3);
    Json one = multihom_to_json(k2, k3, hp.elements.front());
    REQUIRE(one.contains("eta"));
    CHECK(one["eta"].size() == 2);
    for (const auto& [key, value] : one["eta"].items()) {
        CHECK((key == "0" || key == "1"));
        CHECK(value.is_array());
        CHECK(!value.empty());
    }

    Json whole = hom_poset_to_json(k2, k3, hp);
    CHECK(whole["elements"].size() == 12);
    CHECK(whole["covers"].size() == 12);  // each (1,2)-shaped element covers 2 atoms
    for (const auto& pair : whole["covers"]) {
        CHECK(pair.is_array());
        CHECK(pair.size() == 2);
    }
}

TEST_CASE("hom_poset respects the cap") {
    CHECK_THROWS_AS(hom_poset(complete_graph(2), complete_graph(3), 5), cap_exceeded);
    // Loopless target with 26 vertices: the root candidate set is too wide.
    CHECK_THROWS_AS(hom_poset(complete_graph(2), complete_graph(26)), cap_exceeded);
}
