#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/json_io.hpp"
#include "homcx/sampling.hpp"
#include "homcx/universality.hpp"

namespace py = pybind11;
using namespace homcx;

namespace {

VertexMap map_from_names(const Graph& t, const Graph& g,
                         const std::map<std::string, std::string>& assignment) {
    VertexMap f(t.vertex_count(), -1);
    for (const auto& [from, to] : assignment) f[t.index_of(from)] = g.index_of(to);
    for (int v = 0; v < t.vertex_count(); ++v)
        if (f[v] < 0) throw input_error("assignment misses vertex: " + t.vertex_name(v));
    return f;
}

std::vector<std::string> names_of(const Graph& g, const std::vector<int>& idx) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (int v : idx) out.push_back(g.vertex_name(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph Hom complexes, the G_{k,X} construction, and Z/2 homology";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<cap_exceeded>(m, "CapExceeded");

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::vector<std::string>& vertices,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
                 return Graph::from_named_edges(vertices, edges);
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_static("from_json",
                    [](const std::string& text) { return graph_from_json(Json::parse(text)); })
        .def("to_json", [](const Graph& g) { return graph_to_json(g).dump(); })
        .def_property_readonly("vertices", &Graph::vertex_names)
        .def("adjacent",
             [](const Graph& g, const std::string& u, const std::string& v) {
                 return g.adjacent(g.index_of(u), g.index_of(v));
             })
        .def("has_loop", [](const Graph& g, const std::string& v) { return g.has_loop(g.index_of(v)); })
        .def("edge_count", &Graph::edge_entry_count)
        .def("__len__", &Graph::vertex_count)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph with " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_entry_count()) + " edge entries>";
        });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::vector<std::string>>& facets) {
                 std::set<std::string> tokens;
                 for (const auto& f : facets) tokens.insert(f.begin(), f.end());
                 return SimplicialComplex::from_facets(
                     std::vector<std::string>(tokens.begin(), tokens.end()), facets);
             }),
             py::arg("facets"))
        .def_static("from_json",
                    [](const std::string& text) { return complex_from_json(Json::parse(text)); })
        .def("to_json", [](const SimplicialComplex& x) { return complex_to_json(x).dump(); })
        .def_property_readonly("vertices", &SimplicialComplex::vertex_names)
        .def("facets",
             [](const SimplicialComplex& x) {
                 std::vector<std::vector<std::string>> out;
                 for (const Face& f : x.facets()) {
                     std::vector<std::string> names;
                     for (int v : f) names.push_back(x.vertex_name(v));
                     out.push_back(names);
                 }
                 return out;
             })
        .def("f_vector", [](const SimplicialComplex& x) { return f_vector(x); })
        .def("dim", &SimplicialComplex::dim)
        .def("__eq__",
             [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& x) {
            return "<SimplicialComplex with " + std::to_string(x.vertex_count()) + " vertices, " +
                   std::to_string(x.facets().size()) + " facets>";
        });

    m.def("complete_graph", &complete_graph, py::arg("n"), py::arg("reflexive") = false);
    m.def("cycle_graph", &cycle_graph, py::arg("n"), py::arg("reflexive") = false);
    m.def("path_graph", &path_graph, py::arg("n"), py::arg("reflexive") = false);
    m.def("looped_point", &looped_point);
    m.def("full_simplex", &full_simplex, py::arg("dim"));
    m.def("simplex_boundary", &simplex_boundary, py::arg("dim"));

    m.def("neighborhood", [](const Graph& g, const std::string& v) {
        return names_of(g, neighborhood(g, g.index_of(v)));
    });
    m.def("bfs_distances", [](const Graph& g, const std::string& v) {
        auto dist = bfs_distances(g, g.index_of(v));
        std::map<std::string, int> out;
        for (int u = 0; u < g.vertex_count(); ++u) out[g.vertex_name(u)] = dist[u];
        return out;
    });
    m.def("diameter", &diameter);
    m.def("is_graph_map", [](const Graph& t, const Graph& g,
                             const std::map<std::string, std::string>& assignment) {
        return is_graph_map(t, g, map_from_names(t, g, assignment));
    });
    m.def("product", &product);
    m.def("exponential_graph", &exponential_graph, py::arg("h"), py::arg("g"),
          py::arg("max_cells") = default_cell_cap);
    m.def("looped_vertices",
          [](const Graph& g) { return names_of(g, looped_vertices(g)); });
    m.def("induced_subgraph", [](const Graph& g, const std::vector<std::string>& names) {
        std::vector<int> idx;
        for (const auto& n : names) idx.push_back(g.index_of(n));
        return induced_subgraph(g, idx);
    });
    m.def("find_dominated", [](const Graph& g) -> std::optional<std::pair<std::string, std::string>> {
        auto hit = find_dominated(g);
        if (!hit) return std::nullopt;
        return std::make_pair(g.vertex_name(hit->first), g.vertex_name(hit->second));
    });
    m.def("dismantle", [](const Graph& g) {
        auto result = dismantle(g);
        py::dict out;
        out["dismantlable"] = result.dismantlable;
        std::vector<std::pair<std::string, std::string>> folds;
        for (const auto& step : result.folds.steps)
            folds.emplace_back(g.vertex_name(step.folded), g.vertex_name(step.witness));
        out["folds"] = folds;
        out["residual"] = result.residual;
        return out;
    });

    m.def("barycentric_subdivision",
          [](const SimplicialComplex& x) { return barycentric_subdivision(x); });
    m.def("clique_complex",
          [](const Graph& g) { return clique_complex(g); });
    m.def("nerve", [](const std::vector<std::pair<std::string, std::vector<std::string>>>& cover) {
        return nerve(cover);
    });
    m.def("betti", [](const SimplicialComplex& x, std::uint64_t max_cells) {
        return betti_z2(x, max_cells);
    }, py::arg("x"), py::arg("max_cells") = default_cell_cap);
    m.def("euler_characteristic", &euler_characteristic);
    m.def("betti_equal", &betti_equal);

    m.def("enumerate_homs", [](const Graph& t, const Graph& g, std::uint64_t max_cells) {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : enumerate_homs(t, g, max_cells)) out.push_back(names_of(g, f));
        return out;
    }, py::arg("t"), py::arg("g"), py::arg("max_cells") = default_cell_cap);
    m.def("hom_complex_order", &hom_complex_order, py::arg("t"), py::arg("g"),
          py::arg("max_cells") = default_cell_cap);
    m.def("hom_complex_exponential", &hom_complex_exponential, py::arg("t"), py::arg("g"),
          py::arg("max_cells") = default_cell_cap);

    m.def("choose_k", [](const Graph& t) {
        auto params = choose_k(t);
        py::dict out;
        out["k"] = params.k;
        out["d"] = params.d;
        out["point_case"] = params.point_case;
        return out;
    });
    m.def("build_g_kx", &build_g_kx, py::arg("x"), py::arg("k"),
          py::arg("max_cells") = default_cell_cap);
    m.def("ball_subgraph", &ball_subgraph, py::arg("gkx"), py::arg("x"), py::arg("center"),
          py::arg("k"));
    m.def("intersection_subgraph", &intersection_subgraph, py::arg("gkx"), py::arg("x"),
          py::arg("members"), py::arg("k"));
    m.def("vertex_type", [](const SimplicialComplex& x, int k, const std::string& name) {
        auto type = vertex_type(x, k, name);
        return std::make_pair(type.i, type.j);
    });
    m.def("cover_nerve", [](const SimplicialComplex& x, int k) {
        auto result = cover_nerve(x, k);
        return std::make_pair(result.nerve, result.matches_x);
    }, py::arg("x"), py::arg("k"));

    m.def("verify_universality_json",
          [](const Graph& t, const SimplicialComplex& x, std::optional<int> k,
             std::uint64_t max_cells, const std::string& via) {
              HomRoute route = via == "poset" ? HomRoute::poset : HomRoute::exponential;
              return report_to_json(verify_universality(t, x, k, max_cells, route)).dump();
          },
          py::arg("t"), py::arg("x"), py::arg("k") = std::nullopt,
          py::arg("max_cells") = default_cell_cap, py::arg("via") = "exp");
    m.def("conjecture41_json", [](const SimplicialComplex& x, std::uint64_t max_cells) {
        return conjecture41_to_json(conjecture41(x, max_cells)).dump();
    }, py::arg("x"), py::arg("max_cells") = default_cell_cap);

    m.def("random_dismantlable_graph", [](std::uint64_t seed, int n) {
        SplitMix64 rng(seed);
        return random_dismantlable_graph(rng, n);
    }, py::arg("seed"), py::arg("n"));
}
