#include "homcx/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

namespace homcx {

namespace {

// Tokens are opaque; constructions that generate canonical names (products,
// exponentials, subdivisions) detect any collision with user tokens
// themselves.
void check_token(const std::string& token) {
    if (token.empty()) throw input_error("vertex tokens must be nonempty");
}

std::string token_at(const Json& j) {
    if (!j.is_string()) throw input_error("vertex tokens must be strings");
    return j.get<std::string>();
}

}  // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("graph JSON must be an object with 'vertices' and 'edges'");

    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    for (const auto& v : j.at("vertices")) {
        std::string token = token_at(v);
        check_token(token);
        if (!index.emplace(token, static_cast<int>(names.size())).second)
            throw input_error("duplicate vertex: " + token);
        names.push_back(token);
    }

    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("each edge must be a two-element array");
        std::string a = token_at(e[0]), b = token_at(e[1]);
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end()) throw input_error("edge references undeclared vertex: " + a);
        if (ib == index.end()) throw input_error("edge references undeclared vertex: " + b);
        auto key = std::minmax(ia->second, ib->second);
        if (!seen.insert(key).second)
            throw input_error("duplicate edge entry: [" + a + "," + b + "]");
        edges.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(names), edges);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_names();
    Json edges = Json::array();
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (v <= u) edges.push_back({g.vertex_name(v), g.vertex_name(u)});
    j["edges"] = std::move(edges);
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets"))
        throw input_error("complex JSON must be an object with 'facets'");

    std::set<std::string> tokens;
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j.at("facets")) {
        if (!f.is_array()) throw input_error("each facet must be an array of vertex tokens");
        std::vector<std::string> facet;
        for (const auto& v : f) {
            std::string token = token_at(v);
            check_token(token);
            tokens.insert(token);
            facet.push_back(token);
        }
        if (facet.empty()) throw input_error("empty facet");
        facets.push_back(std::move(facet));
    }
    std::vector<std::string> names(tokens.begin(), tokens.end());
    return SimplicialComplex::from_facets(std::move(names), std::move(facets));
}

Json complex_to_json(const SimplicialComplex& x) {
    Json facets = Json::array();
    for (const Face& f : x.facets()) {
        Json facet = Json::array();
        for (int v : f) facet.push_back(x.vertex_name(v));
        facets.push_back(std::move(facet));
    }
    Json j;
    j["facets"] = std::move(facets);
    return j;
}

Json betti_to_json(const BettiVector& betti, std::int64_t euler) {
    Json j;
    j["betti"] = betti;
    j["euler"] = euler;
    return j;
}

Json multihom_to_json(const Graph& t, const Graph& g, const MultiHom& m) {
    Json eta;
    for (int x = 0; x < t.vertex_count(); ++x) {
        Json set = Json::array();
        for (int v : m.sets[x]) set.push_back(g.vertex_name(v));
        eta[t.vertex_name(x)] = std::move(set);
    }
    Json j;
    j["eta"] = std::move(eta);
    return j;
}

Json hom_poset_to_json(const Graph& t, const Graph& g, const HomPoset& hp) {
    Json elements = Json::array();
    for (const auto& m : hp.elements) elements.push_back(multihom_to_json(t, g, m));
    Json covers = Json::array();
    for (auto [a, b] : hom_poset_order(hp, g).cover_pairs()) covers.push_back({a, b});
    Json j;
    j["elements"] = std::move(elements);
    j["covers"] = std::move(covers);
    return j;
}

Json dismantle_to_json(const Graph& g, const DismantleResult& result) {
    Json folds = Json::array();
    for (const auto& step : result.folds.steps)
        folds.push_back({g.vertex_name(step.folded), g.vertex_name(step.witness)});
    Json j;
    j["dismantlable"] = result.dismantlable;
    j["folds"] = std::move(folds);
    j["residual"] = graph_to_json(result.residual);
    return j;
}

Json report_to_json(const UniversalityReport& report) {
    Json j;
    j["k"] = report.k;
    j["g_size"] = {{"vertices", report.g_vertices}, {"edges", report.g_edges}};
    j["complex_size"] = {{"f_vector", report.complex_f_vector}};
    j["betti_x"] = report.betti_x;
    j["betti_hom"] = report.betti_hom;
    j["match"] = report.match;
    Json balls;
    for (const auto& [name, ok] : report.balls_dismantlable) balls[name] = ok;
    j["balls_dismantlable"] = std::move(balls);
    Json intersections;
    for (const auto& [label, ok] : report.intersections_dismantlable) intersections[label] = ok;
    j["intersections_dismantlable"] = std::move(intersections);
    j["nerve_matches"] = report.nerve_matches;
    return j;
}

Json conjecture41_to_json(const Conjecture41Report& report) {
    Json j;
    j["k"] = report.k;
    j["g_size"] = {{"vertices", report.g_vertices}, {"edges", report.g_edges}};
    j["betti_x"] = report.betti_x;
    j["betti_hom"] = report.betti_hom;
    j["match"] = report.match;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open file for writing: " + path);
    out << j.dump() << "\n";
}

}  // namespace homcx
