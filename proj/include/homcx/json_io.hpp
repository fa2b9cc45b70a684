#pragma once

#include <string>

#include "json.hpp"

#include "homcx/complex.hpp"
#include "homcx/graph.hpp"
#include "homcx/hom.hpp"
#include "homcx/homology.hpp"
#include "homcx/universality.hpp"

namespace homcx {

using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [["a","b"], ["a","a"], ...]} — one entry
/// per unordered pair, loops as ["a","a"].  Duplicate entries are
/// rejected; the symmetric closure is applied on load.
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// {"facets": [["a","b","c"], ...]} — the vertex set is inferred and
/// ordered lexicographically.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& x);

Json betti_to_json(const BettiVector& betti, std::int64_t euler);
Json multihom_to_json(const Graph& t, const Graph& g, const MultiHom& m);
Json hom_poset_to_json(const Graph& t, const Graph& g, const HomPoset& hp);
Json dismantle_to_json(const Graph& g, const DismantleResult& result);
Json report_to_json(const UniversalityReport& report);
Json conjecture41_to_json(const Conjecture41Report& report);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace homcx
