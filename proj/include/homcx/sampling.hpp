#pragma once

#include <cstdint>
#include <vector>

#include "homcx/graph.hpp"

namespace homcx {

/// splitmix64: tiny deterministic generator, identical output on every
/// platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    bool chance_half() { return next() & 1; }
};

/// Random reflexive dismantlable graph grown by reverse folds: each new
/// vertex attaches to a witness plus a random subset of its neighborhood.
Graph random_dismantlable_graph(SplitMix64& rng, int n_vertices);

/// Random clique of the looped part of G^T, grown greedily from a random
/// graph map; `maps` must be the full list from enumerate_homs(t, g).
std::vector<VertexMap> sample_map_clique(const Graph& t, const Graph& g,
                                         const std::vector<VertexMap>& maps, SplitMix64& rng,
                                         int max_size);

}  // namespace homcx
