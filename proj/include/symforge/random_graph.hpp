#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symforge/graph.hpp"

namespace symforge {

struct RandomGraphOptions {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 7;
    std::size_t max_legs = 4;
    double self_loop_probability = 0.15;
    double mass_probability = 0.2;
};

/// Connected multigraph with a random spanning tree plus extra edges that
/// may be parallel or self-loops. Vertices v1..vr, edges e1..en carrying
/// x1..xn, legs p1..pm on random vertices.
FeynGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// The seeded corpus used by the verification suites.
std::vector<FeynGraph> random_corpus(std::uint64_t seed, std::size_t count, const RandomGraphOptions& options = {});

}  // namespace symforge
