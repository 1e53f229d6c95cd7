#include "symforge/random_graph.hpp"

#include <algorithm>
#include <string>

namespace symforge {

FeynGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& options)
{
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    std::bernoulli_distribution self_loop(options.self_loop_probability);
    std::bernoulli_distribution massive(options.mass_probability);

    // At least one edge beyond the tree whenever the budget allows.
    const std::size_t r = uniform(1, std::min(options.max_vertices, options.max_edges + 1));
    const std::size_t n = uniform(r - 1, options.max_edges);
    const std::size_t m = uniform(0, options.max_legs);

    FeynGraph g("random");
    for (std::size_t k = 1; k <= r; ++k) {
        g.add_vertex("v" + std::to_string(k));
    }
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t k = 1; k < r; ++k) {
        ends.emplace_back(uniform(0, k - 1), k);
    }
    while (ends.size() < n) {
        const auto u = uniform(0, r - 1);
        if (self_loop(rng) || r == 1) {
            ends.emplace_back(u, u);
            continue;
        }
        auto v = uniform(0, r - 2);
        v += v >= u ? 1 : 0;
        ends.emplace_back(u, v);
    }
    std::shuffle(ends.begin(), ends.end(), rng);
    for (std::size_t k = 0; k < ends.size(); ++k) {
        const auto id = "e" + std::to_string(k + 1);
        g.add_edge(id, g.vertices()[ends[k].first], g.vertices()[ends[k].second], static_cast<std::uint32_t>(k + 1));
        if (massive(rng)) {
            g.set_mass(id, static_cast<std::uint32_t>(k + 1));
        }
    }
    for (std::size_t j = 1; j <= m; ++j) {
        g.add_leg(static_cast<std::uint32_t>(j), g.vertices()[uniform(0, r - 1)]);
    }
    return g;
}

std::vector<FeynGraph> random_corpus(std::uint64_t seed, std::size_t count, const RandomGraphOptions& options)
{
    std::mt19937_64 rng(seed);
    std::vector<FeynGraph> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        auto g = random_connected_graph(rng, options);
        g.set_name("random-" + std::to_string(seed) + "-" + std::to_string(k));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace symforge
