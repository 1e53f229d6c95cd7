#pragma once

#include <random>
#include <string>

#include "symforge/graph.hpp"
#include "symforge/graph_io.hpp"
#include "symforge/poly.hpp"

namespace symforge::testing {

inline std::string fixture_path(const std::string& name)
{
    return std::string(SYMFORGE_FIXTURES) + "/" + name;
}

inline FeynGraph fixture(const std::string& name)
{
    return load_graph(fixture_path(name + ".graph"));
}

// Edges e1..en carry x1..xn.
inline FeynGraph make_graph(const std::string& name, std::size_t vertex_count,
                            const std::vector<std::pair<std::size_t, std::size_t>>& ends,
                            const std::vector<std::size_t>& leg_vertices = {})
{
    FeynGraph g(name);
    for (std::size_t k = 1; k <= vertex_count; ++k) {
        g.add_vertex("v" + std::to_string(k));
    }
    for (std::size_t k = 0; k < ends.size(); ++k) {
        g.add_edge("e" + std::to_string(k + 1), "v" + std::to_string(ends[k].first),
                   "v" + std::to_string(ends[k].second), static_cast<std::uint32_t>(k + 1));
    }
    for (std::size_t k = 0; k < leg_vertices.size(); ++k) {
        g.add_leg(static_cast<std::uint32_t>(k + 1), "v" + std::to_string(leg_vertices[k]));
    }
    return g;
}

inline FeynGraph bubble() { return make_graph("bubble", 2, {{1, 2}, {1, 2}}, {1, 2}); }
inline FeynGraph triangle() { return make_graph("triangle", 3, {{1, 2}, {2, 3}, {3, 1}}, {1, 2, 3}); }
inline FeynGraph single_edge() { return make_graph("edge", 2, {{1, 2}}); }

inline Poly fig1_u()
{
    const auto x = [](std::uint32_t i) { return Poly::x(i); };
    return x(1) * x(2) * (x(3) + x(4)) + (x(1) + x(2)) * x(3) * x(4) +
           (x(1) * x(2) + x(1) * x(3) + x(2) * x(4) + x(3) * x(4)) * x(5);
}

// Random polynomial in x1..x4, z1, sp(1,2) with small coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t terms = 4)
{
    const Poly atoms[] = {Poly::x(1), Poly::x(2), Poly::x(3), Poly::x(4), Poly::z(1), Poly::sp(1, 2)};
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> deg(0, 3);
    Poly out;
    for (std::size_t t = 0; t < terms; ++t) {
        Poly m(static_cast<long>(coef(rng)));
        for (int d = deg(rng); d > 0; --d) {
            m *= atoms[pick(rng)];
        }
        out += m;
    }
    return out;
}

}  // namespace symforge::testing
