#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "symforge/graph.hpp"
#include "symforge/poly.hpp"

namespace symforge {

/// Acyclic spanning edge set with exactly `component_count` components.
struct SpanningForest {
    std::vector<std::size_t> edges;      // edge indices, ascending
    std::vector<std::size_t> component;  // label per vertex, numbered by first vertex
    std::size_t component_count = 0;

    bool contains(std::size_t edge) const;
};

/// Every spanning k-forest of g (legs ignored), in lexicographic order of
/// edge-index sets. Empty when none exist.
std::vector<SpanningForest> enumerate_spanning_forests(const FeynGraph& g, std::size_t k);

/// Scalar products of external momenta after momentum conservation: the
/// largest momentum index m is eliminated through p_m = -(sum of the
/// others), so every product lives in the sp(i,j), i <= j < m basis.
class MomentumBasis {
public:
    explicit MomentumBasis(std::vector<std::uint32_t> momenta);
    explicit MomentumBasis(const FeynGraph& g);

    /// p_i . p_j reduced to the basis.
    Poly product(std::uint32_t i, std::uint32_t j) const;
    /// (sum of c_j p_j)^2 reduced to the basis.
    Poly square(const std::map<std::uint32_t, long>& combination) const;

private:
    std::map<std::uint32_t, long> reduce(const std::map<std::uint32_t, long>& combination) const;

    std::vector<std::uint32_t> momenta_;
};

/// s for a 2-forest: the reduced square of the momentum flowing into one
/// component. `side` picks the component label; by default the component
/// without the leg of largest momentum index.
struct KinematicInvariant {
    Poly expansion;
};

KinematicInvariant kinematic_invariant(const FeynGraph& g, const SpanningForest& f,
                                       std::optional<std::size_t> side = std::nullopt);

/// U = sum over spanning trees of the product of tree edges. 0 when g is
/// disconnected.
Poly first_symanzik_u(const FeynGraph& g);

/// calU = sum over spanning trees of the product of removed edges. Throws
/// Disconnected.
Poly first_symanzik_calu(const FeynGraph& g);

/// Tree-side F0 = sum over 2-forests of (in-forest product) * (-s).
Poly second_symanzik_f0(const FeynGraph& g);

/// calF0 = sum over 2-forests of (removed-edge product) * (-s).
Poly second_symanzik_calf0(const FeynGraph& g);

/// calF = calF0 + calU * sum(x_i m_i^2) over massive edges.
Poly full_f(const FeynGraph& g);

/// The raw forest sums behind the functions above, without the connectivity
/// precondition. On a disconnected graph the tree sums are 0 and the 2-forest
/// sums run over whatever spanning 2-forests exist; this matches what the
/// Laplacian determinants give for such graphs.
Poly tree_sum_calu(const FeynGraph& g);
Poly two_forest_sum_f0(const FeynGraph& g);
Poly two_forest_sum_calf0(const FeynGraph& g);

/// Sum over spanning 2-forests with vi, vj in one component and vk in the
/// other, of the product of removed edges.
Poly delta1(const FeynGraph& g, const std::string& vi, const std::string& vj, const std::string& vk);

/// calU(G) = calU(G/e) + x_e calU(G-e) and the same for calF0, checked
/// exactly. Throws NotRegularEdge for self-loops and bridges.
bool deletion_contraction_check(const FeynGraph& g, const std::string& edge_id);

}  // namespace symforge
