#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symforge/graph.hpp"
#include "symforge/poly.hpp"

namespace symforge {

/// Subset of the ground set, as ascending ground indices.
using EdgeSubset = std::vector<std::size_t>;

/// Orders subsets by size, then lexicographically.
struct SubsetOrder {
    bool operator()(const EdgeSubset& a, const EdgeSubset& b) const
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

using SubsetFamily = std::set<EdgeSubset, SubsetOrder>;

/// Cycle matroid: ground set = edges, bases = maximal acyclic edge sets.
struct CycleMatroid {
    std::vector<std::string> ground;  // edge ids in graph order
    std::vector<Atom> variables;      // variable of each ground element
    SubsetFamily bases;
    /// False when the source graph was disconnected: bases are then unions of
    /// spanning trees of the components rather than spanning trees.
    bool connected = true;

    std::size_t rank() const { return bases.empty() ? 0 : bases.begin()->size(); }
    std::string subset_to_string(const EdgeSubset& s) const;
};

/// Cycle matroid of g, computed on the skeleton without isolated vertices.
/// Legs play no part.
CycleMatroid cycle_matroid(const FeynGraph& g);

/// Every subset of some base.
SubsetFamily independent_sets(const CycleMatroid& m);

/// Base exchange: for bases B1 != B2 and e in B1 - B2 some f in B2 - B1
/// makes (B1 - e) + f a base. Exhaustive.
bool satisfies_base_exchange(const CycleMatroid& m);

/// Ground bijection (index in m1 -> index in m2) carrying bases onto bases,
/// lexicographically least; none if the matroids are not isomorphic.
std::optional<std::vector<std::size_t>> matroid_isomorphic(const CycleMatroid& m1, const CycleMatroid& m2);

/// U = sum over bases of the product of base variables.
Poly u_from_bases(const CycleMatroid& m);

struct WhitneyReport {
    FeynGraph result;
    std::optional<std::vector<std::size_t>> matroid_bijection;
    std::optional<VariableMap> u_bijection;

    /// Both bijections exist.
    bool consistent() const { return matroid_bijection.has_value() && u_bijection.has_value(); }
};

/// Applies the moves in order and compares the start and end graphs: cycle
/// matroids via matroid_isomorphic, base polynomials via
/// find_variable_isomorphism. Comparison is on the leg-free skeletons.
/// Throws InvalidMove from the first move that does not apply.
WhitneyReport whitney_equivalence_check(const FeynGraph& g, const std::vector<WhitneyMove>& moves);

/// Bounded search: every single valid move on g whose result is
/// isomorphic to h as a labelled graph. Not a decision procedure for
/// 2-isomorphism.
std::vector<WhitneyMove> find_single_moves(const FeynGraph& g, const FeynGraph& h);

}  // namespace symforge
