#pragma once

#include <span>
#include <string>
#include <vector>

#include "symforge/determinant.hpp"
#include "symforge/graph.hpp"

namespace symforge {

/// Vertex-indexed Laplacian over the polynomial ring. Row k belongs to
/// vertex_order[k], which follows the graph's vertex list.
struct LaplacianMatrix {
    PolyMatrix entries;
    std::vector<std::string> vertex_order;

    Eigen::Index dim() const { return entries.rows(); }
};

enum class VariableSource {
    edge_vars,      // the graph as given
    extended_vars,  // the extended graph with leg edges carrying z_j
};

/// L_ii = sum of the variables of non-loop edges at v_i; L_ij = minus the sum
/// over edges joining v_i and v_j. Self-loops never enter.
LaplacianMatrix build_laplacian(const FeynGraph& g, VariableSource source = VariableSource::edge_vars);

/// Determinant of the minor with the given (0-based) rows and columns
/// removed. Fraction-free elimination; for results of dimension <= 4 the
/// value is cross-checked by cofactor expansion.
Poly minor_det(const PolyMatrix& m, std::span<const std::size_t> removed_rows,
               std::span<const std::size_t> removed_cols);
Poly minor_det(const LaplacianMatrix& l, std::span<const std::size_t> removed_rows,
               std::span<const std::size_t> removed_cols);

/// det L[i] for vertex index i.
Poly principal_minor_det(const LaplacianMatrix& l, std::size_t i);

/// det L[i] == U for every vertex i. Throws Disconnected.
bool matrix_tree_check(const FeynGraph& g);

/// det of the Laplacian of the extended graph with the external-vertex rows
/// and columns removed. Throws Disconnected or NoLegs.
Poly w_polynomial(const FeynGraph& g);

/// Grade-2 part of W with z_i z_j replaced by the reduced p_i . p_j.
Poly f0_from_w(const FeynGraph& g, const Poly& w);

struct WExpansionReport {
    bool w0_zero = false;
    bool w1_matches = false;
    bool w2_matches_f0 = false;
    std::vector<Poly> grades;  // W split by leg degree; grades >= 3 are not checked
    Poly f0_from_w;

    bool all() const { return w0_zero && w1_matches && w2_matches_f0; }
};

/// W^(0) == 0, W^(1) == U * sum(z_j), W^(2) -> F0 from the forest route.
WExpansionReport w_expansion_check(const FeynGraph& g);

}  // namespace symforge
