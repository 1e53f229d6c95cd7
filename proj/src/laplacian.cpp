#include "symforge/laplacian.hpp"

#include "symforge/forest.hpp"

namespace symforge {

LaplacianMatrix build_laplacian(const FeynGraph& g, VariableSource source)
{
    const FeynGraph& h = source == VariableSource::extended_vars ? extend_with_external_vertices(g) : g;
    LaplacianMatrix l;
    l.vertex_order = h.vertices();
    const auto r = static_cast<Eigen::Index>(h.vertex_count());
    l.entries = PolyMatrix::Constant(r, r, Poly{});
    for (const auto& e : h.edges()) {
        if (e.is_self_loop()) {
            continue;
        }
        const Poly x(e.var);
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        l.entries(u, u) += x;
        l.entries(v, v) += x;
        l.entries(u, v) -= x;
        l.entries(v, u) -= x;
    }
    return l;
}

Poly minor_det(const PolyMatrix& m, std::span<const std::size_t> removed_rows,
               std::span<const std::size_t> removed_cols)
{
    const PolyMatrix sub = minor_matrix(m, removed_rows, removed_cols);
    if (sub.rows() != sub.cols()) {
        throw IndexError("minor is not square");
    }
    Poly det = bareiss_determinant(sub);
    if (sub.rows() <= 4 && det != cofactor_determinant(sub)) {
        throw std::logic_error("minor_det: elimination and cofactor expansion disagree");
    }
    return det;
}

Poly minor_det(const LaplacianMatrix& l, std::span<const std::size_t> removed_rows,
               std::span<const std::size_t> removed_cols)
{
    return minor_det(l.entries, removed_rows, removed_cols);
}

Poly principal_minor_det(const LaplacianMatrix& l, std::size_t i)
{
    const std::size_t removed[] = {i};
    return minor_det(l, removed, removed);
}

bool matrix_tree_check(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    const auto u = first_symanzik_u(g);
    const auto l = build_laplacian(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (principal_minor_det(l, i) != u) {
            return false;
        }
    }
    return true;
}

Poly w_polynomial(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    if (g.legs().empty()) {
        throw NoLegs();
    }
    const auto l = build_laplacian(g, VariableSource::extended_vars);
    std::vector<std::size_t> external;
    for (std::size_t k = g.vertex_count(); k < static_cast<std::size_t>(l.dim()); ++k) {
        external.push_back(k);
    }
    return minor_det(l, external, external);
}

Poly f0_from_w(const FeynGraph& g, const Poly& w)
{
    const auto grades = grade_by_leg_degree(w);
    if (grades.size() < 3) {
        return {};
    }
    const MomentumBasis basis(g);
    Poly out;
    for (const auto& [m, c] : grades[2].terms()) {
        std::vector<std::uint32_t> legs;
        std::vector<Monomial::Factor> rest;
        for (const auto& [atom, power] : m.factors()) {
            if (atom.is_leg()) {
                legs.insert(legs.end(), power, atom.i);
            } else {
                rest.emplace_back(atom, power);
            }
        }
        out += Poly(Monomial::from_factors(std::move(rest)), c) * basis.product(legs[0], legs[1]);
    }
    return out;
}

WExpansionReport w_expansion_check(const FeynGraph& g)
{
    const auto w = w_polynomial(g);
    WExpansionReport report;
    report.grades = grade_by_leg_degree(w);
    report.grades.resize(std::max<std::size_t>(report.grades.size(), 3));

    Poly z_sum;
    for (const auto& leg : g.legs()) {
        z_sum += Poly::z(leg.momentum);
    }
    report.w0_zero = report.grades[0].is_zero();
    report.w1_matches = report.grades[1] == first_symanzik_u(g) * z_sum;
    report.f0_from_w = f0_from_w(g, w);
    report.w2_matches_f0 = report.f0_from_w == second_symanzik_f0(g);
    return report;
}

}  // namespace symforge
