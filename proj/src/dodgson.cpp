#include "symforge/dodgson.hpp"

#include "symforge/forest.hpp"
#include "symforge/laplacian.hpp"

namespace symforge {

bool dodgson_determinant_check(const PolyMatrix& a, std::size_t i, std::size_t j)
{
    const auto n = static_cast<std::size_t>(a.rows());
    if (a.rows() != a.cols() || n < 2) {
        throw IndexError("Dodgson's relation needs a square matrix of dimension >= 2");
    }
    if (i == j || i >= n || j >= n) {
        throw IndexError("Dodgson's relation needs distinct in-range indices");
    }
    const std::size_t ri[] = {i};
    const std::size_t rj[] = {j};
    const std::size_t rij[] = {i, j};

    const Poly full = bareiss_determinant(a);
    const Poly both = minor_det(a, rij, rij);
    const Poly drop_i = minor_det(a, ri, ri);
    const Poly drop_j = minor_det(a, rj, rj);
    const Poly row_i_col_j = minor_det(a, ri, rj);
    const Poly row_j_col_i = minor_det(a, rj, ri);
    return full * both == drop_i * drop_j - row_i_col_j * row_j_col_i;
}

DodgsonSetup DodgsonSetup::make(const FeynGraph& g, const std::string& ea, const std::string& eb)
{
    if (ea == eb) {
        throw InvalidSetup("e_a and e_b must differ");
    }
    for (const auto* id : {&ea, &eb}) {
        if (!g.has_edge(*id)) {
            throw InvalidSetup("unknown edge '" + *id + "'");
        }
        if (!is_regular_edge(g, *id)) {
            throw InvalidSetup("edge '" + *id + "' is not regular");
        }
    }
    const auto& a = g.edges()[g.edge_index(ea)];
    const auto& b = g.edges()[g.edge_index(eb)];
    std::size_t shared = 0;
    std::size_t common = 0;
    for (const auto x : {a.u, a.v}) {
        if (b.touches(x)) {
            ++shared;
            common = x;
        }
    }
    if (shared != 1) {
        throw InvalidSetup("'" + ea + "' and '" + eb + "' must share exactly one vertex");
    }
    const auto other_a = a.u == common ? a.v : a.u;
    const auto other_b = b.u == common ? b.v : b.u;
    const auto& names = g.vertices();
    return DodgsonSetup{g, ea, eb, names[other_a], names[other_b], names[common]};
}

std::vector<DodgsonSetup> enumerate_dodgson_setups(const FeynGraph& g)
{
    std::vector<DodgsonSetup> out;
    for (std::size_t a = 0; a < g.edge_count(); ++a) {
        for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
            try {
                out.push_back(DodgsonSetup::make(g, g.edges()[a].id, g.edges()[b].id));
            } catch (const InvalidSetup&) {
            }
        }
    }
    return out;
}

DodgsonMinors dodgson_minors(const DodgsonSetup& s)
{
    const auto& g = s.graph;
    const auto ga = contract_edge(g, s.ea);
    const auto gb = contract_edge(g, s.eb);
    return DodgsonMinors{
        delete_edge(ga, s.eb),
        delete_edge(gb, s.ea),
        delete_edge(delete_edge(g, s.ea), s.eb),
        contract_edge(ga, s.eb),
    };
}

namespace {

Poly edge_pair_product(const DodgsonSetup& s)
{
    const auto& g = s.graph;
    return Poly(g.edges()[g.edge_index(s.ea)].var) * Poly(g.edges()[g.edge_index(s.eb)].var);
}

}  // namespace

DodgsonUResult dodgson_u_identity(const DodgsonSetup& s)
{
    const auto m = dodgson_minors(s);
    DodgsonUResult out;
    out.lhs = tree_sum_calu(m.contract_a_delete_b) * tree_sum_calu(m.contract_b_delete_a) -
              tree_sum_calu(m.delete_both) * tree_sum_calu(m.contract_both);
    out.delta1_quotient = exact_div(delta1(s.graph, s.vi, s.vj, s.vk), edge_pair_product(s));
    out.holds = out.lhs == out.delta1_quotient * out.delta1_quotient;
    return out;
}

DodgsonMixedResult dodgson_mixed_identity(const DodgsonSetup& s)
{
    DodgsonMixedResult out;
    if (s.graph.legs().empty()) {
        out.holds = true;
        return out;
    }
    const auto m = dodgson_minors(s);
    const Poly u_ab = tree_sum_calu(m.contract_a_delete_b);
    const Poly u_ba = tree_sum_calu(m.contract_b_delete_a);
    const Poly u_del = tree_sum_calu(m.delete_both);
    const Poly u_con = tree_sum_calu(m.contract_both);
    const Poly f_ab = two_forest_sum_calf0(m.contract_a_delete_b);
    const Poly f_ba = two_forest_sum_calf0(m.contract_b_delete_a);
    const Poly f_del = two_forest_sum_calf0(m.delete_both);
    const Poly f_con = two_forest_sum_calf0(m.contract_both);
    out.lhs = u_ab * f_ba - u_del * f_con + f_ab * u_ba - f_del * u_con;

    const Poly d1 = delta1(s.graph, s.vi, s.vj, s.vk);
    if (d1.is_zero()) {
        throw DegenerateDelta1();
    }
    const Poly xab = edge_pair_product(s);
    const Poly q1 = exact_div(d1, xab);
    try {
        out.delta2_quotient = exact_div(out.lhs, Integer(2) * q1);
    } catch (const NotDivisible&) {
        out.holds = false;
        return out;
    }
    const auto vars = s.graph.feyn_indices();
    out.holds = is_multilinear(out.delta2_quotient * xab, vars);
    return out;
}

}  // namespace symforge
