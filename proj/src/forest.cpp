#include "symforge/forest.hpp"

#include <algorithm>

#include "symforge/detail/union_find.hpp"

namespace symforge {

bool SpanningForest::contains(std::size_t edge) const
{
    return std::binary_search(edges.begin(), edges.end(), edge);
}

std::vector<SpanningForest> enumerate_spanning_forests(const FeynGraph& g, std::size_t k)
{
    const std::size_t r = g.vertex_count();
    const std::size_t n = g.edge_count();
    std::vector<SpanningForest> out;
    if (k < 1 || k > r || r - k > n) {
        return out;
    }
    const std::size_t size = r - k;

    // Walk all size-subsets of edge indices in lexicographic order.
    std::vector<std::size_t> pick(size);
    for (std::size_t t = 0; t < size; ++t) {
        pick[t] = t;
    }
    while (true) {
        detail::UnionFind uf(r);
        bool acyclic = true;
        for (const auto idx : pick) {
            const auto& e = g.edges()[idx];
            if (!uf.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
        }
        if (acyclic) {
            SpanningForest f;
            f.edges = pick;
            f.component.resize(r);
            std::map<std::size_t, std::size_t> root_label;
            for (std::size_t w = 0; w < r; ++w) {
                auto [it, inserted] = root_label.try_emplace(uf.find(w), root_label.size());
                f.component[w] = it->second;
            }
            f.component_count = root_label.size();
            out.push_back(std::move(f));
        }
        // Next combination.
        std::size_t t = size;
        while (t > 0 && pick[t - 1] == n - size + t - 1) {
            --t;
        }
        if (t == 0) {
            break;
        }
        ++pick[t - 1];
        for (std::size_t s = t; s < size; ++s) {
            pick[s] = pick[s - 1] + 1;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kinematics

MomentumBasis::MomentumBasis(std::vector<std::uint32_t> momenta) : momenta_(std::move(momenta))
{
    std::sort(momenta_.begin(), momenta_.end());
    momenta_.erase(std::unique(momenta_.begin(), momenta_.end()), momenta_.end());
}

MomentumBasis::MomentumBasis(const FeynGraph& g)
    : MomentumBasis([&] {
          std::vector<std::uint32_t> m;
          for (const auto& l : g.legs()) {
              m.push_back(l.momentum);
          }
          return m;
      }())
{
}

std::map<std::uint32_t, long> MomentumBasis::reduce(const std::map<std::uint32_t, long>& combination) const
{
    std::map<std::uint32_t, long> out;
    if (momenta_.empty()) {
        return out;
    }
    const auto last = momenta_.back();
    for (const auto& [j, c] : combination) {
        if (!std::binary_search(momenta_.begin(), momenta_.end(), j)) {
            throw PreconditionError("momentum p" + std::to_string(j) + " is not an external momentum");
        }
        if (j == last) {
            for (std::size_t t = 0; t + 1 < momenta_.size(); ++t) {
                out[momenta_[t]] -= c;
            }
        } else {
            out[j] += c;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Poly MomentumBasis::product(std::uint32_t i, std::uint32_t j) const
{
    const auto a = reduce({{i, 1}});
    const auto b = reduce({{j, 1}});
    Poly out;
    for (const auto& [ia, ca] : a) {
        for (const auto& [ib, cb] : b) {
            out += Poly(Monomial(Atom::dot(ia, ib)), Integer(ca) * cb);
        }
    }
    return out;
}

Poly MomentumBasis::square(const std::map<std::uint32_t, long>& combination) const
{
    const auto c = reduce(combination);
    Poly out;
    for (const auto& [i, ci] : c) {
        for (const auto& [j, cj] : c) {
            out += Poly(Monomial(Atom::dot(i, j)), Integer(ci) * cj);
        }
    }
    return out;
}

KinematicInvariant kinematic_invariant(const FeynGraph& g, const SpanningForest& f, std::optional<std::size_t> side)
{
    if (f.component_count != 2 || f.component.size() != g.vertex_count()) {
        throw PreconditionError("kinematic_invariant needs a spanning 2-forest of the graph");
    }
    if (g.legs().empty()) {
        return {};
    }
    std::size_t chosen = 0;
    if (side) {
        chosen = *side;
    } else {
        const auto last = std::max_element(g.legs().begin(), g.legs().end(),
                                           [](const Leg& a, const Leg& b) { return a.momentum < b.momentum; });
        chosen = 1 - f.component[last->vertex];
    }
    std::map<std::uint32_t, long> flow;
    for (const auto& l : g.legs()) {
        if (f.component[l.vertex] == chosen) {
            flow[l.momentum] += 1;
        }
    }
    return {MomentumBasis(g).square(flow)};
}

// ---------------------------------------------------------------------------
// Symanzik polynomials

namespace {

Monomial edge_product(const FeynGraph& g, const SpanningForest& f, bool in_forest)
{
    std::vector<Monomial::Factor> factors;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        if (f.contains(k) == in_forest) {
            factors.emplace_back(g.edges()[k].var, 1);
        }
    }
    return Monomial::from_factors(std::move(factors));
}

Poly tree_sum(const FeynGraph& g, bool in_forest)
{
    Poly out;
    for (const auto& t : enumerate_spanning_forests(g, 1)) {
        out += Poly(edge_product(g, t, in_forest), Integer(1));
    }
    return out;
}

Poly two_forest_sum(const FeynGraph& g, bool in_forest)
{
    Poly out;
    if (g.legs().empty()) {
        return out;
    }
    for (const auto& f : enumerate_spanning_forests(g, 2)) {
        const auto s = kinematic_invariant(g, f).expansion;
        out -= Poly(edge_product(g, f, in_forest), Integer(1)) * s;
    }
    return out;
}

void require_connected(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
}

}  // namespace

Poly tree_sum_calu(const FeynGraph& g) { return tree_sum(g, false); }
Poly two_forest_sum_f0(const FeynGraph& g) { return two_forest_sum(g, true); }
Poly two_forest_sum_calf0(const FeynGraph& g) { return two_forest_sum(g, false); }

Poly first_symanzik_u(const FeynGraph& g) { return tree_sum(g, true); }

Poly first_symanzik_calu(const FeynGraph& g)
{
    require_connected(g);
    return tree_sum_calu(g);
}

Poly second_symanzik_f0(const FeynGraph& g)
{
    require_connected(g);
    return two_forest_sum_f0(g);
}

Poly second_symanzik_calf0(const FeynGraph& g)
{
    require_connected(g);
    return two_forest_sum_calf0(g);
}

Poly full_f(const FeynGraph& g)
{
    const Poly calu = first_symanzik_calu(g);
    Poly mass_term;
    for (const auto& [edge_id, index] : g.masses()) {
        mass_term += Poly(g.edges()[g.edge_index(edge_id)].var) * Poly::msq(index);
    }
    return second_symanzik_calf0(g) + calu * mass_term;
}

Poly delta1(const FeynGraph& g, const std::string& vi, const std::string& vj, const std::string& vk)
{
    const auto i = g.vertex_index(vi);
    const auto j = g.vertex_index(vj);
    const auto k = g.vertex_index(vk);
    if (i == j || j == k || i == k) {
        throw PreconditionError("delta1 needs three distinct vertices");
    }
    require_connected(g);
    Poly out;
    for (const auto& f : enumerate_spanning_forests(g, 2)) {
        if (f.component[i] == f.component[j] && f.component[i] != f.component[k]) {
            out += Poly(edge_product(g, f, false), Integer(1));
        }
    }
    return out;
}

bool deletion_contraction_check(const FeynGraph& g, const std::string& edge_id)
{
    if (!is_regular_edge(g, edge_id)) {
        throw NotRegularEdge(edge_id);
    }
    const Poly x(g.edges()[g.edge_index(edge_id)].var);
    const auto contracted = contract_edge(g, edge_id);
    const auto deleted = delete_edge(g, edge_id);
    const bool u_holds = tree_sum_calu(g) == tree_sum_calu(contracted) + x * tree_sum_calu(deleted);
    const bool f_holds =
        two_forest_sum_calf0(g) == two_forest_sum_calf0(contracted) + x * two_forest_sum_calf0(deleted);
    return u_holds && f_holds;
}

}  // namespace symforge
