#include "symforge/matroid.hpp"

#include <algorithm>
#include <functional>

#include "symforge/detail/family_bijection.hpp"
#include "symforge/detail/union_find.hpp"

namespace symforge {

namespace {

/// Independence oracle: no subset of the edges closes a cycle.
bool is_independent(const FeynGraph& g, const EdgeSubset& s)
{
    detail::UnionFind uf(g.vertex_count());
    return std::all_of(s.begin(), s.end(), [&](std::size_t k) {
        return uf.unite(g.edges()[k].u, g.edges()[k].v);
    });
}

void collect_subsets(std::size_t n, std::size_t size, std::size_t start, EdgeSubset& current,
                     const std::function<void(const EdgeSubset&)>& visit)
{
    if (current.size() == size) {
        visit(current);
        return;
    }
    for (std::size_t k = start; k + (size - current.size()) <= n; ++k) {
        current.push_back(k);
        collect_subsets(n, size, k + 1, current, visit);
        current.pop_back();
    }
}

}  // namespace

std::string CycleMatroid::subset_to_string(const EdgeSubset& s) const
{
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        out += (k ? "," : "") + ground[s[k]];
    }
    return out + "}";
}

CycleMatroid cycle_matroid(const FeynGraph& g)
{
    const FeynGraph skeleton = strip_isolated_vertices(g);
    CycleMatroid m;
    for (const auto& e : skeleton.edges()) {
        m.ground.push_back(e.id);
        m.variables.push_back(e.var);
    }
    const auto components = skeleton.component_count();
    m.connected = components <= 1;
    const std::size_t rank = skeleton.vertex_count() - components;
    EdgeSubset current;
    collect_subsets(skeleton.edge_count(), rank, 0, current, [&](const EdgeSubset& s) {
        if (is_independent(skeleton, s)) {
            m.bases.insert(s);
        }
    });
    return m;
}

SubsetFamily independent_sets(const CycleMatroid& m)
{
    SubsetFamily out;
    for (const auto& base : m.bases) {
        const auto size = base.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << size); ++mask) {
            EdgeSubset s;
            for (std::size_t k = 0; k < size; ++k) {
                if (mask & (std::size_t{1} << k)) {
                    s.push_back(base[k]);
                }
            }
            out.insert(std::move(s));
        }
    }
    return out;
}

bool satisfies_base_exchange(const CycleMatroid& m)
{
    for (const auto& b1 : m.bases) {
        for (const auto& b2 : m.bases) {
            if (b1 == b2) {
                continue;
            }
            for (const auto e : b1) {
                if (std::binary_search(b2.begin(), b2.end(), e)) {
                    continue;
                }
                bool found = false;
                for (const auto f : b2) {
                    if (std::binary_search(b1.begin(), b1.end(), f)) {
                        continue;
                    }
                    EdgeSubset swapped;
                    for (const auto x : b1) {
                        if (x != e) {
                            swapped.push_back(x);
                        }
                    }
                    swapped.push_back(f);
                    std::sort(swapped.begin(), swapped.end());
                    if (m.bases.contains(swapped)) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> matroid_isomorphic(const CycleMatroid& m1, const CycleMatroid& m2)
{
    auto items = [](const CycleMatroid& m) {
        std::vector<detail::FamilyItem> out;
        for (const auto& base : m.bases) {
            detail::FamilyItem item;
            for (const auto k : base) {
                item.elements.emplace_back(static_cast<std::uint32_t>(k), 1);
            }
            out.push_back(std::move(item));
        }
        return out;
    };
    auto ground = [](const CycleMatroid& m) {
        std::vector<std::uint32_t> out(m.ground.size());
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = static_cast<std::uint32_t>(k);
        }
        return out;
    };
    const auto sigma = detail::find_family_bijection(ground(m1), items(m1), ground(m2), items(m2));
    if (!sigma) {
        return std::nullopt;
    }
    std::vector<std::size_t> out(m1.ground.size());
    for (const auto& [from, to] : *sigma) {
        out[from] = to;
    }
    return out;
}

Poly u_from_bases(const CycleMatroid& m)
{
    Poly out;
    for (const auto& base : m.bases) {
        std::vector<Monomial::Factor> factors;
        for (const auto k : base) {
            factors.emplace_back(m.variables[k], 1);
        }
        out += Poly(Monomial::from_factors(std::move(factors)), Integer(1));
    }
    return out;
}

WhitneyReport whitney_equivalence_check(const FeynGraph& g, const std::vector<WhitneyMove>& moves)
{
    WhitneyReport report;
    report.result = g;
    for (const auto& move : moves) {
        report.result = apply_whitney_move(report.result, move);
    }
    const auto before = cycle_matroid(g);
    const auto after = cycle_matroid(report.result);
    report.matroid_bijection = matroid_isomorphic(before, after);
    report.u_bijection = find_variable_isomorphism(u_from_bases(before), u_from_bases(after));
    return report;
}

std::vector<WhitneyMove> find_single_moves(const FeynGraph& g, const FeynGraph& h)
{
    std::vector<WhitneyMove> out;
    for (const auto& move : enumerate_whitney_moves(g)) {
        if (find_vertex_isomorphism(apply_whitney_move(g, move), h)) {
            out.push_back(move);
        }
    }
    return out;
}

}  // namespace symforge
