#include "symforge/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "symforge/detail/union_find.hpp"

namespace symforge {

// ---------------------------------------------------------------------------
// FeynGraph

std::size_t FeynGraph::add_vertex(const std::string& id)
{
    if (has_vertex(id)) {
        throw PreconditionError("duplicate vertex '" + id + "'");
    }
    vertices_.push_back(id);
    return vertices_.size() - 1;
}

void FeynGraph::add_edge(const std::string& id, const std::string& u, const std::string& v, std::uint32_t feyn_index)
{
    if (has_edge(id)) {
        throw PreconditionError("duplicate edge '" + id + "'");
    }
    if (feyn_index == 0) {
        throw PreconditionError("edge '" + id + "': Feynman index must be positive");
    }
    for (const auto& e : edges_) {
        if (e.var == Atom::feyn(feyn_index)) {
            throw PreconditionError("Feynman index " + std::to_string(feyn_index) + " used twice");
        }
    }
    edges_.push_back(Edge{id, vertex_index(u), vertex_index(v), Atom::feyn(feyn_index)});
}

void FeynGraph::add_leg(std::uint32_t momentum, const std::string& vertex)
{
    if (momentum == 0) {
        throw PreconditionError("leg momentum index must be positive");
    }
    for (const auto& l : legs_) {
        if (l.momentum == momentum) {
            throw PreconditionError("momentum index " + std::to_string(momentum) + " used twice");
        }
    }
    legs_.push_back(Leg{momentum, vertex_index(vertex)});
}

void FeynGraph::set_mass(const std::string& edge_id, std::uint32_t mass_index)
{
    edge_index(edge_id);
    if (mass_index == 0) {
        throw PreconditionError("mass index must be positive");
    }
    masses_[edge_id] = mass_index;
}

std::size_t FeynGraph::vertex_index(const std::string& id) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), id);
    if (it == vertices_.end()) {
        throw UnknownVertex(id);
    }
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t FeynGraph::edge_index(const std::string& id) const
{
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
    if (it == edges_.end()) {
        throw UnknownEdge(id);
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

bool FeynGraph::has_vertex(const std::string& id) const
{
    return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

bool FeynGraph::has_edge(const std::string& id) const
{
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

std::vector<std::uint32_t> FeynGraph::feyn_indices() const
{
    std::vector<std::uint32_t> out;
    for (const auto& e : edges_) {
        if (e.var.is_feyn()) {
            out.push_back(e.var.i);
        }
    }
    return out;
}

std::size_t FeynGraph::component_count() const
{
    detail::UnionFind uf(vertices_.size());
    for (const auto& e : edges_) {
        uf.unite(e.u, e.v);
    }
    return uf.set_count();
}

long FeynGraph::loop_number() const
{
    return static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) +
           static_cast<long>(component_count());
}

std::string FeynGraph::fresh_vertex_id(const std::string& base) const
{
    std::string id = base;
    while (has_vertex(id)) {
        id += '\'';
    }
    return id;
}

// ---------------------------------------------------------------------------
// Low-level edits shared by minors and moves

struct GraphEditor {
    /// Merges `drop` into `keep` and removes `drop` from the vertex list.
    static void merge_vertices(FeynGraph& g, std::size_t keep, std::size_t drop)
    {
        auto reindex = [&](std::size_t x) {
            if (x == drop) {
                x = keep;
            }
            return x > drop ? x - 1 : x;
        };
        for (auto& e : g.edges_) {
            e.u = reindex(e.u);
            e.v = reindex(e.v);
        }
        for (auto& l : g.legs_) {
            l.vertex = reindex(l.vertex);
        }
        if (drop >= g.vertices_.size() - g.external_count_) {
            --g.external_count_;
        }
        g.vertices_.erase(g.vertices_.begin() + static_cast<std::ptrdiff_t>(drop));
    }

    static void erase_edge(FeynGraph& g, std::size_t index)
    {
        g.masses_.erase(g.edges_[index].id);
        g.edges_.erase(g.edges_.begin() + static_cast<std::ptrdiff_t>(index));
    }

    static std::vector<Edge>& edges(FeynGraph& g) { return g.edges_; }

    static std::size_t append_vertex(FeynGraph& g, const std::string& id)
    {
        g.vertices_.push_back(id);
        return g.vertices_.size() - 1;
    }

    static std::string fresh_vertex_id(const FeynGraph& g, const std::string& base) { return g.fresh_vertex_id(base); }
};

FeynGraph delete_edge(const FeynGraph& g, const std::string& edge_id)
{
    const auto index = g.edge_index(edge_id);
    FeynGraph out = g;
    GraphEditor::erase_edge(out, index);
    return out;
}

FeynGraph contract_edge(const FeynGraph& g, const std::string& edge_id)
{
    const auto index = g.edge_index(edge_id);
    const Edge e = g.edges()[index];
    if (e.is_self_loop()) {
        throw SelfLoopContraction(edge_id);
    }
    FeynGraph out = g;
    GraphEditor::erase_edge(out, index);
    GraphEditor::merge_vertices(out, std::min(e.u, e.v), std::max(e.u, e.v));
    return out;
}

bool is_bridge(const FeynGraph& g, const std::string& edge_id)
{
    const auto index = g.edge_index(edge_id);
    if (g.edges()[index].is_self_loop()) {
        return false;
    }
    return delete_edge(g, edge_id).component_count() > g.component_count();
}

bool is_regular_edge(const FeynGraph& g, const std::string& edge_id)
{
    const auto index = g.edge_index(edge_id);
    return !g.edges()[index].is_self_loop() && !is_bridge(g, edge_id);
}

FeynGraph extend_with_external_vertices(const FeynGraph& g)
{
    FeynGraph out = g;
    out.legs_.clear();
    for (const auto& leg : g.legs()) {
        const auto ext = GraphEditor::append_vertex(out, out.fresh_vertex_id("ext" + std::to_string(leg.momentum)));
        std::string id = "leg" + std::to_string(leg.momentum);
        while (out.has_edge(id)) {
            id += '\'';
        }
        out.edges_.push_back(Edge{id, leg.vertex, ext, Atom::leg(leg.momentum)});
        ++out.external_count_;
    }
    return out;
}

FeynGraph strip_isolated_vertices(const FeynGraph& g)
{
    FeynGraph out = g;
    for (std::size_t w = out.vertex_count(); w-- > 0;) {
        const bool used =
            std::any_of(out.edges_.begin(), out.edges_.end(), [w](const Edge& e) { return e.touches(w); }) ||
            std::any_of(out.legs_.begin(), out.legs_.end(), [w](const Leg& l) { return l.vertex == w; });
        if (used) {
            continue;
        }
        for (auto& e : out.edges_) {
            e.u -= e.u > w ? 1 : 0;
            e.v -= e.v > w ? 1 : 0;
        }
        for (auto& l : out.legs_) {
            l.vertex -= l.vertex > w ? 1 : 0;
        }
        if (w >= out.vertices_.size() - out.external_count_) {
            --out.external_count_;
        }
        out.vertices_.erase(out.vertices_.begin() + static_cast<std::ptrdiff_t>(w));
    }
    return out;
}

std::vector<std::size_t> component_labels(const FeynGraph& g)
{
    detail::UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) {
        uf.unite(e.u, e.v);
    }
    std::vector<std::size_t> label(g.vertex_count());
    std::map<std::size_t, std::size_t> root_label;
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        auto [it, inserted] = root_label.try_emplace(uf.find(w), root_label.size());
        label[w] = it->second;
    }
    return label;
}

std::vector<std::vector<std::size_t>> connected_components(const FeynGraph& g)
{
    const auto label = component_labels(g);
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t w = 0; w < label.size(); ++w) {
        if (label[w] >= parts.size()) {
            parts.resize(label[w] + 1);
        }
        parts[label[w]].push_back(w);
    }
    return parts;
}

// ---------------------------------------------------------------------------
// Whitney moves

namespace {

std::string join(const std::vector<std::string>& items)
{
    std::string out;
    for (const auto& s : items) {
        out += (out.empty() ? "" : ",") + s;
    }
    return out;
}

std::set<std::size_t> edge_set(const FeynGraph& g, const std::vector<std::string>& ids, const char* what)
{
    std::set<std::size_t> out;
    for (const auto& id : ids) {
        if (!g.has_edge(id)) {
            throw InvalidMove(std::string(what) + " names unknown edge '" + id + "'");
        }
        if (!out.insert(g.edge_index(id)).second) {
            throw InvalidMove(std::string(what) + " lists edge '" + id + "' twice");
        }
    }
    return out;
}

std::size_t existing_vertex(const FeynGraph& g, const std::string& id)
{
    if (!g.has_vertex(id)) {
        throw InvalidMove("unknown vertex '" + id + "'");
    }
    return g.vertex_index(id);
}

bool has_leg_at(const FeynGraph& g, std::size_t w)
{
    return std::any_of(g.legs().begin(), g.legs().end(), [w](const Leg& l) { return l.vertex == w; });
}

/// Groups the edges at w into blocks that must move together when w is
/// cleaved: one group per component of G - w, one per self-loop.
std::vector<std::vector<std::size_t>> cleave_units(const FeynGraph& g, std::size_t w)
{
    detail::UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (!e.touches(w)) {
            uf.unite(e.u, e.v);
        }
    }
    std::vector<std::vector<std::size_t>> units;
    std::map<std::size_t, std::size_t> unit_of_root;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        if (!e.touches(w)) {
            continue;
        }
        if (e.is_self_loop()) {
            units.push_back({k});
            continue;
        }
        const auto other = e.u == w ? e.v : e.u;
        auto [it, inserted] = unit_of_root.try_emplace(uf.find(other), units.size());
        if (inserted) {
            units.emplace_back();
        }
        units[it->second].push_back(k);
    }
    return units;
}

/// Groups all edges into blocks separated by {u, v}: one per component of
/// G - {u, v} (with its attaching edges), one per edge joining u and v or
/// looping at u or v.
std::vector<std::vector<std::size_t>> twist_units(const FeynGraph& g, std::size_t u, std::size_t v)
{
    auto at_pair = [&](std::size_t x) { return x == u || x == v; };
    detail::UnionFind uf(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (!at_pair(e.u) && !at_pair(e.v)) {
            uf.unite(e.u, e.v);
        }
    }
    std::vector<std::vector<std::size_t>> units;
    std::map<std::size_t, std::size_t> unit_of_root;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        if (at_pair(e.u) && at_pair(e.v)) {
            units.push_back({k});
            continue;
        }
        const auto inner = at_pair(e.u) ? e.v : e.u;
        auto [it, inserted] = unit_of_root.try_emplace(uf.find(inner), units.size());
        if (inserted) {
            units.emplace_back();
        }
        units[it->second].push_back(k);
    }
    return units;
}

void validate_identify(const FeynGraph& g, const IdentifyMove& m)
{
    const auto u = existing_vertex(g, m.u);
    const auto v = existing_vertex(g, m.v);
    const auto label = component_labels(g);
    if (label[u] == label[v]) {
        throw InvalidMove("'" + m.u + "' and '" + m.v + "' lie in the same component");
    }
}

void validate_cleave(const FeynGraph& g, const CleaveMove& m)
{
    const auto w = existing_vertex(g, m.w);
    if (has_leg_at(g, w)) {
        throw InvalidMove("ambiguous leg at '" + m.w + "'");
    }
    if (!m.new_vertex.empty() && g.has_vertex(m.new_vertex)) {
        throw InvalidMove("vertex '" + m.new_vertex + "' already exists");
    }
    const auto part = edge_set(g, m.part, "cleave part");
    if (part.empty()) {
        throw InvalidMove("cleave part is empty");
    }
    for (const auto k : part) {
        if (!g.edges()[k].touches(w)) {
            throw InvalidMove("edge '" + g.edges()[k].id + "' is not incident to '" + m.w + "'");
        }
    }
    const auto units = cleave_units(g, w);
    if (units.size() < 2) {
        throw InvalidMove("'" + m.w + "' is not a cut vertex");
    }
    std::size_t moved = 0;
    for (const auto& unit : units) {
        const auto inside = std::count_if(unit.begin(), unit.end(), [&](std::size_t k) { return part.contains(k); });
        if (inside != 0 && static_cast<std::size_t>(inside) != unit.size()) {
            throw InvalidMove("edge partition at '" + m.w + "' splits a component of G - " + m.w);
        }
        moved += inside != 0 ? 1 : 0;
    }
    if (moved == units.size()) {
        throw InvalidMove("cleave part takes every edge at '" + m.w + "'");
    }
}

void validate_twist(const FeynGraph& g, const TwistMove& m)
{
    const auto u = existing_vertex(g, m.u);
    const auto v = existing_vertex(g, m.v);
    if (u == v) {
        throw InvalidMove("twist needs two distinct vertices");
    }
    if (has_leg_at(g, u) || has_leg_at(g, v)) {
        throw InvalidMove("ambiguous leg at a twist vertex");
    }
    const auto side = edge_set(g, m.side, "twist side");
    if (side.empty() || side.size() == g.edge_count()) {
        throw InvalidMove("twist side must be a nonempty proper edge subset");
    }
    std::set<std::size_t> side_inner;
    std::set<std::size_t> rest_inner;
    bool side_u = false, side_v = false, rest_u = false, rest_v = false;
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        const bool in_side = side.contains(k);
        for (const auto x : {e.u, e.v}) {
            if (x == u) {
                (in_side ? side_u : rest_u) = true;
            } else if (x == v) {
                (in_side ? side_v : rest_v) = true;
            } else {
                (in_side ? side_inner : rest_inner).insert(x);
            }
        }
    }
    if (!(side_u && side_v && rest_u && rest_v)) {
        throw InvalidMove("both sides must meet '" + m.u + "' and '" + m.v + "'");
    }
    for (const auto x : side_inner) {
        if (rest_inner.contains(x)) {
            throw InvalidMove("{" + m.u + ", " + m.v + "} is not a 2-separation for the given side");
        }
    }
}

}  // namespace

std::string to_string(const WhitneyMove& m)
{
    return std::visit(
        [](const auto& mv) -> std::string {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, IdentifyMove>) {
                return "identify(" + mv.u + "," + mv.v + ")";
            } else if constexpr (std::is_same_v<T, CleaveMove>) {
                return "cleave(" + mv.w + ";" + join(mv.part) + ")";
            } else {
                return "twist(" + mv.u + "," + mv.v + ";" + join(mv.side) + ")";
            }
        },
        m);
}

void validate_move(const FeynGraph& g, const WhitneyMove& m)
{
    std::visit(
        [&](const auto& mv) {
            using T = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<T, IdentifyMove>) {
                validate_identify(g, mv);
            } else if constexpr (std::is_same_v<T, CleaveMove>) {
                validate_cleave(g, mv);
            } else {
                validate_twist(g, mv);
            }
        },
        m);
}

FeynGraph apply_whitney_move(const FeynGraph& g, const WhitneyMove& m)
{
    validate_move(g, m);
    FeynGraph out = g;
    if (const auto* id = std::get_if<IdentifyMove>(&m)) {
        // The merged vertex keeps u's name and position.
        GraphEditor::merge_vertices(out, g.vertex_index(id->u), g.vertex_index(id->v));
    } else if (const auto* cl = std::get_if<CleaveMove>(&m)) {
        const auto w = g.vertex_index(cl->w);
        const auto fresh = GraphEditor::append_vertex(
            out, cl->new_vertex.empty() ? GraphEditor::fresh_vertex_id(g, cl->w + "'") : cl->new_vertex);
        for (const auto k : edge_set(g, cl->part, "cleave part")) {
            auto& e = GraphEditor::edges(out)[k];
            e.u = e.u == w ? fresh : e.u;
            e.v = e.v == w ? fresh : e.v;
        }
    } else {
        const auto& tw = std::get<TwistMove>(m);
        const auto u = g.vertex_index(tw.u);
        const auto v = g.vertex_index(tw.v);
        auto swap_uv = [&](std::size_t x) { return x == u ? v : (x == v ? u : x); };
        for (const auto k : edge_set(g, tw.side, "twist side")) {
            auto& e = GraphEditor::edges(out)[k];
            e.u = swap_uv(e.u);
            e.v = swap_uv(e.v);
        }
    }
    return out;
}

std::vector<WhitneyMove> enumerate_whitney_moves(const FeynGraph& g)
{
    constexpr std::size_t max_units = 12;
    std::vector<WhitneyMove> moves;
    const auto label = component_labels(g);
    const auto& names = g.vertices();
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
            if (label[u] != label[v]) {
                moves.emplace_back(IdentifyMove{names[u], names[v]});
            }
        }
    }
    auto ids_of = [&](const std::vector<std::vector<std::size_t>>& units, std::size_t mask) {
        std::vector<std::size_t> chosen;
        for (std::size_t k = 0; k < units.size(); ++k) {
            if (mask & (std::size_t{1} << k)) {
                chosen.insert(chosen.end(), units[k].begin(), units[k].end());
            }
        }
        std::sort(chosen.begin(), chosen.end());
        std::vector<std::string> ids;
        for (const auto k : chosen) {
            ids.push_back(g.edges()[k].id);
        }
        return ids;
    };
    for (std::size_t w = 0; w < g.vertex_count(); ++w) {
        const auto units = cleave_units(g, w);
        if (units.size() < 2 || units.size() > max_units || has_leg_at(g, w)) {
            continue;
        }
        // Unit 0 always stays at w, so each split is listed once.
        for (std::size_t mask = 2; mask < (std::size_t{1} << units.size()); mask += 2) {
            moves.emplace_back(CleaveMove{names[w], ids_of(units, mask), ""});
        }
    }
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = u + 1; v < g.vertex_count(); ++v) {
            if (has_leg_at(g, u) || has_leg_at(g, v)) {
                continue;
            }
            const auto units = twist_units(g, u, v);
            if (units.size() < 2 || units.size() > max_units) {
                continue;
            }
            for (std::size_t mask = 2; mask < (std::size_t{1} << units.size()); mask += 2) {
                WhitneyMove candidate = TwistMove{names[u], names[v], ids_of(units, mask)};
                try {
                    validate_move(g, candidate);
                    moves.push_back(std::move(candidate));
                } catch (const InvalidMove&) {
                }
            }
        }
    }
    return moves;
}

// ---------------------------------------------------------------------------
// Labelled isomorphism

std::optional<std::vector<std::size_t>> find_vertex_isomorphism(const FeynGraph& g, const FeynGraph& h)
{
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
        g.legs().size() != h.legs().size() || g.masses() != h.masses()) {
        return std::nullopt;
    }
    std::vector<std::size_t> partner(g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        if (!h.has_edge(e.id)) {
            return std::nullopt;
        }
        partner[k] = h.edge_index(e.id);
        const auto& f = h.edges()[partner[k]];
        if (f.var != e.var || f.is_self_loop() != e.is_self_loop()) {
            return std::nullopt;
        }
    }
    auto profile = [](const FeynGraph& x) {
        std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> p(x.vertex_count());
        for (const auto& e : x.edges()) {
            ++p[e.u].first;
            ++p[e.v].first;
        }
        for (const auto& l : x.legs()) {
            p[l.vertex].second.push_back(l.momentum);
        }
        for (auto& [deg, legs] : p) {
            std::sort(legs.begin(), legs.end());
        }
        return p;
    };
    const auto pg = profile(g);
    const auto ph = profile(h);

    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        incident[std::max(g.edges()[k].u, g.edges()[k].v)].push_back(k);
    }

    std::vector<std::size_t> image(g.vertex_count());
    std::vector<bool> used(h.vertex_count(), false);
    std::function<bool(std::size_t)> extend = [&](std::size_t w) -> bool {
        if (w == g.vertex_count()) {
            return true;
        }
        for (std::size_t cand = 0; cand < h.vertex_count(); ++cand) {
            if (used[cand] || pg[w] != ph[cand]) {
                continue;
            }
            image[w] = cand;
            // Edges whose later endpoint is w are now fully mapped.
            const bool ok = std::all_of(incident[w].begin(), incident[w].end(), [&](std::size_t k) {
                const auto& e = g.edges()[k];
                const auto& f = h.edges()[partner[k]];
                const auto a = std::minmax(image[e.u], image[e.v]);
                const auto b = std::minmax(f.u, f.v);
                return a == b;
            });
            if (!ok) {
                continue;
            }
            used[cand] = true;
            if (extend(w + 1)) {
                return true;
            }
            used[cand] = false;
        }
        return false;
    };
    if (!extend(0)) {
        return std::nullopt;
    }
    return image;
}

}  // namespace symforge
