#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symforge/poly.hpp"

namespace symforge {

/// Internal edge. `var` is x_i for edges of a Feynman graph and z_j for the
/// leg edges added by extend_with_external_vertices.
struct Edge {
    std::string id;
    std::size_t u = 0;
    std::size_t v = 0;
    Atom var;

    bool is_self_loop() const { return u == v; }
    bool touches(std::size_t w) const { return u == w || v == w; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// External leg carrying momentum p_j, attached to a vertex.
struct Leg {
    std::uint32_t momentum = 0;
    std::size_t vertex = 0;
    friend bool operator==(const Leg&, const Leg&) = default;
};

/// Labelled multigraph with external legs and optional masses.
///
/// Self-loops and multi-edges are allowed. Vertices, edges and legs keep
/// insertion order, which fixes the row order of Laplacians and the
/// enumeration order of forests. Operations never modify a graph in place;
/// minors and moves return new graphs.
class FeynGraph {
public:
    FeynGraph() = default;
    explicit FeynGraph(std::string name) : name_(std::move(name)) {}

    /// Builders; each enforces the graph invariants and throws
    /// PreconditionError on violation.
    std::size_t add_vertex(const std::string& id);
    void add_edge(const std::string& id, const std::string& u, const std::string& v, std::uint32_t feyn_index);
    void add_leg(std::uint32_t momentum, const std::string& vertex);
    void set_mass(const std::string& edge_id, std::uint32_t mass_index);

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Leg>& legs() const { return legs_; }
    const std::map<std::string, std::uint32_t>& masses() const { return masses_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    /// Number of trailing vertices added by extend_with_external_vertices.
    std::size_t external_vertex_count() const { return external_count_; }

    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;
    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;

    /// Feynman indices carried by the edges, in edge order.
    std::vector<std::uint32_t> feyn_indices() const;
    std::size_t component_count() const;
    bool is_connected() const { return component_count() <= 1; }
    /// l = n - r + c.
    long loop_number() const;

    friend bool operator==(const FeynGraph&, const FeynGraph&) = default;

private:
    friend FeynGraph delete_edge(const FeynGraph&, const std::string&);
    friend FeynGraph contract_edge(const FeynGraph&, const std::string&);
    friend FeynGraph extend_with_external_vertices(const FeynGraph&);
    friend FeynGraph strip_isolated_vertices(const FeynGraph&);
    friend struct GraphEditor;

    std::string fresh_vertex_id(const std::string& base) const;

    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Leg> legs_;
    std::map<std::string, std::uint32_t> masses_;
    std::size_t external_count_ = 0;
};

/// Removes an edge; vertices and legs stay (isolated vertices are kept).
FeynGraph delete_edge(const FeynGraph& g, const std::string& edge_id);

/// Merges the endpoints of a non-loop edge into the one listed first in the
/// vertex order. Parallel edges become self-loops; legs follow the merge.
FeynGraph contract_edge(const FeynGraph& g, const std::string& edge_id);

/// Neither a self-loop nor a bridge.
bool is_regular_edge(const FeynGraph& g, const std::string& edge_id);
bool is_bridge(const FeynGraph& g, const std::string& edge_id);

/// The graph with every leg j capped by a new trailing vertex and turned into
/// an internal edge carrying z_j. The result has no legs.
FeynGraph extend_with_external_vertices(const FeynGraph& g);

/// Removes vertices without incident edges or legs.
FeynGraph strip_isolated_vertices(const FeynGraph& g);

/// Component label per vertex; labels are numbered in order of first vertex.
std::vector<std::size_t> component_labels(const FeynGraph& g);
/// Vertex partition into connected components, each listed in vertex order.
std::vector<std::vector<std::size_t>> connected_components(const FeynGraph& g);

// ---------------------------------------------------------------------------
// Whitney moves

struct IdentifyMove {
    std::string u;
    std::string v;
};

/// Splits `w`; the edges in `part` move to a new vertex `new_vertex`
/// (a fresh id is derived from `w` when empty).
struct CleaveMove {
    std::string w;
    std::vector<std::string> part;
    std::string new_vertex;
};

/// Swaps the roles of `u` and `v` on the `side` edges.
struct TwistMove {
    std::string u;
    std::string v;
    std::vector<std::string> side;
};

using WhitneyMove = std::variant<IdentifyMove, CleaveMove, TwistMove>;

std::string to_string(const WhitneyMove& m);

/// Throws InvalidMove with the reason when the move does not apply to g.
void validate_move(const FeynGraph& g, const WhitneyMove& m);

/// Applies a validated move. Edge ids, variables and masses are preserved
/// edge for edge.
FeynGraph apply_whitney_move(const FeynGraph& g, const WhitneyMove& m);

/// Every valid single move on g, in a deterministic order. Cleaves and twists
/// are listed once per unordered split.
std::vector<WhitneyMove> enumerate_whitney_moves(const FeynGraph& g);

/// Vertex bijection (index in g -> index in h) that carries every edge onto
/// the edge with the same id and every leg onto the leg with the same
/// momentum. Names and vertex order may differ.
std::optional<std::vector<std::size_t>> find_vertex_isomorphism(const FeynGraph& g, const FeynGraph& h);

}  // namespace symforge
