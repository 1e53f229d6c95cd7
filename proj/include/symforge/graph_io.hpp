#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symforge/graph.hpp"

namespace symforge {

/// Graph file format (JSON):
///
///     {
///       "name": "bubble",
///       "vertices": ["v1", "v2"],
///       "edges": [{"id": "e1", "ends": ["v1", "v2"], "var": 1}, ...],
///       "legs": [{"momentum": 1, "vertex": "v1"}, ...],
///       "masses": {"e1": 1}
///     }
///
/// `masses` is optional; every other field is required. Unknown fields are
/// rejected. Errors throw ParseError naming the offending position.
FeynGraph parse_graph(std::string_view text);
FeynGraph load_graph(const std::filesystem::path& path);

/// Canonical serialisation: fixed field order, two-space indent, trailing
/// newline. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const FeynGraph& g);

}  // namespace symforge
