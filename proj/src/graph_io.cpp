#include "symforge/graph_io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace symforge {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what)
{
    throw ParseError("graph file: at " + where + ": " + what);
}

void only_fields(const json& obj, const std::string& where, std::initializer_list<const char*> allowed)
{
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; })) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

const json& field(const json& obj, const std::string& where, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::string string_at(const json& v, const std::string& where)
{
    if (!v.is_string()) {
        fail(where, "expected a string");
    }
    return v.get<std::string>();
}

std::uint32_t index_at(const json& v, const std::string& where)
{
    if (!v.is_number_integer()) {
        fail(where, "expected an integer");
    }
    const auto n = v.get<std::int64_t>();
    if (n < 1 || n > std::numeric_limits<std::uint32_t>::max()) {
        fail(where, "index must be a positive integer");
    }
    return static_cast<std::uint32_t>(n);
}

const json& array_at(const json& v, const std::string& where)
{
    if (!v.is_array()) {
        fail(where, "expected an array");
    }
    return v;
}

/// Runs a graph builder call, converting invariant violations into
/// position-bearing parse errors.
template <typename F>
void build(const std::string& where, F&& f)
{
    try {
        f();
    } catch (const PreconditionError& e) {
        fail(where, e.what());
    }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

FeynGraph parse_graph(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("graph file: ") + e.what());
    }
    only_fields(doc, "/", {"name", "vertices", "edges", "legs", "masses"});

    FeynGraph g(string_at(field(doc, "/", "name"), "/name"));

    const auto& vertices = array_at(field(doc, "/", "vertices"), "/vertices");
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const auto where = "/vertices/" + std::to_string(k);
        const auto id = string_at(vertices[k], where);
        build(where, [&] { g.add_vertex(id); });
    }

    const auto& edges = array_at(field(doc, "/", "edges"), "/edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const auto where = "/edges/" + std::to_string(k);
        only_fields(edges[k], where, {"id", "ends", "var"});
        const auto id = string_at(field(edges[k], where, "id"), where + "/id");
        const auto& ends = array_at(field(edges[k], where, "ends"), where + "/ends");
        if (ends.size() != 2) {
            fail(where + "/ends", "expected exactly two vertices");
        }
        const auto u = string_at(ends[0], where + "/ends/0");
        const auto v = string_at(ends[1], where + "/ends/1");
        const auto var = index_at(field(edges[k], where, "var"), where + "/var");
        build(where, [&] { g.add_edge(id, u, v, var); });
    }

    const auto& legs = array_at(field(doc, "/", "legs"), "/legs");
    for (std::size_t k = 0; k < legs.size(); ++k) {
        const auto where = "/legs/" + std::to_string(k);
        only_fields(legs[k], where, {"momentum", "vertex"});
        const auto momentum = index_at(field(legs[k], where, "momentum"), where + "/momentum");
        const auto vertex = string_at(field(legs[k], where, "vertex"), where + "/vertex");
        build(where, [&] { g.add_leg(momentum, vertex); });
    }

    if (auto it = doc.find("masses"); it != doc.end()) {
        if (!it->is_object()) {
            fail("/masses", "expected an object");
        }
        for (const auto& [edge_id, index] : it->items()) {
            const auto where = "/masses/" + edge_id;
            const auto mass = index_at(index, where);
            build(where, [&] { g.set_mass(edge_id, mass); });
        }
    }
    return g;
}

FeynGraph load_graph(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open graph file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string serialize_graph(const FeynGraph& g)
{
    std::ostringstream os;
    os << "{\n  \"name\": " << quoted(g.name()) << ",\n  \"vertices\": [";
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        os << (k ? ", " : "") << quoted(g.vertices()[k]);
    }
    os << "],\n  \"edges\": [";
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const auto& e = g.edges()[k];
        if (!e.var.is_feyn()) {
            throw PreconditionError("serialize_graph: edge '" + e.id + "' carries a leg variable");
        }
        os << (k ? ",\n" : "\n") << "    {\"id\": " << quoted(e.id) << ", \"ends\": [" << quoted(g.vertices()[e.u])
           << ", " << quoted(g.vertices()[e.v]) << "], \"var\": " << e.var.i << "}";
    }
    os << (g.edge_count() ? "\n  ]" : "]") << ",\n  \"legs\": [";
    for (std::size_t k = 0; k < g.legs().size(); ++k) {
        const auto& l = g.legs()[k];
        os << (k ? ",\n" : "\n") << "    {\"momentum\": " << l.momentum
           << ", \"vertex\": " << quoted(g.vertices()[l.vertex]) << "}";
    }
    os << (g.legs().empty() ? "]" : "\n  ]");
    if (!g.masses().empty()) {
        os << ",\n  \"masses\": {";
        bool first = true;
        for (const auto& [edge_id, index] : g.masses()) {
            os << (first ? "" : ", ") << quoted(edge_id) << ": " << index;
            first = false;
        }
        os << "}";
    }
    os << "\n}\n";
    return os.str();
}

}  // namespace symforge
