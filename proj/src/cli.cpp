#include "symforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "symforge/dodgson.hpp"
#include "symforge/forest.hpp"
#include "symforge/graph_io.hpp"
#include "symforge/laplacian.hpp"
#include "symforge/matroid.hpp"
#include "symforge/random_graph.hpp"

namespace symforge::cli {

namespace {

constexpr std::size_t random_corpus_size = 50;

struct Polynomials {
    Poly u;
    Poly calu;
    Poly f0;
    Poly calf0;
    std::optional<Poly> calf;
};

Poly mass_term(const FeynGraph& g)
{
    Poly out;
    for (const auto& [edge_id, index] : g.masses()) {
        out += Poly(g.edges()[g.edge_index(edge_id)].var) * Poly::msq(index);
    }
    return out;
}

Polynomials forest_route(const FeynGraph& g)
{
    Polynomials p;
    p.u = first_symanzik_u(g);
    p.calu = first_symanzik_calu(g);
    p.f0 = second_symanzik_f0(g);
    p.calf0 = second_symanzik_calf0(g);
    if (!g.masses().empty()) {
        p.calf = full_f(g);
    }
    return p;
}

Polynomials laplacian_route(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    const auto vars = g.feyn_indices();
    Polynomials p;
    p.u = principal_minor_det(build_laplacian(g), 0);
    p.calu = reciprocal_transform(p.u, vars);
    if (!g.legs().empty()) {
        p.f0 = f0_from_w(g, w_polynomial(g));
    }
    p.calf0 = reciprocal_transform(p.f0, vars);
    if (!g.masses().empty()) {
        p.calf = p.calf0 + p.calu * mass_term(g);
    }
    return p;
}

void print_polynomials(std::ostream& os, const FeynGraph& g, const Polynomials& p)
{
    os << "graph: " << g.name() << '\n';
    os << "U = " << p.u << '\n';
    os << "calU = " << p.calu << '\n';
    os << "F0 = " << p.f0 << '\n';
    os << "calF0 = " << p.calf0 << '\n';
    if (p.calf) {
        os << "calF = " << *p.calf << '\n';
    }
}

std::string vertex_label(const FeynGraph& g, std::size_t k)
{
    return "L[" + std::to_string(k + 1) + "] (" + g.vertices()[k] + ")";
}

std::vector<InstanceResult> matrix_tree_suite(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    const auto u = first_symanzik_u(g);
    const auto l = build_laplacian(g);
    std::vector<InstanceResult> out;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        out.push_back({"matrix-tree", vertex_label(g, i), principal_minor_det(l, i) == u, ""});
    }
    return out;
}

std::vector<InstanceResult> deletion_contraction_suite(const FeynGraph& g)
{
    std::vector<InstanceResult> out;
    for (const auto& e : g.edges()) {
        if (is_regular_edge(g, e.id)) {
            out.push_back({"deletion-contraction", e.id, deletion_contraction_check(g, e.id), ""});
        }
    }
    return out;
}

std::string setup_label(const DodgsonSetup& s)
{
    return s.ea + "," + s.eb + " at " + s.vk;
}

std::vector<InstanceResult> dodgson_u_suite(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    std::vector<InstanceResult> out;
    for (const auto& s : enumerate_dodgson_setups(g)) {
        InstanceResult r{"dodgson-u", setup_label(s), false, ""};
        try {
            r.passed = dodgson_u_identity(s).holds;
        } catch (const NotDivisible&) {
            r.note = "Delta1 not divisible by x_a x_b";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<InstanceResult> dodgson_mixed_suite(const FeynGraph& g)
{
    if (!g.is_connected()) {
        throw Disconnected();
    }
    std::vector<InstanceResult> out;
    for (const auto& s : enumerate_dodgson_setups(g)) {
        InstanceResult r{"dodgson-mixed", setup_label(s), false, ""};
        try {
            const auto result = dodgson_mixed_identity(s);
            r.passed = result.holds;
            r.note = "Delta2/(x_a x_b) = " + result.delta2_quotient.to_string();
        } catch (const DegenerateDelta1&) {
            r.passed = true;
            r.note = "degenerate: Delta1 = 0";
        } catch (const NotDivisible&) {
            r.note = "Delta1 not divisible by x_a x_b";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<InstanceResult> w_expansion_suite(const FeynGraph& g)
{
    const auto report = w_expansion_check(g);
    return {
        {"w-expansion", "W0 = 0", report.w0_zero, ""},
        {"w-expansion", "W1 = U*sum(z)", report.w1_matches, ""},
        {"w-expansion", "W2 -> F0", report.w2_matches_f0, ""},
    };
}

std::vector<InstanceResult> reciprocal_suite(const FeynGraph& g)
{
    const auto vars = g.feyn_indices();
    const auto u = first_symanzik_u(g);
    const auto calu = first_symanzik_calu(g);
    const auto f0 = second_symanzik_f0(g);
    const auto calf0 = second_symanzik_calf0(g);
    return {
        {"reciprocal", "U -> calU", reciprocal_transform(u, vars) == calu, ""},
        {"reciprocal", "calU -> U", reciprocal_transform(calu, vars) == u, ""},
        {"reciprocal", "F0 -> calF0", reciprocal_transform(f0, vars) == calf0, ""},
        {"reciprocal", "calF0 -> F0", reciprocal_transform(calf0, vars) == f0, ""},
    };
}

using SuiteFn = std::function<std::vector<InstanceResult>(const FeynGraph&)>;

const std::vector<std::pair<std::string, SuiteFn>>& graph_suites()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"matrix-tree", matrix_tree_suite},
        {"deletion-contraction", deletion_contraction_suite},
        {"dodgson-u", dodgson_u_suite},
        {"dodgson-mixed", dodgson_mixed_suite},
        {"w-expansion", w_expansion_suite},
        {"reciprocal", reciprocal_suite},
    };
    return suites;
}

void print_result(std::ostream& os, const InstanceResult& r)
{
    os << (r.passed ? "PASS " : "FAIL ") << r.suite << ' ' << r.instance;
    if (!r.note.empty()) {
        os << "  [" << r.note << ']';
    }
    os << '\n';
}

std::uint64_t seed_from_environment()
{
    if (const char* s = std::getenv("SYMFORGE_SEED"); s != nullptr && *s != '\0') {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError(std::string("SYMFORGE_SEED is not an unsigned integer: '") + s + "'");
        }
    }
    return 1;
}

int verify_random(std::ostream& os)
{
    const auto seed = seed_from_environment();
    os << "random corpus: seed " << seed << ", " << random_corpus_size << " graphs\n";
    bool all = true;
    for (const auto& g : random_corpus(seed, random_corpus_size)) {
        for (const auto& [name, fn] : graph_suites()) {
            if (name == "w-expansion" && g.legs().empty()) {
                continue;
            }
            const auto results = fn(g);
            const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
            all = all && failed == 0;
            os << (failed == 0 ? "PASS " : "FAIL ") << g.name() << ' ' << name << " (" << results.size()
               << " instances, " << failed << " failed)\n";
        }
    }
    return all ? ok : identity_failed;
}

std::vector<std::string> split_ids(const std::vector<std::string>& raw)
{
    std::vector<std::string> out;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (!id.empty()) {
                out.push_back(id);
            }
        }
    }
    return out;
}

std::string bijection_text(const CycleMatroid& a, const CycleMatroid& b, const std::vector<std::size_t>& sigma)
{
    std::string out;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        out += (k ? ", " : "") + a.ground[k] + "->" + b.ground[sigma[k]];
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : graph_suites()) {
            n.push_back(name);
        }
        n.push_back("random");
        return n;
    }();
    return names;
}

std::vector<InstanceResult> run_suite(const FeynGraph& g, const std::string& suite)
{
    for (const auto& [name, fn] : graph_suites()) {
        if (name == suite) {
            return fn(g);
        }
    }
    throw PreconditionError("unknown suite '" + suite + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Symanzik polynomials of Feynman graphs: construction and identity checks", "symforge"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string output_path;
    app.add_option("--output", output_path, "Write results to this file instead of standard output");

    std::string method = "both";
    std::string graph_path;
    auto* symanzik = app.add_subcommand("symanzik", "Print U, calU, F0, calF0 (and calF with masses)");
    symanzik->add_option("graph", graph_path, "Graph file")->required();
    symanzik->add_option("--method", method, "Derivation route")
        ->check(CLI::IsMember({"forest", "laplacian", "both"}));

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Check an identity suite and report every instance");
    verify->add_option("graph", graph_path, "Graph file (not used by the random suite)");
    verify->add_option("--suite", suite, "Suite to run")->required()->check(CLI::IsMember(suite_names()));

    std::vector<std::string> matroid_paths;
    bool show_bases = false;
    auto* matroid = app.add_subcommand("matroid", "Compare the cycle matroids and U polynomials of two graphs");
    matroid->add_option("graphs", matroid_paths, "Two graph files")->required()->expected(2);
    matroid->add_flag("--show-bases", show_bases, "List the bases of both matroids");

    std::vector<std::string> twist_pair;
    std::vector<std::string> side;
    std::vector<std::string> identify_pair;
    std::string cleave_vertex;
    std::vector<std::string> part;
    auto* transform = app.add_subcommand("transform", "Apply a Whitney move and write the resulting graph");
    transform->add_option("graph", graph_path, "Graph file")->required();
    auto* twist_opt = transform->add_option("--twist", twist_pair, "Twist about U and V")->expected(2);
    auto* side_opt = transform->add_option("--side", side, "Edges on the twisted side (comma-separated)");
    auto* identify_opt = transform->add_option("--identify", identify_pair, "Identify U and V")->expected(2);
    auto* cleave_opt = transform->add_option("--cleave", cleave_vertex, "Cleave the cut vertex W");
    auto* part_opt = transform->add_option("--part", part, "Edges moved to the new vertex (comma-separated)");
    twist_opt->needs(side_opt);
    side_opt->needs(twist_opt);
    cleave_opt->needs(part_opt);
    part_opt->needs(cleave_opt);
    twist_opt->excludes(identify_opt)->excludes(cleave_opt);
    identify_opt->excludes(cleave_opt);

    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "symforge: " << e.what() << '\n';
        return parse_error;
    }

    std::ostringstream buffer;
    int code = ok;
    try {
        if (symanzik->parsed()) {
            const auto g = load_graph(graph_path);
            if (method == "forest") {
                print_polynomials(buffer, g, forest_route(g));
            } else if (method == "laplacian") {
                print_polynomials(buffer, g, laplacian_route(g));
            } else {
                const auto f = forest_route(g);
                const auto l = laplacian_route(g);
                print_polynomials(buffer, g, f);
                const std::pair<const char*, bool> checks[] = {
                    {"U", f.u == l.u},
                    {"calU", f.calu == l.calu},
                    {"F0", f.f0 == l.f0},
                    {"calF0", f.calf0 == l.calf0},
                    {"calF", f.calf == l.calf},
                };
                for (const auto& [name, agree] : checks) {
                    if (!agree) {
                        err << "symforge: forest and laplacian routes disagree on " << name << '\n';
                        code = method_disagreement;
                    }
                }
            }
        } else if (verify->parsed()) {
            if (suite == "random") {
                code = verify_random(buffer);
            } else {
                if (graph_path.empty()) {
                    err << "symforge: verify --suite " << suite << " needs a graph file\n";
                    return parse_error;
                }
                const auto g = load_graph(graph_path);
                const auto results = run_suite(g, suite);
                bool all = true;
                for (const auto& r : results) {
                    print_result(buffer, r);
                    all = all && r.passed;
                }
                buffer << suite << ": " << std::count_if(results.begin(), results.end(),
                                                         [](const auto& r) { return r.passed; })
                       << '/' << results.size() << " passed\n";
                code = all ? ok : identity_failed;
            }
        } else if (matroid->parsed()) {
            const auto g = load_graph(matroid_paths[0]);
            const auto h = load_graph(matroid_paths[1]);
            const auto mg = cycle_matroid(g);
            const auto mh = cycle_matroid(h);
            buffer << "note: matroids are compared on leg-free skeletons without isolated vertices\n";
            for (const auto& [label, graph, m] : {std::tuple{"G", &g, &mg}, std::tuple{"H", &h, &mh}}) {
                buffer << label << ": " << graph->name() << " (" << m->ground.size() << " elements, rank "
                       << m->rank() << ", " << m->bases.size() << " bases"
                       << (m->connected ? "" : ", disconnected: bases are maximal spanning forests") << ")\n";
                if (show_bases) {
                    buffer << "bases " << label << ":";
                    for (const auto& b : m->bases) {
                        buffer << ' ' << m->subset_to_string(b);
                    }
                    buffer << '\n';
                }
            }
            const auto sigma = matroid_isomorphic(mg, mh);
            buffer << "matroid bijection: " << (sigma ? bijection_text(mg, mh, *sigma) : "none") << '\n';
            const auto tau = find_variable_isomorphism(u_from_bases(mg), u_from_bases(mh));
            buffer << "U bijection: " << (tau ? to_string(*tau) : "none") << '\n';
        } else if (transform->parsed()) {
            const auto g = load_graph(graph_path);
            WhitneyMove move;
            if (!twist_pair.empty()) {
                move = TwistMove{twist_pair[0], twist_pair[1], split_ids(side)};
            } else if (!identify_pair.empty()) {
                move = IdentifyMove{identify_pair[0], identify_pair[1]};
            } else if (!cleave_vertex.empty()) {
                move = CleaveMove{cleave_vertex, split_ids(part), ""};
            } else {
                err << "symforge: transform needs one of --twist, --identify, --cleave\n";
                return parse_error;
            }
            buffer << serialize_graph(apply_whitney_move(g, move));
        }
    } catch (const ParseError& e) {
        err << "symforge: " << e.what() << '\n';
        return parse_error;
    } catch (const PreconditionError& e) {
        err << "symforge: precondition violated: " << e.what() << '\n';
        return precondition_violated;
    } catch (const NotDivisible& e) {
        err << "symforge: identity failed: " << e.what() << '\n';
        return identity_failed;
    }

    if (output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(output_path, std::ios::binary);
        if (!file) {
            err << "symforge: cannot write '" << output_path << "'\n";
            return precondition_violated;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace symforge::cli
