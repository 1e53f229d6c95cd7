#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "symforge/dodgson.hpp"
#include "symforge/errors.hpp"
#include "symforge/forest.hpp"
#include "symforge/graph_io.hpp"
#include "symforge/laplacian.hpp"
#include "symforge/matroid.hpp"
#include "symforge/random_graph.hpp"

using namespace symforge;

namespace {

constexpr std::uint64_t corpus_seed = 20240601;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && passed) {
            detail = what;
        }
        passed = passed && ok;
    }
};

FeynGraph load(const std::string& name)
{
    return load_graph(std::string(SYMFORGE_FIXTURES) + "/" + name + ".graph");
}

const std::vector<FeynGraph>& corpus()
{
    static const auto graphs = random_corpus(corpus_seed, 200);
    return graphs;
}

Poly fig1_display()
{
    const auto x = [](std::uint32_t i) { return Poly::x(i); };
    return x(1) * x(2) * (x(3) + x(4)) + (x(1) + x(2)) * x(3) * x(4) +
           (x(1) * x(2) + x(1) * x(3) + x(2) * x(4) + x(3) * x(4)) * x(5);
}

Outcome fig1_golden()
{
    Outcome o;
    const auto g = load("fig1");
    const auto l = build_laplacian(g);
    for (std::size_t i = 0; i < 4; ++i) {
        o.require(principal_minor_det(l, i) == fig1_display(), "det L[" + std::to_string(i + 1) + "] differs");
    }
    return o;
}

Outcome fig2_golden()
{
    Outcome o;
    const auto m = cycle_matroid(load("fig2"));
    o.require(m.ground == std::vector<std::string>{"e1", "e2", "e3", "e4"}, "ground set differs");
    std::vector<std::string> sets;
    for (const auto& s : independent_sets(m)) {
        sets.push_back(m.subset_to_string(s));
    }
    o.require(sets == std::vector<std::string>{"{}", "{e1}", "{e2}", "{e3}", "{e4}", "{e1,e3}", "{e1,e4}", "{e2,e3}",
                                               "{e2,e4}", "{e3,e4}"},
              "independent sets differ");
    return o;
}

Outcome cross_oracle()
{
    Outcome o;
    std::size_t self_loops = 0;
    std::size_t parallel = 0;
    std::size_t legged = 0;
    for (const auto& g : corpus()) {
        const auto vars = g.feyn_indices();
        const auto laplacian_calu = reciprocal_transform(principal_minor_det(build_laplacian(g), 0), vars);
        o.require(laplacian_calu == first_symanzik_calu(g), g.name() + ": calU routes differ");
        if (!g.legs().empty()) {
            ++legged;
            o.require(f0_from_w(g, w_polynomial(g)) == second_symanzik_f0(g), g.name() + ": F0 routes differ");
        }
        for (std::size_t a = 0; a < g.edge_count(); ++a) {
            const auto& e = g.edges()[a];
            self_loops += e.is_self_loop();
            for (std::size_t b = a + 1; b < g.edge_count(); ++b) {
                const auto& f = g.edges()[b];
                parallel += !e.is_self_loop() && ((e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u));
            }
        }
    }
    o.require(self_loops > 0 && parallel > 0 && legged > 0, "corpus lacks self-loops, parallel edges or legs");
    o.detail = o.passed ? std::to_string(corpus().size()) + " graphs, " + std::to_string(self_loops) +
                              " self-loops, " + std::to_string(parallel) + " parallel pairs, " +
                              std::to_string(legged) + " with legs"
                        : o.detail;
    return o;
}

Outcome structural()
{
    Outcome o;
    for (const auto& g : corpus()) {
        const auto vars = g.feyn_indices();
        const auto l = static_cast<std::uint32_t>(g.loop_number());
        const auto u = first_symanzik_u(g);
        const auto calu = first_symanzik_calu(g);
        const auto f0 = second_symanzik_f0(g);
        const auto calf0 = second_symanzik_calf0(g);
        o.require(is_multilinear(calu, vars) && is_homogeneous(calu, vars, l), g.name() + ": calU shape");
        o.require(calf0.is_zero() || (is_multilinear(calf0, vars) && is_homogeneous(calf0, vars, l + 1)),
                  g.name() + ": calF0 shape");
        o.require(reciprocal_transform(u, vars) == calu && reciprocal_transform(calu, vars) == u,
                  g.name() + ": U/calU transform");
        o.require(reciprocal_transform(f0, vars) == calf0 && reciprocal_transform(calf0, vars) == f0,
                  g.name() + ": F0/calF0 transform");
        if (!g.legs().empty()) {
            const auto report = w_expansion_check(g);
            o.require(report.w0_zero && report.w1_matches, g.name() + ": W grades 0/1");
        }
    }
    return o;
}

Outcome deletion_contraction()
{
    Outcome o;
    std::size_t edges = 0;
    for (const auto& g : corpus()) {
        for (const auto& e : g.edges()) {
            if (is_regular_edge(g, e.id)) {
                ++edges;
                o.require(deletion_contraction_check(g, e.id), g.name() + " " + e.id);
            }
        }
    }
    if (o.passed) {
        o.detail = std::to_string(edges) + " regular edges";
    }
    return o;
}

Outcome dodgson()
{
    Outcome o;
    std::mt19937_64 rng(corpus_seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::uint32_t> var(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<Eigen::Index>(2 + trial % 5);
        PolyMatrix a(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                a(r, c) = Poly(static_cast<long>(coef(rng))) * Poly::x(var(rng)) + Poly(static_cast<long>(coef(rng)));
            }
        }
        std::uniform_int_distribution<std::size_t> idx(0, static_cast<std::size_t>(n - 1));
        const auto i = idx(rng);
        auto j = idx(rng);
        while (j == i) {
            j = idx(rng);
        }
        o.require(dodgson_determinant_check(a, i, j), "matrix " + std::to_string(trial));
    }
    std::size_t u_pairs = 0;
    std::size_t mixed = 0;
    std::size_t degenerate = 0;
    for (const auto& g : corpus()) {
        for (const auto& s : enumerate_dodgson_setups(g)) {
            ++u_pairs;
            try {
                o.require(dodgson_u_identity(s).holds, g.name() + " U identity " + s.ea + "," + s.eb);
            } catch (const NotDivisible&) {
                o.require(false, g.name() + " Delta1 not divisible " + s.ea + "," + s.eb);
            }
            if (g.legs().empty()) {
                continue;
            }
            try {
                o.require(dodgson_mixed_identity(s).holds, g.name() + " mixed identity " + s.ea + "," + s.eb);
                ++mixed;
            } catch (const DegenerateDelta1&) {
                ++degenerate;
            }
        }
    }
    if (o.passed) {
        o.detail = "100 matrices, " + std::to_string(u_pairs) + " U-identity pairs, " + std::to_string(mixed) +
                   " mixed instances, " + std::to_string(degenerate) + " with Delta1 = 0";
    }
    return o;
}

FeynGraph disjoint_union(const FeynGraph& a, const FeynGraph& b)
{
    FeynGraph out(a.name() + "+" + b.name());
    for (const auto* g : {&a, &b}) {
        const std::string tag = g == &a ? "a" : "b";
        const auto offset = g == &a ? 0u : static_cast<std::uint32_t>(a.edge_count());
        for (const auto& v : g->vertices()) {
            out.add_vertex(tag + v);
        }
        for (const auto& e : g->edges()) {
            out.add_edge(tag + e.id, tag + g->vertices()[e.u], tag + g->vertices()[e.v], e.var.i + offset);
        }
    }
    return out;
}

Outcome whitney()
{
    Outcome o;
    std::mt19937_64 rng(corpus_seed);
    std::size_t instances = 0;
    std::map<std::string, std::size_t> kinds;
    auto try_graph = [&](const FeynGraph& g) {
        const auto moves = enumerate_whitney_moves(g);
        if (moves.empty()) {
            return;
        }
        const auto& move = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        const auto report = whitney_equivalence_check(g, {move});
        o.require(report.consistent(), g.name() + " " + to_string(move));
        ++instances;
        ++kinds[to_string(move).substr(0, to_string(move).find('('))];
    };
    const auto& graphs = corpus();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        try_graph(graphs[k]);
        if (k + 1 < graphs.size() && k % 4 == 0) {
            try_graph(disjoint_union(graphs[k], graphs[k + 1]));
        }
    }
    const auto fig3 = whitney_equivalence_check(load("fig3-G"), {TwistMove{"u", "v", {"e1", "e2", "e3", "e4", "e5", "e6"}}});
    o.require(fig3.consistent(), "fig3 twist");
    o.require(find_vertex_isomorphism(fig3.result, load("fig3-Gprime")).has_value(), "fig3 twist result is not G'");
    o.require(instances >= 30, "only " + std::to_string(instances) + " instances");
    if (o.passed) {
        std::ostringstream os;
        os << instances << " instances (";
        bool first = true;
        for (const auto& [kind, count] : kinds) {
            os << (first ? "" : ", ") << kind << ' ' << count;
            first = false;
        }
        os << ") plus the fig3 twist";
        o.detail = os.str();
    }
    return o;
}

Outcome cli_contract()
{
    Outcome o;
    const std::string command = std::string("sh ") + SYMFORGE_SCRIPT + " " + SYMFORGE_BINARY + " " + SYMFORGE_FIXTURES;
    const int status = std::system((command + " > /dev/null 2>&1").c_str());
    o.require(status == 0, "end-to-end script failed; run " + command);
    return o;
}

}  // namespace

int main()
{
    struct Criterion {
        int number;
        const char* title;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "fig1 golden: det L[i] = U for i = 1..4", 1.0, fig1_golden},
        {2, "fig2 golden: ground set and 10 independent sets", 1.0, fig2_golden},
        {3, "cross-oracle: calU and F0 by forest and Laplacian routes", 60.0, cross_oracle},
        {4, "structural properties of calU, calF0, transforms and W", 0.0, structural},
        {5, "deletion-contraction on every regular edge", 0.0, deletion_contraction},
        {6, "Dodgson: matrices, U identity, mixed identity", 120.0, dodgson},
        {7, "Whitney moves preserve matroid and U", 0.0, whitney},
        {8, "CLI contract: round-trip, exit codes, --method both", 0.0, cli_contract},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.passed = false;
            o.detail = "took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        }
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
                  << time.str() << " s]" << (o.detail.empty() ? "" : " - " + o.detail) << '\n';
        failed += !o.passed;
    }
    return failed == 0 ? 0 : 1;
}
