#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "symforge/cli.hpp"
#include "test_support.hpp"

using namespace symforge;
using symforge::testing::fixture_path;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "symforge");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string graph(const std::string& name) { return fixture_path(name + ".graph"); }

std::string golden(const std::string& name)
{
    std::ifstream in(fixture_path("golden/" + name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Cli, SymanzikGoldens)
{
    for (const char* name : {"fig1", "fig2", "fig3-G", "fig3-Gprime", "bubble", "bubble-massive", "triangle", "path"}) {
        for (const char* method : {"forest", "laplacian", "both"}) {
            const auto r = run({"symanzik", graph(name), "--method", method});
            EXPECT_EQ(r.code, cli::ok) << name << " " << method << ": " << r.err;
            EXPECT_EQ(r.out, golden(std::string(name) + ".symanzik.txt")) << name << " " << method;
        }
    }
}

TEST(Cli, SymanzikFig1PinsDisplay)
{
    const auto r = run({"symanzik", graph("fig1")});
    EXPECT_NE(r.out.find("U = " + symforge::testing::fig1_u().to_string() + "\n"), std::string::npos);
    const auto b = run({"symanzik", graph("bubble")});
    EXPECT_NE(b.out.find("calU = x1 + x2\n"), std::string::npos);
    EXPECT_NE(b.out.find("calF0 = -x1*x2*sp(1,1)\n"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"symanzik", graph("malformed")}).code, cli::parse_error);
    EXPECT_NE(run({"symanzik", graph("malformed")}).err.find("line 6"), std::string::npos);
    EXPECT_EQ(run({"symanzik", graph("two-component")}).code, cli::precondition_violated);
    EXPECT_EQ(run({"symanzik", graph("fig1"), "--bogus"}).code, cli::parse_error);
    EXPECT_EQ(run({"symanzik", graph("fig1"), "--method", "fast"}).code, cli::parse_error);
    EXPECT_EQ(run({}).code, cli::parse_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::parse_error);
    EXPECT_EQ(run({"--help"}).code, cli::ok);
    EXPECT_EQ(run({"verify", graph("fig2"), "--suite", "w-expansion"}).code, cli::precondition_violated);
    EXPECT_EQ(run({"verify", graph("fig1"), "--suite", "nope"}).code, cli::parse_error);
    EXPECT_EQ(run({"verify", "--suite", "matrix-tree"}).code, cli::parse_error);
    EXPECT_EQ(run({"transform", graph("fig1"), "--cleave", "v2", "--part", "e2"}).code, cli::precondition_violated);
    EXPECT_EQ(run({"transform", graph("fig1")}).code, cli::parse_error);
    EXPECT_EQ(run({"transform", graph("two-component"), "--identify", "a1", "b1", "--cleave", "a1", "--part", "e1"}).code,
              cli::parse_error);
    EXPECT_EQ(run({"matroid", graph("fig1")}).code, cli::parse_error);
}

TEST(Cli, InvalidMoveReason)
{
    const auto r = run({"transform", graph("fig1"), "--cleave", "v2", "--part", "e2"});
    EXPECT_NE(r.err.find("invalid move"), std::string::npos);
}

TEST(Cli, VerifySuites)
{
    const auto r = run({"verify", graph("fig1"), "--suite", "matrix-tree"});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out, golden("fig1.matrix-tree.txt"));
    for (const auto& suite : cli::suite_names()) {
        if (suite == "random") {
            continue;
        }
        EXPECT_EQ(run({"verify", graph("fig1"), "--suite", suite}).code, cli::ok) << suite;
        EXPECT_EQ(run({"verify", graph("bubble"), "--suite", suite}).code, cli::ok) << suite;
    }
}

TEST(Cli, VerifyRandomSeeded)
{
    ::setenv("SYMFORGE_SEED", "5", 1);
    const auto a = run({"verify", "--suite", "random"});
    const auto b = run({"verify", "--suite", "random"});
    ::setenv("SYMFORGE_SEED", "6", 1);
    const auto c = run({"verify", "--suite", "random"});
    ::setenv("SYMFORGE_SEED", "many", 1);
    const auto bad = run({"verify", "--suite", "random"});
    ::unsetenv("SYMFORGE_SEED");
    EXPECT_EQ(a.code, cli::ok);
    EXPECT_EQ(c.code, cli::ok);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    EXPECT_EQ(bad.code, cli::parse_error);
}

TEST(Cli, MatroidGoldens)
{
    const auto r = run({"matroid", graph("fig3-G"), graph("fig3-Gprime")});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_EQ(r.out, golden("fig3.matroid.txt"));
    EXPECT_EQ(run({"matroid", graph("fig2"), graph("fig2"), "--show-bases"}).out, golden("fig2.matroid.txt"));
    EXPECT_EQ(run({"matroid", graph("triangle"), graph("path")}).out, golden("triangle-path.matroid.txt"));
}

TEST(Cli, TransformGoldens)
{
    const auto twist = run({"transform", graph("fig3-G"), "--twist", "u", "v", "--side", "e1,e2,e3,e4,e5,e6"});
    EXPECT_EQ(twist.code, cli::ok) << twist.err;
    EXPECT_EQ(twist.out, golden("fig3-G.twist.graph"));
    const auto moved = parse_graph(twist.out);
    EXPECT_TRUE(find_vertex_isomorphism(moved, symforge::testing::fixture("fig3-Gprime")).has_value());

    const auto identify = run({"transform", graph("two-component"), "--identify", "a1", "b1"});
    EXPECT_EQ(identify.code, cli::ok);
    EXPECT_EQ(identify.out, golden("two-component.identify.graph"));
    EXPECT_EQ(parse_graph(identify.out).component_count(), 1u);
}

TEST(Cli, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "symforge_cli_test.txt";
    const auto r = run({"--output", path.string(), "symanzik", graph("bubble")});
    EXPECT_EQ(r.code, cli::ok);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), golden("bubble.symanzik.txt"));
    std::filesystem::remove(path);
}
