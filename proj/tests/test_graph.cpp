#include <gtest/gtest.h>

#include "symforge/errors.hpp"
#include "symforge/random_graph.hpp"
#include "test_support.hpp"

using namespace symforge;
using namespace symforge::testing;

TEST(Graph, BuildersEnforceInvariants)
{
    FeynGraph g("g");
    g.add_vertex("a");
    g.add_vertex("b");
    EXPECT_THROW(g.add_vertex("a"), PreconditionError);
    g.add_edge("e1", "a", "b", 1);
    EXPECT_THROW(g.add_edge("e1", "a", "b", 2), PreconditionError);
    EXPECT_THROW(g.add_edge("e2", "a", "b", 1), PreconditionError);
    EXPECT_THROW(g.add_edge("e2", "a", "c", 2), UnknownVertex);
    g.add_leg(1, "a");
    EXPECT_THROW(g.add_leg(1, "b"), PreconditionError);
    EXPECT_THROW(g.set_mass("e9", 1), UnknownEdge);
    EXPECT_THROW(g.edge_index("e9"), UnknownEdge);
}

TEST(Graph, LoopNumber)
{
    EXPECT_EQ(bubble().loop_number(), 1);
    EXPECT_EQ(single_edge().loop_number(), 0);
    EXPECT_EQ(fixture("fig1").loop_number(), 2);
    EXPECT_EQ(fixture("two-component").loop_number(), 2);
    EXPECT_EQ(fixture("two-component").component_count(), 2u);
}

TEST(Graph, DeleteEdge)
{
    const auto g = delete_edge(bubble(), "e2");
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.legs().size(), 2u);

    const auto box = delete_edge(fixture("fig1"), "e5");
    EXPECT_EQ(box.edge_count(), 4u);
    EXPECT_EQ(box.loop_number(), 1);
    EXPECT_THROW(delete_edge(bubble(), "e7"), UnknownEdge);

    const auto isolated = delete_edge(single_edge(), "e1");
    EXPECT_EQ(isolated.vertex_count(), 2u);
    EXPECT_EQ(isolated.component_count(), 2u);
}

TEST(Graph, ContractEdge)
{
    const auto point = contract_edge(single_edge(), "e1");
    EXPECT_EQ(point.vertex_count(), 1u);
    EXPECT_EQ(point.edge_count(), 0u);

    const auto loop = contract_edge(bubble(), "e1");
    ASSERT_EQ(loop.edge_count(), 1u);
    EXPECT_TRUE(loop.edges()[0].is_self_loop());
    EXPECT_EQ(loop.legs().size(), 2u);
    EXPECT_EQ(loop.legs()[0].vertex, loop.legs()[1].vertex);
    EXPECT_THROW(contract_edge(loop, "e2"), SelfLoopContraction);

    const auto fig1 = fixture("fig1");
    const auto c = contract_edge(fig1, "e5");
    EXPECT_EQ(c.vertex_count(), 3u);
    EXPECT_EQ(c.loop_number(), 2);
    std::vector<std::size_t> degree(c.vertex_count());
    for (const auto& e : c.edges()) {
        ++degree[e.u];
        ++degree[e.v];
    }
    EXPECT_EQ(*std::max_element(degree.begin(), degree.end()), 4u);
}

TEST(Graph, RegularEdges)
{
    EXPECT_TRUE(is_regular_edge(bubble(), "e1"));
    EXPECT_FALSE(is_regular_edge(single_edge(), "e1"));
    EXPECT_TRUE(is_bridge(single_edge(), "e1"));
    EXPECT_FALSE(is_regular_edge(contract_edge(bubble(), "e1"), "e2"));
    EXPECT_THROW(is_regular_edge(bubble(), "e3"), UnknownEdge);
}

TEST(Graph, ExtendWithExternalVertices)
{
    const auto plain = fixture("fig2");
    EXPECT_EQ(extend_with_external_vertices(plain), plain);

    const auto b = extend_with_external_vertices(bubble());
    EXPECT_EQ(b.vertex_count(), 4u);
    EXPECT_EQ(b.edge_count(), 4u);
    EXPECT_TRUE(b.legs().empty());
    EXPECT_EQ(b.external_vertex_count(), 2u);
    EXPECT_EQ(b.edges()[2].var, Atom::leg(1));
    EXPECT_EQ(b.edges()[3].var, Atom::leg(2));

    const auto f = extend_with_external_vertices(fixture("fig1"));
    EXPECT_EQ(f.vertex_count(), 8u);
    EXPECT_EQ(f.edge_count(), 9u);
}

TEST(Graph, ConnectedComponents)
{
    EXPECT_EQ(connected_components(bubble()).size(), 1u);
    EXPECT_EQ(connected_components(fixture("two-component")).size(), 2u);
    EXPECT_TRUE(connected_components(FeynGraph("empty")).empty());
}

TEST(Graph, RandomGraphProperties)
{
    for (const auto& g : random_corpus(3, 100)) {
        EXPECT_TRUE(g.is_connected());
        EXPECT_LE(g.vertex_count(), 6u);
        EXPECT_LE(g.edge_count(), 7u);
        EXPECT_LE(g.legs().size(), 4u);
        for (const auto& e : g.edges()) {
            if (!is_regular_edge(g, e.id)) {
                continue;
            }
            EXPECT_EQ(contract_edge(g, e.id).loop_number(), g.loop_number());
            EXPECT_EQ(delete_edge(g, e.id).loop_number(), g.loop_number() - 1);
        }
        const auto ext = extend_with_external_vertices(g);
        EXPECT_EQ(ext.vertex_count(), g.vertex_count() + g.legs().size());
        EXPECT_EQ(ext.edge_count(), g.edge_count() + g.legs().size());
        EXPECT_TRUE(ext.legs().empty());
    }
}

TEST(Graph, DeleteContractCommute)
{
    for (const auto& g : random_corpus(4, 60)) {
        for (const auto& a : g.edges()) {
            for (const auto& b : g.edges()) {
                if (a.id == b.id || b.is_self_loop()) {
                    continue;
                }
                const auto lhs = contract_edge(delete_edge(g, a.id), b.id);
                const auto rhs = delete_edge(contract_edge(g, b.id), a.id);
                EXPECT_EQ(lhs, rhs) << g.name() << " " << a.id << " " << b.id;
            }
        }
    }
}

TEST(Graph, RandomCorpusDeterministic)
{
    EXPECT_EQ(random_corpus(9, 20), random_corpus(9, 20));
    EXPECT_NE(random_corpus(9, 20), random_corpus(10, 20));
}

TEST(Whitney, IdentifyAndCleave)
{
    const auto two = fixture("two-component");
    const auto bowtie = apply_whitney_move(two, IdentifyMove{"a1", "b1"});
    EXPECT_EQ(bowtie.component_count(), 1u);
    EXPECT_EQ(bowtie.vertex_count(), 5u);
    EXPECT_EQ(bowtie.edge_count(), 6u);
    EXPECT_EQ(bowtie.loop_number(), two.loop_number());

    const auto back = apply_whitney_move(bowtie, CleaveMove{"a1", {"e4", "e6"}, "b1"});
    EXPECT_EQ(back.component_count(), 2u);
    EXPECT_TRUE(find_vertex_isomorphism(back, two).has_value());

    EXPECT_THROW(apply_whitney_move(bowtie, IdentifyMove{"a1", "a2"}), InvalidMove);
    EXPECT_THROW(apply_whitney_move(bowtie, CleaveMove{"a2", {"e1"}, ""}), InvalidMove);
    EXPECT_THROW(apply_whitney_move(bowtie, CleaveMove{"a1", {"e4"}, ""}), InvalidMove);
}

TEST(Whitney, TwistFig3)
{
    const auto g = fixture("fig3-G");
    const auto h = fixture("fig3-Gprime");
    EXPECT_FALSE(find_vertex_isomorphism(g, h).has_value());
    const auto moved = apply_whitney_move(g, TwistMove{"u", "v", {"e1", "e2", "e3", "e4", "e5", "e6"}});
    EXPECT_TRUE(find_vertex_isomorphism(moved, h).has_value());
    EXPECT_EQ(moved.edge_count(), g.edge_count());
    EXPECT_EQ(moved.loop_number(), g.loop_number());
    EXPECT_THROW(apply_whitney_move(g, TwistMove{"u", "v", {"e1", "e2", "e3"}}), InvalidMove);
    EXPECT_THROW(apply_whitney_move(g, TwistMove{"a", "v", {"e1"}}), InvalidMove);
}

TEST(Whitney, TwistRejectsLegsOnPivots)
{
    auto g = make_graph("square", 4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, {1});
    EXPECT_THROW(apply_whitney_move(g, TwistMove{"v1", "v3", {"e1", "e2"}}), InvalidMove);
    EXPECT_NO_THROW(apply_whitney_move(g, TwistMove{"v2", "v4", {"e1", "e4"}}));
}

TEST(Whitney, EnumeratedMovesPreserveStructure)
{
    std::size_t moves = 0;
    for (const auto& g : random_corpus(21, 40)) {
        for (const auto& m : enumerate_whitney_moves(g)) {
            const auto h = apply_whitney_move(g, m);
            EXPECT_EQ(h.edge_count(), g.edge_count()) << to_string(m);
            EXPECT_EQ(h.loop_number(), g.loop_number()) << to_string(m);
            for (std::size_t k = 0; k < g.edge_count(); ++k) {
                EXPECT_EQ(h.edges()[k].var, g.edges()[k].var);
            }
            ++moves;
        }
    }
    EXPECT_GT(moves, 30u);
}

TEST(Graph, VertexIsomorphism)
{
    const auto g = fixture("fig1");
    EXPECT_TRUE(find_vertex_isomorphism(g, g).has_value());
    EXPECT_FALSE(find_vertex_isomorphism(g, delete_edge(g, "e5")).has_value());
}
