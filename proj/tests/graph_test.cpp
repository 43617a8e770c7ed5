#include <patgraph/graph.hpp>

#include "support/random_graphs.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace patgraph;
using R = RelationKind;

namespace
{
    auto figure1_edges() -> EdgeSet
    {
        return {make_edge("a", "b", R::Association), make_edge("c", "b", R::Association),
            make_edge("a", "c", R::Association), make_edge("d", "b", R::Generalization),
            make_edge("e", "c", R::Generalization), make_edge("d", "c", R::Dependency)};
    }

    // Quick-find labelling over dense indices; shares nothing with the library.
    auto connected_by_labels(const std::vector<std::pair<int, int>> & pairs) -> bool
    {
        std::vector<int> label(64, -1);
        for (auto [a, b] : pairs) {
            if (label[a] < 0)
                label[a] = a;
            if (label[b] < 0)
                label[b] = b;
        }
        for (auto [a, b] : pairs) {
            int from = label[a], to = label[b];
            if (from == to)
                continue;
            for (auto & l : label)
                if (l == from)
                    l = to;
        }
        int seen = -1;
        for (auto l : label) {
            if (l < 0)
                continue;
            if (seen >= 0 && l != seen)
                return false;
            seen = l;
        }
        return true;
    }
}

TEST(RelationKind, CodesRoundTrip)
{
    EXPECT_EQ(relation_code(R::Association), 1);
    EXPECT_EQ(relation_code(R::Dependency), 2);
    EXPECT_EQ(relation_code(R::Generalization), 3);
    for (int code = 1; code <= 3; ++code)
        EXPECT_EQ(relation_code(relation_from_code(code)), code);
    EXPECT_THROW(relation_from_code(0), InvalidRelationError);
    EXPECT_THROW(relation_from_code(4), InvalidRelationError);
}

TEST(MakeEdge, ComputesSelfLoopFlag)
{
    EXPECT_EQ(make_edge("a", "b", R::Association).to_string(), "(a,b,1,0)");
    EXPECT_EQ(make_edge("A", "A", R::Association).to_string(), "(A,A,1,1)");
    EXPECT_EQ(make_edge("d", "c", R::Dependency).to_string(), "(d,c,2,0)");
}

TEST(MakeEdge, RejectsEmptyIdentifier)
{
    EXPECT_THROW(make_edge("", "b", R::Association), InvalidNodeError);
    EXPECT_THROW(make_edge("a", "", R::Association), InvalidNodeError);
    EXPECT_THROW(NodeId{"has space"}, InvalidNodeError);
    EXPECT_THROW(NodeId{"x#y"}, InvalidNodeError);
}

TEST(MakeEdge, NodeIdsAreCaseSensitive)
{
    EXPECT_NE(NodeId{"A"}, NodeId{"a"});
    EXPECT_EQ(make_edge("A", "a", R::Association).self_loop(), 0);
}

TEST(MakeEdge, LoopFlagMatchesEqualityOverRandomInputs)
{
    std::mt19937 rng{7};
    auto names = test_support::node_names(4);
    for (int i = 0; i < 500; ++i) {
        const auto & s = names[rng() % 4];
        const auto & t = names[rng() % 4];
        auto e = make_edge(s, t, relation_from_code(1 + static_cast<int>(rng() % 3)));
        EXPECT_EQ(e.self_loop() == 1, s == t);
    }
}

TEST(EdgeSet, Figure1HasSixTuples)
{
    auto graph = graph_from_edges("figure1", figure1_edges());
    EXPECT_EQ(edge_set(graph).size(), 6u);
    EXPECT_EQ(graph.nodes().size(), 5u);
    EXPECT_TRUE(edge_set(graph).contains(make_edge("d", "c", R::Dependency)));
}

TEST(EdgeSet, EmptyGraph)
{
    ClassGraph graph{"empty"};
    graph.add_node(NodeId{"lonely"});
    EXPECT_TRUE(edge_set(graph).empty());
    EXPECT_EQ(graph.nodes().size(), 1u);
}

TEST(EdgeSet, PrototypePatternEdges)
{
    auto graph = graph_from_edges(
        "prototype", {make_edge("b", "a", R::Association), make_edge("c", "a", R::Generalization)});
    EXPECT_EQ(edge_set(graph),
        (EdgeSet{make_edge("b", "a", R::Association), make_edge("c", "a", R::Generalization)}));
}

TEST(EdgeSet, DuplicateInsertIsIdempotentAndParallelKindsCoexist)
{
    ClassGraph graph;
    EXPECT_TRUE(graph.add_edge(make_edge("c", "a", R::Association)));
    EXPECT_FALSE(graph.add_edge(make_edge("c", "a", R::Association)));
    EXPECT_TRUE(graph.add_edge(make_edge("c", "a", R::Generalization)));
    EXPECT_EQ(graph.edges().size(), 2u);

    ClassGraph reversed;
    reversed.add_edge(make_edge("c", "a", R::Generalization));
    reversed.add_edge(make_edge("c", "a", R::Association));
    reversed.add_edge(make_edge("c", "a", R::Generalization));
    EXPECT_EQ(reversed, graph);
    EXPECT_TRUE(check_invariants(graph).empty());
}

TEST(WeakConnectivity, PaperExamples)
{
    EXPECT_TRUE(is_weakly_connected(EdgeSet{make_edge("a", "b", R::Association)}));
    EXPECT_TRUE(is_weakly_connected(EdgeSet{make_edge("A", "A", R::Association)}));
    EXPECT_FALSE(is_weakly_connected(
        EdgeSet{make_edge("a", "b", R::Association), make_edge("e", "c", R::Generalization)}));
    EXPECT_TRUE(is_weakly_connected(
        EdgeSet{make_edge("d", "b", R::Generalization), make_edge("a", "b", R::Association)}));
}

TEST(WeakConnectivity, IgnoresDirection)
{
    EXPECT_TRUE(is_weakly_connected(EdgeSet{make_edge("a", "b", R::Association), make_edge("c", "b", R::Dependency)}));
    EXPECT_FALSE(is_weakly_connected(
        EdgeSet{make_edge("a", "a", R::Association), make_edge("b", "b", R::Association)}));
}

TEST(WeakConnectivity, EmptyIsPreconditionViolation)
{
    EXPECT_THROW(is_weakly_connected(EdgeSet{}), PreconditionError);
    EXPECT_THROW(is_weakly_connected(std::vector<EdgeTuple>{}), PreconditionError);
}

TEST(WeakConnectivity, AgreesWithQuickFindOnAllSmallSubsetsOfSixNodes)
{
    // Complete undirected skeleton on 6 nodes: 15 pairs plus 6 loops.
    std::vector<std::pair<int, int>> universe;
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j)
            universe.emplace_back(i, j);
    ASSERT_EQ(universe.size(), 21u);

    auto names = test_support::node_names(6);
    std::size_t checked = 0;

    std::vector<std::size_t> pick;
    auto visit = [&](auto && self, std::size_t from) -> void {
        if (! pick.empty()) {
            std::vector<std::pair<int, int>> pairs;
            EdgeSet edges;
            for (auto i : pick) {
                pairs.push_back(universe[i]);
                // Alternate direction so the check exercises direction-blindness.
                auto [a, b] = universe[i];
                edges.insert(i % 2 ? make_edge(names[a], names[b], R::Association)
                                   : make_edge(names[b], names[a], R::Generalization));
            }
            ASSERT_EQ(is_weakly_connected(edges), connected_by_labels(pairs));
            ++checked;
        }
        if (pick.size() == 6)
            return;
        for (auto i = from; i < universe.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    visit(visit, 0);
    EXPECT_EQ(checked, 21u + 210u + 1330u + 5985u + 20349u + 54264u);
}

TEST(Relabeling, CommutesWithOperations)
{
    std::mt19937 rng{11};
    for (int round = 0; round < 200; ++round) {
        auto edges = test_support::random_edges(rng, 5, 1 + rng() % 7);
        auto bijection = test_support::random_bijection(rng, test_support::node_names(5));

        auto relabeled = relabel(edges, bijection);
        EXPECT_EQ(relabeled.size(), edges.size());
        EXPECT_EQ(is_weakly_connected(relabeled), is_weakly_connected(edges));

        auto graph = graph_from_edges("g", edges);
        EXPECT_EQ(edge_set(relabel(graph, bijection)), relabeled);

        for (const auto & e : edges) {
            auto moved = relabel(e, bijection);
            EXPECT_EQ(moved.self_loop(), e.self_loop());
            EXPECT_EQ(moved, make_edge(bijection.at(e.source()), bijection.at(e.target()), e.relation()));
        }
    }
}
