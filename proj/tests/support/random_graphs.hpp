#pragma once

// Seeded generators shared by the property suites.

#include <patgraph/graph.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace patgraph::test_support
{
    inline auto node_names(std::size_t count, const std::string & prefix = "n") -> std::vector<NodeId>
    {
        std::vector<NodeId> result;
        for (std::size_t i = 0; i < count; ++i)
            result.emplace_back(prefix + std::to_string(i));
        return result;
    }

    /// Up to `max_edges` distinct edges over `nodes` nodes. Self-loops appear
    /// with probability `loop_chance`.
    inline auto random_edges(std::mt19937 & rng, std::size_t nodes, std::size_t max_edges, double loop_chance = 0.1,
        const std::string & prefix = "n") -> EdgeSet
    {
        auto names = node_names(nodes, prefix);
        std::uniform_int_distribution<std::size_t> pick_node(0, nodes - 1);
        std::uniform_int_distribution<int> pick_code(1, 3);
        std::bernoulli_distribution loop(loop_chance);

        EdgeSet edges;
        for (std::size_t attempt = 0; attempt < max_edges * 4 && edges.size() < max_edges; ++attempt) {
            auto s = pick_node(rng);
            auto t = loop(rng) ? s : pick_node(rng);
            edges.insert(make_edge(names[s], names[t], relation_from_code(pick_code(rng))));
        }
        return edges;
    }

    inline auto random_graph(std::mt19937 & rng, std::size_t max_nodes, std::size_t max_edges) -> ClassGraph
    {
        std::uniform_int_distribution<std::size_t> node_count(0, max_nodes);
        auto n = node_count(rng);
        ClassGraph graph{"g" + std::to_string(rng() % 1000)};
        for (const auto & id : node_names(n))
            graph.add_node(id);
        if (n > 0) {
            std::uniform_int_distribution<std::size_t> edge_count(0, max_edges);
            for (const auto & e : random_edges(rng, n, edge_count(rng), 0.15))
                graph.add_edge(e);
        }
        return graph;
    }

    /// Random bijection of `nodes` onto fresh names.
    inline auto random_bijection(std::mt19937 & rng, const std::vector<NodeId> & nodes) -> NodeRelabeling
    {
        std::vector<NodeId> images;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            images.emplace_back("r" + std::to_string(i));
        std::shuffle(images.begin(), images.end(), rng);

        NodeRelabeling result;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            result.emplace(nodes[i], images[i]);
        return result;
    }
}
