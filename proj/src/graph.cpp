#include <patgraph/graph.hpp>

#include <algorithm>
#include <numeric>

using std::string;
using std::string_view;
using std::vector;

namespace patgraph
{
    auto relation_from_code(int code) -> RelationKind
    {
        switch (code) {
            case 1: return RelationKind::Association;
            case 2: return RelationKind::Dependency;
            case 3: return RelationKind::Generalization;
        }
        throw InvalidRelationError{"relation code must be 1, 2 or 3, got " + std::to_string(code)};
    }

    auto relation_keyword(RelationKind kind) -> string_view
    {
        switch (kind) {
            case RelationKind::Association: return "assoc";
            case RelationKind::Dependency: return "dep";
            case RelationKind::Generalization: return "gen";
        }
        return "?";
    }

    auto is_valid_identifier(string_view name) -> bool
    {
        if (name.empty())
            return false;
        return std::none_of(name.begin(), name.end(), [](char c) {
            auto u = static_cast<unsigned char>(c);
            return u <= 0x20 || u == 0x7f || c == '#';
        });
    }

    NodeId::NodeId(string name) : name_(std::move(name))
    {
        if (! is_valid_identifier(name_))
            throw InvalidNodeError{"invalid node identifier '" + name_ + "'"};
    }

    EdgeTuple::EdgeTuple(NodeId source, NodeId target, RelationKind relation) :
        source_(std::move(source)),
        target_(std::move(target)),
        relation_(relation),
        self_loop_(source_ == target_)
    {
        relation_from_code(relation_code(relation));
    }

    auto EdgeTuple::to_string() const -> string
    {
        return "(" + source_.str() + "," + target_.str() + "," + std::to_string(relation_code(relation_)) + "," +
            std::to_string(self_loop()) + ")";
    }

    auto make_edge(const NodeId & source, const NodeId & target, RelationKind relation) -> EdgeTuple
    {
        return EdgeTuple{source, target, relation};
    }

    auto make_edge(string_view source, string_view target, RelationKind relation) -> EdgeTuple
    {
        return EdgeTuple{NodeId{string{source}}, NodeId{string{target}}, relation};
    }

    auto ClassGraph::add_node(const NodeId & node) -> bool
    {
        return nodes_.insert(node).second;
    }

    auto ClassGraph::add_edge(const EdgeTuple & edge) -> bool
    {
        nodes_.insert(edge.source());
        nodes_.insert(edge.target());
        return edges_.insert(edge).second;
    }

    auto edge_set(const ClassGraph & graph) -> const EdgeSet &
    {
        return graph.edges();
    }

    auto graph_from_edges(string name, const EdgeSet & edges) -> ClassGraph
    {
        ClassGraph graph{std::move(name)};
        for (const auto & e : edges)
            graph.add_edge(e);
        return graph;
    }

    namespace
    {
        template <typename Range>
        auto weakly_connected(const Range & edges) -> bool
        {
            if (edges.empty())
                throw PreconditionError{"connectivity of an empty edge set is undefined"};

            std::map<NodeId, std::size_t> index;
            for (const auto & e : edges) {
                index.emplace(e.source(), index.size());
                index.emplace(e.target(), index.size());
            }

            vector<std::size_t> parent(index.size());
            std::iota(parent.begin(), parent.end(), std::size_t{0});
            auto find = [&](std::size_t x) {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            };

            std::size_t components = index.size();
            for (const auto & e : edges) {
                auto a = find(index.at(e.source())), b = find(index.at(e.target()));
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
            return components == 1;
        }
    }

    auto is_weakly_connected(const EdgeSet & edges) -> bool
    {
        return weakly_connected(edges);
    }

    auto is_weakly_connected(const vector<EdgeTuple> & edges) -> bool
    {
        return weakly_connected(edges);
    }

    auto relabel(const EdgeTuple & edge, const NodeRelabeling & relabeling) -> EdgeTuple
    {
        auto apply = [&](const NodeId & n) {
            auto it = relabeling.find(n);
            return it == relabeling.end() ? n : it->second;
        };
        return EdgeTuple{apply(edge.source()), apply(edge.target()), edge.relation()};
    }

    auto relabel(const EdgeSet & edges, const NodeRelabeling & relabeling) -> EdgeSet
    {
        EdgeSet result;
        for (const auto & e : edges)
            result.insert(relabel(e, relabeling));
        return result;
    }

    auto relabel(const ClassGraph & graph, const NodeRelabeling & relabeling) -> ClassGraph
    {
        ClassGraph result{graph.name()};
        for (const auto & n : graph.nodes()) {
            auto it = relabeling.find(n);
            result.add_node(it == relabeling.end() ? n : it->second);
        }
        for (const auto & e : graph.edges())
            result.add_edge(relabel(e, relabeling));
        return result;
    }

    auto endpoint_nodes(const EdgeSet & edges) -> vector<NodeId>
    {
        std::set<NodeId> nodes;
        for (const auto & e : edges) {
            nodes.insert(e.source());
            nodes.insert(e.target());
        }
        return {nodes.begin(), nodes.end()};
    }

    auto check_invariants(const ClassGraph & graph) -> vector<string>
    {
        vector<string> problems;
        for (const auto & e : graph.edges()) {
            if ((e.source() == e.target()) != (e.self_loop() == 1))
                problems.push_back("edge " + e.to_string() + " has an inconsistent self-loop flag");
            if (! graph.nodes().contains(e.source()))
                problems.push_back("edge " + e.to_string() + " references undeclared node " + e.source().str());
            if (! graph.nodes().contains(e.target()))
                problems.push_back("edge " + e.to_string() + " references undeclared node " + e.target().str());
        }
        return problems;
    }
}
