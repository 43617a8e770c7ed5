#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patgraph
{
    /// Edge label of a class relationship. The numeric values are the codes
    /// used in the 4-tuple encoding and in every serialized form.
    enum class RelationKind : std::uint8_t
    {
        Association = 1,
        Dependency = 2,
        Generalization = 3,
    };

    inline constexpr int relation_code(RelationKind kind) { return static_cast<int>(kind); }

    /// Throws InvalidRelationError for anything outside {1, 2, 3}.
    auto relation_from_code(int code) -> RelationKind;

    auto relation_keyword(RelationKind kind) -> std::string_view;

    class InvalidNodeError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class InvalidRelationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class PreconditionError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    /// Class name / vertex label. Non-empty, no whitespace, no '#'.
    class NodeId
    {
    public:
        explicit NodeId(std::string name);

        auto str() const noexcept -> const std::string & { return name_; }

        friend auto operator<=>(const NodeId &, const NodeId &) = default;
        friend auto operator==(const NodeId &, const NodeId &) -> bool = default;

    private:
        std::string name_;
    };

    auto is_valid_identifier(std::string_view name) -> bool;

    /// Directed typed edge (source, target, relation, self_loop). The loop
    /// flag is derived from source == target and cannot be set directly.
    class EdgeTuple
    {
    public:
        EdgeTuple(NodeId source, NodeId target, RelationKind relation);

        auto source() const noexcept -> const NodeId & { return source_; }
        auto target() const noexcept -> const NodeId & { return target_; }
        auto relation() const noexcept -> RelationKind { return relation_; }
        auto self_loop() const noexcept -> int { return self_loop_ ? 1 : 0; }

        /// "(a,b,1,0)"
        auto to_string() const -> std::string;

        friend auto operator<=>(const EdgeTuple &, const EdgeTuple &) = default;
        friend auto operator==(const EdgeTuple &, const EdgeTuple &) -> bool = default;

    private:
        NodeId source_;
        NodeId target_;
        RelationKind relation_;
        bool self_loop_;
    };

    using EdgeSet = std::set<EdgeTuple>;

    auto make_edge(const NodeId & source, const NodeId & target, RelationKind relation) -> EdgeTuple;
    auto make_edge(std::string_view source, std::string_view target, RelationKind relation) -> EdgeTuple;

    /// Named directed multigraph over class names. Parallel edges are allowed
    /// only when their relation codes differ; identical tuples collapse.
    class ClassGraph
    {
    public:
        ClassGraph() = default;
        explicit ClassGraph(std::string name) : name_(std::move(name)) {}

        auto name() const noexcept -> const std::string & { return name_; }
        void set_name(std::string name) { name_ = std::move(name); }

        /// Returns false if the node was already present.
        auto add_node(const NodeId & node) -> bool;

        /// Inserts both endpoints as nodes. Returns false for a duplicate tuple.
        auto add_edge(const EdgeTuple & edge) -> bool;

        auto nodes() const noexcept -> const std::set<NodeId> & { return nodes_; }
        auto edges() const noexcept -> const EdgeSet & { return edges_; }

        friend auto operator==(const ClassGraph &, const ClassGraph &) -> bool = default;

    private:
        std::string name_;
        std::set<NodeId> nodes_;
        EdgeSet edges_;
    };

    auto edge_set(const ClassGraph & graph) -> const EdgeSet &;

    auto graph_from_edges(std::string name, const EdgeSet & edges) -> ClassGraph;

    /// True iff the edges form one component when direction is ignored.
    /// Throws PreconditionError on an empty input.
    auto is_weakly_connected(const EdgeSet & edges) -> bool;
    auto is_weakly_connected(const std::vector<EdgeTuple> & edges) -> bool;

    using NodeRelabeling = std::map<NodeId, NodeId>;

    /// Nodes missing from the relabeling keep their names.
    auto relabel(const EdgeTuple & edge, const NodeRelabeling & relabeling) -> EdgeTuple;
    auto relabel(const EdgeSet & edges, const NodeRelabeling & relabeling) -> EdgeSet;
    auto relabel(const ClassGraph & graph, const NodeRelabeling & relabeling) -> ClassGraph;

    /// Re-checks the structural invariants (loop flags, edge endpoints being
    /// nodes). Returns one message per violation; empty means well-formed.
    auto check_invariants(const ClassGraph & graph) -> std::vector<std::string>;

    /// Nodes touched by at least one edge, sorted.
    auto endpoint_nodes(const EdgeSet & edges) -> std::vector<NodeId>;
}
