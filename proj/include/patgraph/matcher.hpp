#pragma once

#include <patgraph/graph.hpp>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patgraph
{
    class InvalidPatternError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Injective partial map from pattern nodes to system nodes.
    class NodeMapping
    {
    public:
        /// Binds pattern -> system. Returns nullopt if the pattern node is
        /// bound elsewhere or the system node is already taken by another
        /// pattern node. Rebinding an identical pair is a no-op.
        auto bind(const NodeId & pattern, const NodeId & system) const -> std::optional<NodeMapping>;

        auto lookup(const NodeId & pattern) const -> const NodeId *;
        auto is_system_node_used(const NodeId & system) const -> bool { return used_.contains(system); }

        auto assignment() const noexcept -> const std::map<NodeId, NodeId> & { return forward_; }
        auto size() const noexcept -> std::size_t { return forward_.size(); }
        auto empty() const noexcept -> bool { return forward_.empty(); }

        friend auto operator==(const NodeMapping & a, const NodeMapping & b) -> bool
        {
            return a.forward_ == b.forward_;
        }

    private:
        std::map<NodeId, NodeId> forward_;
        std::set<NodeId> used_;
    };

    /// One Poss row: pattern_edges[i] is realised by system_edges[i].
    struct MatchRow
    {
        std::vector<EdgeTuple> pattern_edges;
        std::vector<EdgeTuple> system_edges;
        NodeMapping mapping;

        /// The row's identity: its system edges as a set.
        auto system_edge_set() const -> EdgeSet { return {system_edges.begin(), system_edges.end()}; }

        friend auto operator==(const MatchRow &, const MatchRow &) -> bool = default;
    };

    /// All distinct matched system-edge subsets at one level. Rows are sorted
    /// by their sorted system edges.
    struct MatchTable
    {
        std::size_t level = 0;
        std::vector<MatchRow> rows;

        auto row_count() const noexcept -> std::size_t { return rows.size(); }
        auto column_count() const noexcept -> std::size_t { return rows.empty() ? 0 : level; }
        auto empty() const noexcept -> bool { return rows.empty(); }

        /// Sorted system-edge sets, one per row.
        auto row_sets() const -> std::vector<EdgeSet>;

        friend auto operator==(const MatchTable &, const MatchTable &) -> bool = default;
    };

    enum class Verdict
    {
        Complete,
        Partial,
        Absent,
    };

    auto verdict_name(Verdict verdict) -> std::string_view;

    struct DetectionReport
    {
        std::string pattern_name;
        std::size_t pattern_size = 0;
        Verdict verdict = Verdict::Absent;
        std::size_t level = 0;
        std::size_t occurrences = 0;
        MatchTable table;
    };

    /// Builds a report from the first non-empty table found while walking n
    /// down from |DPE|, or Absent if there was none.
    auto classify(std::string pattern_name, std::size_t pattern_size, std::optional<MatchTable> table)
        -> DetectionReport;

    auto edge_compatible(const EdgeTuple & system_edge, const EdgeTuple & pattern_edge, const NodeMapping & mapping)
        -> std::optional<NodeMapping>;

    /// Result of candidate_prune: relation-code histogram of SE and the
    /// pattern subsets of size n that survive the counting argument.
    struct SearchSpace
    {
        std::array<std::size_t, 3> system_counts{};
        std::vector<std::vector<EdgeTuple>> pattern_subsets;
        std::size_t pruned_subsets = 0;
    };

    /// Eligible size-n subsets of DPE: DPE itself when n == |DPE|, otherwise
    /// every weakly connected subset. Each subset is sorted; the list is in
    /// lexicographic order.
    auto pattern_subsets(const EdgeSet & pattern, std::size_t n) -> std::vector<std::vector<EdgeTuple>>;

    auto candidate_prune(const EdgeSet & system, const EdgeSet & pattern, std::size_t n) -> SearchSpace;

    struct MatchOptions
    {
        bool prune = true;
    };

    /// Throws PreconditionError unless 0 < n <= |DPE|.
    auto find_matches(const EdgeSet & system, const EdgeSet & pattern, std::size_t n, MatchOptions options = {})
        -> MatchTable;

    /// Throws InvalidPatternError for an empty pattern.
    auto detect(const EdgeSet & system, const EdgeSet & pattern, MatchOptions options = {}) -> DetectionReport;
    auto detect(const ClassGraph & system, const ClassGraph & pattern, MatchOptions options = {})
        -> DetectionReport;
}
