#pragma once

#include <patgraph/graph.hpp>
#include <patgraph/matcher.hpp>

#include <stdexcept>

namespace patgraph
{
    /// Brute-force reference for find_matches / detect. It enumerates node
    /// mappings first and derives edges from them, the reverse of the
    /// matcher's edge-driven search. Desk-scale inputs only.
    class OracleGuardError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct OracleLimits
    {
        std::size_t max_system_edges = 12;
        std::size_t max_system_nodes = 8;
        std::size_t max_pattern_edges = 16;
    };

    auto within_oracle_limits(const EdgeSet & system, const EdgeSet & pattern, const OracleLimits & limits = {})
        -> bool;

    auto oracle_find_matches(const EdgeSet & system, const EdgeSet & pattern, std::size_t n,
        const OracleLimits & limits = {}) -> MatchTable;

    auto oracle_detect(const EdgeSet & system, const EdgeSet & pattern, const OracleLimits & limits = {})
        -> DetectionReport;
}
