#include <patgraph/oracle.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

using std::map;
using std::size_t;
using std::vector;

namespace patgraph
{
    namespace
    {
        // Kept separate from graph-core's union-find on purpose.
        auto connected_by_bfs(const vector<EdgeTuple> & edges) -> bool
        {
            map<NodeId, vector<NodeId>> adjacent;
            for (const auto & e : edges) {
                adjacent[e.source()].push_back(e.target());
                adjacent[e.target()].push_back(e.source());
            }

            std::set<NodeId> seen{adjacent.begin()->first};
            std::deque<NodeId> frontier{adjacent.begin()->first};
            while (! frontier.empty()) {
                auto node = frontier.front();
                frontier.pop_front();
                for (const auto & next : adjacent[node])
                    if (seen.insert(next).second)
                        frontier.push_back(next);
            }
            return seen.size() == adjacent.size();
        }

        struct Collector
        {
            const EdgeSet & system;
            const vector<NodeId> & system_nodes;
            const vector<EdgeTuple> & subset;
            vector<NodeId> pattern_nodes;
            map<vector<EdgeTuple>, MatchRow> & rows;

            vector<size_t> image;
            vector<bool> taken;

            void assign(size_t k)
            {
                if (k == pattern_nodes.size()) {
                    check();
                    return;
                }
                for (size_t s = 0; s < system_nodes.size(); ++s) {
                    if (taken[s])
                        continue;
                    taken[s] = true;
                    image[k] = s;
                    assign(k + 1);
                    taken[s] = false;
                }
            }

            auto image_of(const NodeId & p) const -> const NodeId &
            {
                auto pos = std::lower_bound(pattern_nodes.begin(), pattern_nodes.end(), p) - pattern_nodes.begin();
                return system_nodes[image[pos]];
            }

            void check()
            {
                vector<EdgeTuple> aligned;
                for (const auto & pe : subset) {
                    EdgeTuple candidate{image_of(pe.source()), image_of(pe.target()), pe.relation()};
                    if (candidate.self_loop() != pe.self_loop() || ! system.contains(candidate))
                        return;
                    aligned.push_back(std::move(candidate));
                }

                auto key = aligned;
                std::sort(key.begin(), key.end());
                if (std::adjacent_find(key.begin(), key.end()) != key.end())
                    return;
                if (! connected_by_bfs(aligned))
                    return;

                MatchRow row;
                row.pattern_edges = subset;
                row.system_edges = aligned;
                for (size_t i = 0; i < pattern_nodes.size(); ++i)
                    row.mapping = *row.mapping.bind(pattern_nodes[i], system_nodes[image[i]]);

                auto [it, inserted] = rows.try_emplace(std::move(key), row);
                if (! inserted && std::tie(row.pattern_edges, row.system_edges) <
                        std::tie(it->second.pattern_edges, it->second.system_edges))
                    it->second = std::move(row);
            }
        };

        void enforce(const EdgeSet & system, const EdgeSet & pattern, const OracleLimits & limits)
        {
            if (! within_oracle_limits(system, pattern, limits))
                throw OracleGuardError{"oracle size guard exceeded: " + std::to_string(system.size()) +
                    " system edges, " + std::to_string(endpoint_nodes(system).size()) + " system nodes, " +
                    std::to_string(pattern.size()) + " pattern edges (limits " +
                    std::to_string(limits.max_system_edges) + "/" + std::to_string(limits.max_system_nodes) + "/" +
                    std::to_string(limits.max_pattern_edges) + ")"};
        }
    }

    auto within_oracle_limits(const EdgeSet & system, const EdgeSet & pattern, const OracleLimits & limits) -> bool
    {
        return system.size() <= limits.max_system_edges &&
            endpoint_nodes(system).size() <= limits.max_system_nodes && pattern.size() <= limits.max_pattern_edges;
    }

    auto oracle_find_matches(const EdgeSet & system, const EdgeSet & pattern, size_t n, const OracleLimits & limits)
        -> MatchTable
    {
        if (n == 0 || n > pattern.size())
            throw PreconditionError{"oracle level out of range"};
        enforce(system, pattern, limits);

        vector<EdgeTuple> all(pattern.begin(), pattern.end());
        auto system_nodes = endpoint_nodes(system);
        map<vector<EdgeTuple>, MatchRow> rows;

        for (unsigned long mask = 1; mask < (1ul << all.size()); ++mask) {
            if (static_cast<size_t>(__builtin_popcountl(mask)) != n)
                continue;

            vector<EdgeTuple> subset;
            for (size_t i = 0; i < all.size(); ++i)
                if (mask & (1ul << i))
                    subset.push_back(all[i]);
            if (n < all.size() && ! connected_by_bfs(subset))
                continue;

            std::set<NodeId> nodes;
            for (const auto & e : subset) {
                nodes.insert(e.source());
                nodes.insert(e.target());
            }
            if (nodes.size() > system_nodes.size())
                continue;

            Collector collector{system, system_nodes, subset, {nodes.begin(), nodes.end()}, rows, {}, {}};
            collector.image.assign(collector.pattern_nodes.size(), 0);
            collector.taken.assign(system_nodes.size(), false);
            collector.assign(0);
        }

        MatchTable table;
        table.level = n;
        for (auto & [key, row] : rows)
            table.rows.push_back(std::move(row));
        return table;
    }

    auto oracle_detect(const EdgeSet & system, const EdgeSet & pattern, const OracleLimits & limits)
        -> DetectionReport
    {
        if (pattern.empty())
            throw InvalidPatternError{"pattern has no edges"};
        enforce(system, pattern, limits);

        auto n = pattern.size();
        MatchTable table;
        while (n != 0) {
            table = oracle_find_matches(system, pattern, n, limits);
            if (! table.empty())
                break;
            --n;
        }
        if (n == 0)
            return classify({}, pattern.size(), std::nullopt);
        return classify({}, pattern.size(), std::move(table));
    }
}
