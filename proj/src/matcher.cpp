#include <patgraph/matcher.hpp>

#include <algorithm>
#include <tuple>

using std::map;
using std::nullopt;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace patgraph
{
    auto NodeMapping::bind(const NodeId & pattern, const NodeId & system) const -> optional<NodeMapping>
    {
        if (auto bound = lookup(pattern))
            return *bound == system ? optional<NodeMapping>{*this} : nullopt;
        if (used_.contains(system))
            return nullopt;

        NodeMapping result{*this};
        result.forward_.emplace(pattern, system);
        result.used_.insert(system);
        return result;
    }

    auto NodeMapping::lookup(const NodeId & pattern) const -> const NodeId *
    {
        auto it = forward_.find(pattern);
        return it == forward_.end() ? nullptr : &it->second;
    }

    auto MatchTable::row_sets() const -> vector<EdgeSet>
    {
        vector<EdgeSet> result;
        result.reserve(rows.size());
        for (const auto & r : rows)
            result.push_back(r.system_edge_set());
        return result;
    }

    auto verdict_name(Verdict verdict) -> std::string_view
    {
        switch (verdict) {
            case Verdict::Complete: return "complete";
            case Verdict::Partial: return "partial";
            case Verdict::Absent: return "absent";
        }
        return "?";
    }

    auto classify(string pattern_name, size_t pattern_size, optional<MatchTable> table) -> DetectionReport
    {
        DetectionReport report;
        report.pattern_name = std::move(pattern_name);
        report.pattern_size = pattern_size;

        if (! table || table->empty()) {
            report.verdict = Verdict::Absent;
            return report;
        }

        report.level = table->level;
        report.occurrences = table->row_count();
        report.verdict = table->level == pattern_size ? Verdict::Complete : Verdict::Partial;
        report.table = std::move(*table);
        return report;
    }

    auto edge_compatible(const EdgeTuple & system_edge, const EdgeTuple & pattern_edge, const NodeMapping & mapping)
        -> optional<NodeMapping>
    {
        if (system_edge.relation() != pattern_edge.relation() || system_edge.self_loop() != pattern_edge.self_loop())
            return nullopt;

        auto with_source = mapping.bind(pattern_edge.source(), system_edge.source());
        if (! with_source)
            return nullopt;
        return with_source->bind(pattern_edge.target(), system_edge.target());
    }

    auto pattern_subsets(const EdgeSet & pattern, size_t n) -> vector<vector<EdgeTuple>>
    {
        if (n == 0 || n > pattern.size())
            throw PreconditionError{"level " + std::to_string(n) + " outside 1.." + std::to_string(pattern.size())};

        vector<EdgeTuple> edges(pattern.begin(), pattern.end());
        if (n == edges.size())
            return {edges};

        // Lexicographic walk over index combinations.
        vector<vector<EdgeTuple>> result;
        vector<size_t> pick(n);
        for (size_t i = 0; i < n; ++i)
            pick[i] = i;

        while (true) {
            vector<EdgeTuple> subset;
            subset.reserve(n);
            for (auto i : pick)
                subset.push_back(edges[i]);
            if (is_weakly_connected(subset))
                result.push_back(std::move(subset));

            size_t k = n;
            while (k > 0 && pick[k - 1] == edges.size() - n + k - 1)
                --k;
            if (k == 0)
                break;
            ++pick[k - 1];
            for (size_t j = k; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return result;
    }

    namespace
    {
        auto relation_histogram(const auto & edges) -> std::array<size_t, 3>
        {
            std::array<size_t, 3> counts{};
            for (const auto & e : edges)
                ++counts[relation_code(e.relation()) - 1];
            return counts;
        }
    }

    auto candidate_prune(const EdgeSet & system, const EdgeSet & pattern, size_t n) -> SearchSpace
    {
        SearchSpace space;
        space.system_counts = relation_histogram(system);

        for (auto & subset : pattern_subsets(pattern, n)) {
            auto demand = relation_histogram(subset);
            bool feasible = true;
            for (size_t code = 0; code < demand.size(); ++code)
                feasible = feasible && demand[code] <= space.system_counts[code];

            if (feasible)
                space.pattern_subsets.push_back(std::move(subset));
            else
                ++space.pruned_subsets;
        }
        return space;
    }

    namespace
    {
        using Label = std::pair<RelationKind, int>;
        using AnchoredLabel = std::tuple<NodeId, RelationKind, int>;

        auto label_of(const EdgeTuple & e) -> Label
        {
            return {e.relation(), e.self_loop()};
        }

        /// Edge-driven backtracking: pattern edges are placed one at a time,
        /// each drawing candidates from the system edges that share its label
        /// and, where possible, an already-mapped endpoint.
        class EdgeSearch
        {
        public:
            explicit EdgeSearch(const EdgeSet & system)
            {
                for (const auto & e : system) {
                    by_label_[label_of(e)].push_back(&e);
                    by_source_[{e.source(), e.relation(), e.self_loop()}].push_back(&e);
                    by_target_[{e.target(), e.relation(), e.self_loop()}].push_back(&e);
                }
            }

            void run(const vector<EdgeTuple> & pattern)
            {
                pattern_ = &pattern;
                order_ = placement_order(pattern);
                chosen_.assign(pattern.size(), nullptr);
                extend(0, NodeMapping{});
            }

            auto take_table(size_t level) -> MatchTable
            {
                MatchTable table;
                table.level = level;
                for (auto & [key, row] : rows_)
                    table.rows.push_back(std::move(row));
                rows_.clear();
                return table;
            }

        private:
            auto bucket(const Label & label) const -> const vector<const EdgeTuple *> &
            {
                auto it = by_label_.find(label);
                return it == by_label_.end() ? empty_ : it->second;
            }

            auto anchored(const map<AnchoredLabel, vector<const EdgeTuple *>> & index, const NodeId & node,
                const EdgeTuple & pe) const -> const vector<const EdgeTuple *> &
            {
                auto it = index.find({node, pe.relation(), pe.self_loop()});
                return it == index.end() ? empty_ : it->second;
            }

            /// Rarest label first, then prefer edges touching nodes already
            /// placed so later candidates come from the anchored indexes.
            auto placement_order(const vector<EdgeTuple> & pattern) const -> vector<size_t>
            {
                vector<size_t> order;
                vector<bool> placed(pattern.size(), false);
                std::set<NodeId> touched;

                while (order.size() < pattern.size()) {
                    optional<size_t> best;
                    bool best_anchored = false;
                    for (size_t i = 0; i < pattern.size(); ++i) {
                        if (placed[i])
                            continue;
                        bool is_anchored =
                            touched.contains(pattern[i].source()) || touched.contains(pattern[i].target());
                        auto size = bucket(label_of(pattern[i])).size();
                        if (! best || (is_anchored && ! best_anchored) ||
                            (is_anchored == best_anchored && size < bucket(label_of(pattern[*best])).size())) {
                            best = i;
                            best_anchored = is_anchored;
                        }
                    }
                    placed[*best] = true;
                    order.push_back(*best);
                    touched.insert(pattern[*best].source());
                    touched.insert(pattern[*best].target());
                }
                return order;
            }

            auto candidates(const EdgeTuple & pe, const NodeMapping & mapping) const
                -> const vector<const EdgeTuple *> &
            {
                if (auto s = mapping.lookup(pe.source()))
                    return anchored(by_source_, *s, pe);
                if (auto t = mapping.lookup(pe.target()))
                    return anchored(by_target_, *t, pe);
                return bucket(label_of(pe));
            }

            void extend(size_t depth, const NodeMapping & mapping)
            {
                if (depth == order_.size()) {
                    record(mapping);
                    return;
                }

                auto slot = order_[depth];
                const auto & pe = (*pattern_)[slot];
                for (const auto * se : candidates(pe, mapping)) {
                    // Injectivity makes the chosen system edges pairwise distinct.
                    if (auto extended = edge_compatible(*se, pe, mapping)) {
                        chosen_[slot] = se;
                        extend(depth + 1, *extended);
                    }
                }
                chosen_[slot] = nullptr;
            }

            void record(const NodeMapping & mapping)
            {
                MatchRow row;
                row.pattern_edges = *pattern_;
                for (const auto * se : chosen_)
                    row.system_edges.push_back(*se);
                if (! is_weakly_connected(row.system_edges))
                    return;
                row.mapping = mapping;

                auto key = row.system_edges;
                std::sort(key.begin(), key.end());

                // Several (subset, mapping) pairs can hit one system-edge set;
                // keep the lexicographically least so the row is canonical.
                auto [it, inserted] = rows_.try_emplace(std::move(key), row);
                if (! inserted && std::tie(row.pattern_edges, row.system_edges) <
                        std::tie(it->second.pattern_edges, it->second.system_edges))
                    it->second = std::move(row);
            }

            map<Label, vector<const EdgeTuple *>> by_label_;
            map<AnchoredLabel, vector<const EdgeTuple *>> by_source_;
            map<AnchoredLabel, vector<const EdgeTuple *>> by_target_;
            const vector<const EdgeTuple *> empty_;

            const vector<EdgeTuple> * pattern_ = nullptr;
            vector<size_t> order_;
            vector<const EdgeTuple *> chosen_;
            map<vector<EdgeTuple>, MatchRow> rows_;
        };
    }

    auto find_matches(const EdgeSet & system, const EdgeSet & pattern, size_t n, MatchOptions options) -> MatchTable
    {
        auto subsets = options.prune ? candidate_prune(system, pattern, n).pattern_subsets : pattern_subsets(pattern, n);

        EdgeSearch search{system};
        for (const auto & subset : subsets)
            search.run(subset);
        return search.take_table(n);
    }

    auto detect(const EdgeSet & system, const EdgeSet & pattern, MatchOptions options) -> DetectionReport
    {
        if (pattern.empty())
            throw InvalidPatternError{"pattern has no edges"};

        for (size_t n = pattern.size(); n > 0; --n) {
            auto table = find_matches(system, pattern, n, options);
            if (! table.empty())
                return classify({}, pattern.size(), std::move(table));
        }
        return classify({}, pattern.size(), nullopt);
    }

    auto detect(const ClassGraph & system, const ClassGraph & pattern, MatchOptions options) -> DetectionReport
    {
        auto report = detect(system.edges(), pattern.edges(), options);
        report.pattern_name = pattern.name();
        return report;
    }
}
