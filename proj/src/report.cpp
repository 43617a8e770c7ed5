#include <patgraph/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

using std::string;
using std::vector;

namespace patgraph
{
    auto make_report(string model_name, vector<DetectionReport> results, vector<string> catalog_names)
        -> ReportDocument
    {
        std::stable_sort(results.begin(), results.end(),
            [](const DetectionReport & a, const DetectionReport & b) { return a.pattern_name < b.pattern_name; });
        std::sort(catalog_names.begin(), catalog_names.end());

        ReportDocument document;
        document.model_name = std::move(model_name);
        document.results = std::move(results);
        document.catalog_names = std::move(catalog_names);
        return document;
    }

    auto verdict_sentence(const DetectionReport & report) -> string
    {
        switch (report.verdict) {
            case Verdict::Complete:
                return "The design pattern completely exists in the System design with " +
                    std::to_string(report.occurrences) + " times";
            case Verdict::Partial:
                return "The design pattern partially exists in the System design with " +
                    std::to_string(report.occurrences) + " times";
            case Verdict::Absent:
                return "The design pattern does not exist in the System design";
        }
        return {};
    }

    auto render_text(const ReportDocument & document) -> string
    {
        std::ostringstream out;
        out << "model: " << document.model_name << '\n';
        for (const auto & r : document.results) {
            out << '\n' << "[" << r.pattern_name << "] " << r.pattern_size << " edge"
                << (r.pattern_size == 1 ? "" : "s") << ", level " << r.level << '\n';
            out << verdict_sentence(r) << '\n';
            for (const auto & row : r.table.rows) {
                out << ' ';
                for (const auto & e : row.system_edges)
                    out << ' ' << e.to_string();
                out << '\n';
            }
        }
        return out.str();
    }

    namespace
    {
        using ordered_json = nlohmann::ordered_json;

        auto edge_json(const EdgeTuple & e) -> ordered_json
        {
            return ordered_json::array({e.source().str(), e.target().str(), relation_code(e.relation()), e.self_loop()});
        }

        auto edges_json(const vector<EdgeTuple> & edges) -> ordered_json
        {
            auto result = ordered_json::array();
            for (const auto & e : edges)
                result.push_back(edge_json(e));
            return result;
        }
    }

    auto render_structured(const ReportDocument & document) -> string
    {
        ordered_json root;
        root["tool_version"] = document.tool_version;
        root["model"] = document.model_name;
        root["catalog"] = document.catalog_names;

        auto results = ordered_json::array();
        for (const auto & r : document.results) {
            ordered_json item;
            item["pattern"] = r.pattern_name;
            item["pattern_edges"] = r.pattern_size;
            item["verdict"] = verdict_name(r.verdict);
            item["level"] = r.level;
            item["occurrences"] = r.occurrences;
            item["sentence"] = verdict_sentence(r);

            auto rows = ordered_json::array();
            for (const auto & row : r.table.rows) {
                ordered_json mapping = ordered_json::object();
                for (const auto & [p, s] : row.mapping.assignment())
                    mapping[p.str()] = s.str();
                rows.push_back(ordered_json{{"pattern_edges", edges_json(row.pattern_edges)},
                    {"system_edges", edges_json(row.system_edges)}, {"mapping", std::move(mapping)}});
            }
            item["table"] = ordered_json{{"level", r.table.level}, {"columns", r.table.column_count()},
                {"rows", std::move(rows)}};
            results.push_back(std::move(item));
        }
        root["results"] = std::move(results);
        return root.dump(2) + "\n";
    }
}
