#pragma once

#include <patgraph/matcher.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace patgraph
{
    inline constexpr std::string_view tool_version = "1.0.0";

    struct ReportDocument
    {
        std::string model_name;
        std::vector<DetectionReport> results;
        std::string tool_version{patgraph::tool_version};
        std::vector<std::string> catalog_names;
    };

    /// Sorts results by pattern name.
    auto make_report(std::string model_name, std::vector<DetectionReport> results,
        std::vector<std::string> catalog_names) -> ReportDocument;

    /// One of the three output sentences, e.g.
    /// "The design pattern completely exists in the System design with 3 times".
    auto verdict_sentence(const DetectionReport & report) -> std::string;

    auto render_text(const ReportDocument & document) -> std::string;

    /// JSON with a fixed key order.
    auto render_structured(const ReportDocument & document) -> std::string;
}
