#include <patgraph/cli.hpp>
#include <patgraph/matcher.hpp>
#include <patgraph/model_io.hpp>
#include <patgraph/oracle.hpp>
#include <patgraph/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>

namespace fs = std::filesystem;

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace patgraph::cli
{
    namespace
    {
        struct Failure
        {
            int code;
            string message;
        };

        auto load_model(const string & path) -> ClassGraph
        {
            try {
                auto graph = read_model_file(path);
                if (graph.name().empty())
                    graph.set_name(fs::path{path}.stem().string());
                return graph;
            }
            catch (const ParseError & e) {
                throw Failure{UsageOrParseError, path + ": " + e.what()};
            }
            catch (const CatalogError & e) {
                throw Failure{UsageOrParseError, e.what()};
            }
        }

        auto resolve_catalog(const optional<string> & catalog_path) -> PatternCatalog
        {
            optional<string> location = catalog_path;
            if (! location)
                if (const char * env = std::getenv(catalog_env_var); env && *env)
                    location = env;

            try {
                return location ? load_catalog(*location) : builtin_catalog();
            }
            catch (const CatalogError & e) {
                throw Failure{UsageOrParseError, e.what()};
            }
        }

        auto join(const vector<string> & items) -> string
        {
            string result;
            for (const auto & s : items)
                result += (result.empty() ? "" : ", ") + s;
            return result;
        }

        struct DetectArgs
        {
            string model_path;
            optional<string> pattern;
            bool all = false;
            optional<string> catalog;
            string format = "text";
            bool verify = false;
        };

        auto cmd_detect(const DetectArgs & args, ostream & out, ostream & err) -> int
        {
            auto model = load_model(args.model_path);
            auto catalog = resolve_catalog(args.catalog);

            vector<string> selected;
            if (args.pattern && ! args.all) {
                if (! catalog.find(*args.pattern))
                    throw Failure{UsageOrParseError,
                        "unknown pattern '" + *args.pattern + "'; available: " + join(catalog.names())};
                selected.push_back(fold_case(*args.pattern));
            }
            else {
                selected = catalog.names();
            }

            int status = Success;
            vector<DetectionReport> results;
            for (const auto & name : selected) {
                const auto & pattern = catalog.at(name).graph;
                auto report = detect(model.edges(), pattern.edges());
                report.pattern_name = name;

                if (args.verify) {
                    if (! within_oracle_limits(model.edges(), pattern.edges())) {
                        err << "warning: " << name << ": model exceeds the oracle size guard, verification skipped\n";
                    }
                    else {
                        auto expected = oracle_detect(model.edges(), pattern.edges());
                        if (expected.verdict != report.verdict || expected.level != report.level ||
                            expected.occurrences != report.occurrences ||
                            expected.table.row_sets() != report.table.row_sets()) {
                            err << "error: " << name << ": verification mismatch (matcher "
                                << verdict_name(report.verdict) << "/" << report.level << "/" << report.occurrences
                                << ", oracle " << verdict_name(expected.verdict) << "/" << expected.level << "/"
                                << expected.occurrences << ")\n";
                            status = VerificationMismatch;
                        }
                    }
                }
                results.push_back(std::move(report));
            }

            auto document = make_report(model.name(), std::move(results), catalog.names());
            out << (args.format == "json" ? render_structured(document) : render_text(document));
            return status;
        }

        auto cmd_list(const optional<string> & catalog_path, ostream & out) -> int
        {
            auto catalog = resolve_catalog(catalog_path);

            std::size_t width = 0;
            for (const auto & [name, entry] : catalog.entries())
                width = std::max(width, name.size());

            for (const auto & [name, entry] : catalog.entries())
                out << std::left << std::setw(static_cast<int>(width)) << name << "  nodes=" << entry.graph.nodes().size()
                    << " edges=" << entry.graph.edges().size() << "  " << (entry.builtin ? "builtin" : "user") << '\n';
            return Success;
        }

        auto cmd_validate(const string & model_path, ostream & out, ostream & err) -> int
        {
            auto model = load_model(model_path);

            auto problems = check_invariants(model);
            for (const auto & p : problems)
                err << "error: " << model_path << ": " << p << '\n';
            if (! problems.empty())
                return UsageOrParseError;

            std::size_t counts[3] = {0, 0, 0}, loops = 0;
            for (const auto & e : model.edges()) {
                ++counts[relation_code(e.relation()) - 1];
                loops += static_cast<std::size_t>(e.self_loop());
            }

            out << "valid: " << model_path << '\n'
                << "model: " << model.name() << '\n'
                << "nodes: " << model.nodes().size() << '\n'
                << "edges: " << model.edges().size() << '\n'
                << "  assoc: " << counts[0] << '\n'
                << "  dep: " << counts[1] << '\n'
                << "  gen: " << counts[2] << '\n'
                << "  self-loops: " << loops << '\n';
            return Success;
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{"Detects design patterns in class-model graphs", "patgraph"};
        app.require_subcommand(1);
        app.set_version_flag("--version", string{tool_version});

        DetectArgs detect_args;
        auto * detect = app.add_subcommand("detect", "Detect catalog patterns in a model");
        detect->add_option("model", detect_args.model_path, "Model file (.cg)")->required();
        auto * pattern_opt = detect->add_option("-p,--pattern", detect_args.pattern, "Pattern name");
        auto * all_flag = detect->add_flag("-a,--all", detect_args.all, "Run every catalog pattern (default)");
        pattern_opt->excludes(all_flag);
        detect->add_option("-c,--catalog", detect_args.catalog, "Catalog directory or file");
        detect->add_option("-f,--format", detect_args.format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        detect->add_flag("--verify", detect_args.verify, "Cross-check against the brute-force oracle");

        optional<string> list_catalog;
        auto * list = app.add_subcommand("list", "List catalog patterns");
        list->add_option("-c,--catalog", list_catalog, "Catalog directory or file");

        string validate_path;
        auto * validate = app.add_subcommand("validate", "Check a model file");
        validate->add_option("model", validate_path, "Model file (.cg)")->required();

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? Success : UsageOrParseError;
        }

        try {
            if (detect->parsed())
                return cmd_detect(detect_args, out, err);
            if (list->parsed())
                return cmd_list(list_catalog, out);
            return cmd_validate(validate_path, out, err);
        }
        catch (const Failure & f) {
            err << "error: " << f.message << '\n';
            return f.code;
        }
    }
}
