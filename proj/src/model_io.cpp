#include <patgraph/model_io.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;

namespace fs = std::filesystem;

namespace patgraph
{
    ParseError::ParseError(std::size_t line, const string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line),
        detail_(message)
    {
    }

    namespace
    {
        auto tokenize(string_view line) -> vector<string>
        {
            if (auto hash = line.find('#'); hash != string_view::npos)
                line = line.substr(0, hash);

            vector<string> tokens;
            std::size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                auto start = pos;
                while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                if (pos > start)
                    tokens.emplace_back(line.substr(start, pos - start));
            }
            return tokens;
        }

        struct Directive
        {
            string_view keyword;
            DeclarationKind kind;
            std::size_t arity;
        };

        constexpr Directive directives[] = {
            {"class", DeclarationKind::Class, 1},
            {"assoc", DeclarationKind::Assoc, 2},
            {"dep", DeclarationKind::Dep, 2},
            {"gen", DeclarationKind::Gen, 2},
            {"selfassoc", DeclarationKind::SelfAssoc, 1},
        };

        auto model_header_name(string_view line) -> string
        {
            if (auto hash = line.find('#'); hash != string_view::npos)
                line = line.substr(0, hash);
            auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
            while (! line.empty() && is_space(line.front()))
                line.remove_prefix(1);
            line.remove_prefix(std::string_view{"model"}.size());
            while (! line.empty() && is_space(line.front()))
                line.remove_prefix(1);
            while (! line.empty() && is_space(line.back()))
                line.remove_suffix(1);
            return string{line};
        }
    }

    auto parse_document(string_view text) -> ModelDocument
    {
        ModelDocument document;
        std::size_t line_number = 0;
        std::size_t start = 0;

        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == string_view::npos)
                end = text.size();
            auto line = text.substr(start, end - start);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            ++line_number;
            start = end + 1;

            auto tokens = tokenize(line);
            if (tokens.empty())
                continue;

            if (tokens[0] == "model") {
                if (document.name)
                    throw ParseError{line_number, "duplicate model header"};
                document.name = model_header_name(line);
                continue;
            }

            auto directive = std::find_if(std::begin(directives), std::end(directives),
                [&](const Directive & d) { return d.keyword == tokens[0]; });
            if (directive == std::end(directives))
                throw ParseError{line_number, "unknown directive '" + tokens[0] + "'"};

            if (tokens.size() - 1 != directive->arity)
                throw ParseError{line_number,
                    "'" + tokens[0] + "' expects " + std::to_string(directive->arity) + " operand" +
                        (directive->arity == 1 ? "" : "s") + ", got " + std::to_string(tokens.size() - 1)};

            for (std::size_t i = 1; i < tokens.size(); ++i)
                if (! is_valid_identifier(tokens[i]))
                    throw ParseError{line_number, "invalid identifier '" + tokens[i] + "'"};

            document.declarations.push_back(
                Declaration{directive->kind, vector<string>(tokens.begin() + 1, tokens.end()), line_number});
        }

        return document;
    }

    auto to_graph(const ModelDocument & document) -> ClassGraph
    {
        ClassGraph graph{document.name.value_or("")};
        std::set<string> declared;

        for (const auto & d : document.declarations) {
            const auto & ops = d.operands;
            switch (d.kind) {
                case DeclarationKind::Class:
                    if (! declared.insert(ops[0]).second)
                        throw ParseError{d.line, "duplicate class declaration '" + ops[0] + "'"};
                    graph.add_node(NodeId{ops[0]});
                    break;
                case DeclarationKind::Assoc:
                    graph.add_edge(make_edge(ops[0], ops[1], RelationKind::Association));
                    break;
                case DeclarationKind::Dep:
                    graph.add_edge(make_edge(ops[0], ops[1], RelationKind::Dependency));
                    break;
                case DeclarationKind::Gen:
                    graph.add_edge(make_edge(ops[0], ops[1], RelationKind::Generalization));
                    break;
                case DeclarationKind::SelfAssoc:
                    graph.add_edge(make_edge(ops[0], ops[0], RelationKind::Association));
                    break;
            }
        }
        return graph;
    }

    auto parse_model(string_view text) -> ClassGraph
    {
        return to_graph(parse_document(text));
    }

    auto render_model(const ClassGraph & graph) -> string
    {
        std::ostringstream out;
        out << "model";
        if (! graph.name().empty())
            out << ' ' << graph.name();
        out << '\n';

        for (const auto & n : graph.nodes())
            out << "class " << n.str() << '\n';

        for (const auto & e : graph.edges()) {
            if (e.self_loop() && e.relation() == RelationKind::Association)
                out << "selfassoc " << e.source().str() << '\n';
            else
                out << relation_keyword(e.relation()) << ' ' << e.source().str() << ' ' << e.target().str() << '\n';
        }
        return out.str();
    }

    auto read_model_file(const fs::path & path) -> ClassGraph
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw CatalogError{"cannot open '" + path.string() + "'"};
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_model(buffer.str());
    }

    auto fold_case(string_view name) -> string
    {
        string result{name};
        std::transform(result.begin(), result.end(), result.begin(),
            [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return result;
    }

    void PatternCatalog::put(ClassGraph graph, bool builtin, fs::path source)
    {
        if (graph.edges().empty())
            throw CatalogError{"pattern '" + graph.name() + "': pattern has no edges"};
        auto key = fold_case(graph.name());
        entries_.insert_or_assign(key, CatalogEntry{std::move(graph), builtin, std::move(source)});
    }

    auto PatternCatalog::find(string_view name) const -> const CatalogEntry *
    {
        auto it = entries_.find(fold_case(name));
        return it == entries_.end() ? nullptr : &it->second;
    }

    auto PatternCatalog::at(string_view name) const -> const CatalogEntry &
    {
        if (auto entry = find(name))
            return *entry;
        throw CatalogError{"unknown pattern '" + string{name} + "'"};
    }

    auto PatternCatalog::names() const -> vector<string>
    {
        vector<string> result;
        for (const auto & [key, entry] : entries_)
            result.push_back(key);
        return result;
    }

    auto builtin_catalog() -> PatternCatalog
    {
        using R = RelationKind;
        PatternCatalog catalog;
        catalog.put(graph_from_edges("facade", {make_edge("P", "Q", R::Association)}), true);
        catalog.put(graph_from_edges("singleton", {make_edge("A", "A", R::Association)}), true);
        catalog.put(graph_from_edges("prototype",
                        {make_edge("b", "a", R::Association), make_edge("c", "a", R::Generalization)}),
            true);
        catalog.put(graph_from_edges("composite",
                        {make_edge("c", "a", R::Association), make_edge("b", "a", R::Generalization),
                            make_edge("c", "a", R::Generalization)}),
            true);
        return catalog;
    }

    namespace
    {
        void overlay_file(PatternCatalog & catalog, const fs::path & file)
        {
            ClassGraph graph;
            try {
                auto document = [&] {
                    std::ifstream in{file, std::ios::binary};
                    if (! in)
                        throw CatalogError{"cannot open '" + file.string() + "'"};
                    std::ostringstream buffer;
                    buffer << in.rdbuf();
                    return parse_document(buffer.str());
                }();
                if (! document.name || document.name->empty())
                    document.name = file.stem().string();
                graph = to_graph(document);
            }
            catch (const ParseError & e) {
                throw CatalogError{"catalog entry '" + file.string() + "': " + e.what()};
            }
            catch (const InvalidNodeError & e) {
                throw CatalogError{"catalog entry '" + file.string() + "': " + e.what()};
            }

            if (graph.edges().empty())
                throw CatalogError{"catalog entry '" + file.string() + "': pattern has no edges"};
            catalog.put(std::move(graph), false, file);
        }
    }

    auto load_catalog(const fs::path & location) -> PatternCatalog
    {
        auto catalog = builtin_catalog();

        std::error_code ec;
        if (fs::is_directory(location, ec)) {
            vector<fs::path> files;
            for (const auto & item : fs::directory_iterator{location})
                if (item.is_regular_file() && item.path().extension() == ".cg")
                    files.push_back(item.path());
            std::sort(files.begin(), files.end());
            for (const auto & f : files)
                overlay_file(catalog, f);
        }
        else if (fs::is_regular_file(location, ec)) {
            overlay_file(catalog, location);
        }
        else {
            throw CatalogError{"catalog location '" + location.string() + "' does not exist"};
        }

        return catalog;
    }
}
