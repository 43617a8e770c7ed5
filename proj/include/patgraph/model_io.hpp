#pragma once

#include <patgraph/graph.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace patgraph
{
    /// Syntax or semantic error in a model file, carrying its 1-based line.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(std::size_t line, const std::string & message);

        auto line() const noexcept -> std::size_t { return line_; }
        auto detail() const -> const std::string & { return detail_; }

    private:
        std::size_t line_;
        std::string detail_;
    };

    class CatalogError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    enum class DeclarationKind
    {
        Class,
        Assoc,
        Dep,
        Gen,
        SelfAssoc,
    };

    struct Declaration
    {
        DeclarationKind kind;
        std::vector<std::string> operands;
        std::size_t line = 0;
    };

    /// Line-oriented model file, kept in source order.
    ///
    ///     model <name>          optional header
    ///     class <id>
    ///     assoc <src> <dst>     relation code 1
    ///     dep <src> <dst>       relation code 2
    ///     gen <src> <dst>       relation code 3
    ///     selfassoc <id>        (id,id,1,1)
    ///
    /// '#' starts a comment that runs to the end of the line.
    struct ModelDocument
    {
        std::optional<std::string> name;
        std::vector<Declaration> declarations;
    };

    auto parse_document(std::string_view text) -> ModelDocument;

    /// Relationship operands that were never declared as classes are declared
    /// implicitly. Declaring the same class twice is an error.
    auto to_graph(const ModelDocument & document) -> ClassGraph;

    auto parse_model(std::string_view text) -> ClassGraph;

    /// Canonical text: header, classes sorted, then edges sorted by
    /// (source, target, relation). parse_model inverts it exactly.
    auto render_model(const ClassGraph & graph) -> std::string;

    auto read_model_file(const std::filesystem::path & path) -> ClassGraph;

    struct CatalogEntry
    {
        ClassGraph graph;
        bool builtin = true;
        std::filesystem::path source;
    };

    /// Pattern graphs keyed by name. Lookup is case-insensitive; every entry
    /// has at least one edge.
    class PatternCatalog
    {
    public:
        /// Replaces any entry with the same (case-folded) name.
        void put(ClassGraph graph, bool builtin, std::filesystem::path source = {});

        auto find(std::string_view name) const -> const CatalogEntry *;
        auto at(std::string_view name) const -> const CatalogEntry &;

        /// Sorted by folded name.
        auto names() const -> std::vector<std::string>;
        auto entries() const -> const std::map<std::string, CatalogEntry> & { return entries_; }
        auto size() const noexcept -> std::size_t { return entries_.size(); }

    private:
        std::map<std::string, CatalogEntry> entries_;
    };

    auto fold_case(std::string_view name) -> std::string;

    /// facade, singleton, prototype, composite.
    auto builtin_catalog() -> PatternCatalog;

    /// Builtins overlaid by a single *.cg file or every *.cg file in a
    /// directory (filename order). Entry name is the model header, else the
    /// file stem.
    auto load_catalog(const std::filesystem::path & location) -> PatternCatalog;
}
