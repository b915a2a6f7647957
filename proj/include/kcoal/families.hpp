#pragma once

#include <kcoal/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace kcoal {

/// A named graph family instance, e.g. cycle:6 or corona:(cycle:4),(empty:2).
struct FamilySpec {
    enum class Kind { Path, Cycle, Complete, Biclique, Star, Spider, Cocktail, Empty, Corona };

    Kind kind = Kind::Empty;
    int a = 1;  // n, k, or s
    int b = 0;  // t for Biclique
    std::vector<FamilySpec> parts;  // outer, inner for Corona

    static FamilySpec path(int n) { return {Kind::Path, n, 0, {}}; }
    static FamilySpec cycle(int n) { return {Kind::Cycle, n, 0, {}}; }
    static FamilySpec complete(int n) { return {Kind::Complete, n, 0, {}}; }
    static FamilySpec biclique(int s, int t) { return {Kind::Biclique, s, t, {}}; }
    static FamilySpec star(int k) { return {Kind::Star, k, 0, {}}; }
    static FamilySpec spider(int k) { return {Kind::Spider, k, 0, {}}; }
    static FamilySpec cocktail(int n) { return {Kind::Cocktail, n, 0, {}}; }
    static FamilySpec empty(int n) { return {Kind::Empty, n, 0, {}}; }
    static FamilySpec corona(FamilySpec outer, FamilySpec inner)
    {
        return {Kind::Corona, 0, 0, {std::move(outer), std::move(inner)}};
    }

    /// Vertex count of the generated graph; throws on invalid parameters.
    int order() const;
    /// Throws InvalidArgument when a parameter is out of range.
    void validate() const;

    bool operator==(const FamilySpec &) const = default;
};

/// Canonically labelled instance of the family.
Graph generate(const FamilySpec & spec);

/// F∘H: F on 0..|F|-1, then the copy of H belonging to outer vertex i on the
/// contiguous block starting at |F| + i·|H|.
Graph corona(const Graph & outer, const Graph & inner);

/// path:<n> | cycle:<n> | complete:<n> | biclique:<s>,<t> | star:<k> |
/// spider:<k> | cocktail:<n> | empty:<n> | corona:(<spec>),(<spec>)
FamilySpec parse_family(std::string_view dsl);
std::string to_string(const FamilySpec & spec);

/// Family DSL when text contains ':', otherwise an edge-list file path.
Graph load_graph(const std::string & text_or_path);

} // namespace kcoal
