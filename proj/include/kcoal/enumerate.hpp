#pragma once

#include <kcoal/graph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace kcoal {

/// Tree whose Prüfer sequence is seq (entries in 0..n-1, length n-2).
Graph decode_pruefer(int n, const std::vector<Vertex> & seq);

/// n^(n-2) for n >= 2, 1 for n == 1.
std::uint64_t labeled_tree_count(int n);

/// The index-th labelled tree, where index read in base n gives the Prüfer
/// sequence (most significant digit first). Lets callers shard the corpus.
Graph labeled_tree_at(int n, std::uint64_t index);

/// Every labelled tree on n vertices exactly once, 1 <= n <= 9.
class LabeledTrees {
public:
    static constexpr int kMaxOrder = 9;

    explicit LabeledTrees(int n);
    std::optional<Graph> next();
    std::uint64_t count() const { return total_; }

private:
    int n_;
    std::uint64_t index_ = 0, total_;
};

/// 2^(n(n-1)/2).
std::uint64_t graph_count(int n);

/// Bit i of mask selects the i-th pair in lexicographic order (0,1),(0,2),...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Every labelled simple graph on n vertices, 1 <= n <= 7, by edge mask.
class AllGraphs {
public:
    static constexpr int kMaxOrder = 7;

    explicit AllGraphs(int n);
    std::optional<Graph> next();
    std::uint64_t count() const { return total_; }

private:
    int n_;
    std::uint64_t mask_ = 0, total_;
};

} // namespace kcoal
