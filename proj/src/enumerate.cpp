#include <kcoal/enumerate.hpp>
#include <kcoal/error.hpp>

#include <string>

namespace kcoal {

Graph decode_pruefer(int n, const std::vector<Vertex> & seq)
{
    if (n < 2 || static_cast<int>(seq.size()) != n - 2)
        throw InvalidArgument("Prüfer sequence of a tree on " + std::to_string(n) + " vertices has length n-2");
    std::vector<int> degree(n, 1);
    for (Vertex v : seq) {
        if (v < 0 || v >= n)
            throw InvalidArgument("Prüfer entry " + std::to_string(v) + " out of range");
        ++degree[v];
    }

    std::vector<Edge> es;
    es.reserve(n - 1);
    for (Vertex v : seq) {
        Vertex leaf = 0;
        while (degree[leaf] != 1)
            ++leaf;
        es.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
    }
    Vertex u = -1;
    for (Vertex w = 0; w < n; ++w)
        if (degree[w] == 1) {
            if (u < 0)
                u = w;
            else
                es.emplace_back(u, w);
        }
    return Graph(n, es);
}

std::uint64_t labeled_tree_count(int n)
{
    if (n <= 2)
        return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i)
        c *= n;
    return c;
}

Graph labeled_tree_at(int n, std::uint64_t index)
{
    if (n == 1)
        return Graph(1);
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::vector<Vertex> seq(n - 2);
    for (int i = n - 3; i >= 0; --i) {
        seq[i] = static_cast<Vertex>(index % n);
        index /= n;
    }
    return decode_pruefer(n, seq);
}

LabeledTrees::LabeledTrees(int n) : n_(n)
{
    if (n < 1 || n > kMaxOrder)
        throw InvalidArgument("labelled tree enumeration supports 1 <= n <= " + std::to_string(kMaxOrder));
    total_ = labeled_tree_count(n);
}

std::optional<Graph> LabeledTrees::next()
{
    if (index_ == total_)
        return std::nullopt;
    return labeled_tree_at(n_, index_++);
}

std::uint64_t graph_count(int n)
{
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask)
{
    std::vector<Edge> es;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u)
                es.emplace_back(u, v);
    return Graph(n, es);
}

AllGraphs::AllGraphs(int n) : n_(n)
{
    if (n < 1 || n > kMaxOrder)
        throw InvalidArgument("graph enumeration supports 1 <= n <= " + std::to_string(kMaxOrder));
    total_ = graph_count(n);
}

std::optional<Graph> AllGraphs::next()
{
    if (mask_ == total_)
        return std::nullopt;
    return graph_from_edge_mask(n_, mask_++);
}

} // namespace kcoal
