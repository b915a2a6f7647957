#pragma once

#include <kcoal/vertex_set.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kcoal {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, adjacency as bit rows.
class Graph {
public:
    static constexpr int kMaxVertices = VertexSet::kCapacity;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Throws InvalidArgument on loops, duplicates or ids outside 0..n-1.
    Graph(int n, const std::vector<Edge> & edges);

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbours(Vertex v) const { return adj_[v]; }
    const std::vector<VertexSet> & adjacency() const { return adj_; }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    /// 0 for the empty graph.
    int min_degree() const;
    int max_degree() const;
    /// True when every vertex has degree r.
    bool is_regular(int r) const;
    /// The empty graph counts as connected.
    bool is_connected() const;
    /// Connected with n-1 edges.
    bool is_tree() const;
    /// Breadth-first distances from source; -1 where unreachable.
    std::vector<int> distances_from(Vertex source) const;

    /// Edges {u,v} with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    Graph complement() const;
    /// Vertex v of this graph becomes perm[v] in the result.
    Graph relabelled(const std::vector<Vertex> & perm) const;

    /// Throws InvalidArgument when s has a member >= n.
    void check_subset(VertexSet s) const;

    bool operator==(const Graph &) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// Canonical edge-list text: "n m" then one sorted "u v" line per edge.
std::string to_edge_list(const Graph & g);

/// Accepts '#' comment lines and blank lines anywhere; edges may be given in
/// either orientation. Throws ParseError carrying the offending line.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(std::istream & in);

} // namespace kcoal
