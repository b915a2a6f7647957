#pragma once

#include <kcoal/graph.hpp>

namespace kcoal {

/// Unchecked core: every vertex outside s has at least k neighbours in s.
inline bool dominates(const Graph & g, VertexSet s, int k)
{
    const auto & adj = g.adjacency();
    for (Vertex v : g.vertices() - s)
        if ((adj[v] & s).size() < k)
            return false;
    return true;
}

/// Throws InvalidArgument when s leaves V(G) or k < 1.
bool is_k_dominating(const Graph & g, VertexSet s, int k);

/// s must be k-dominating (PreconditionError otherwise). True when no single
/// vertex can be dropped, which by monotonicity means no proper subset works.
bool is_minimal_k_dominating(const Graph & g, VertexSet s, int k);

/// Repeatedly drops the largest removable vertex until s is minimal.
VertexSet minimalize(const Graph & g, VertexSet s, int k);

/// Vertices of degree < k, which lie in every k-dominating set.
VertexSet forced_vertices(const Graph & g, int k);

/// Lexicographically smallest minimum-cardinality k-dominating set.
VertexSet min_k_dominating_set(const Graph & g, int k);

/// γ_k(G).
inline int gamma_k(const Graph & g, int k) { return min_k_dominating_set(g, k).size(); }

} // namespace kcoal
