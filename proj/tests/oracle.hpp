#pragma once

// Brute-force reference values computed straight from the definitions, using
// only the edge list of a graph. Small graphs only (n <= 10).

#include <kcoal/graph.hpp>

#include <bit>
#include <functional>
#include <optional>
#include <vector>

namespace oracle {

struct Matrix {
    int n;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const kcoal::Graph & g)
        : n(g.order()), adj(g.order(), std::vector<bool>(g.order(), false))
    {
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = true;
    }

    bool dominating(unsigned s, int k) const
    {
        for (int v = 0; v < n; ++v) {
            if (s >> v & 1u)
                continue;
            int hits = 0;
            for (int u = 0; u < n; ++u)
                if ((s >> u & 1u) && adj[v][u])
                    ++hits;
            if (hits < k)
                return false;
        }
        return true;
    }
};

/// Calls fn once per set partition of {0..n-1}, blocks as bit masks.
inline void each_partition(int n, const std::function<void(const std::vector<unsigned> &)> & fn)
{
    std::vector<unsigned> blocks;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            fn(blocks);
            return;
        }
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            blocks[i] |= 1u << v;
            place(v + 1);
            blocks[i] &= ~(1u << v);
        }
        blocks.push_back(1u << v);
        place(v + 1);
        blocks.pop_back();
    };
    place(0);
}

inline bool coalition_partition(const Matrix & m, const std::vector<unsigned> & blocks, int k)
{
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool di = m.dominating(blocks[i], k);
        bool ok = di && std::popcount(blocks[i]) == k;
        for (std::size_t j = 0; ! ok && ! di && j < blocks.size(); ++j)
            ok = j != i && ! m.dominating(blocks[j], k) && m.dominating(blocks[i] | blocks[j], k);
        if (! ok)
            return false;
    }
    return true;
}

inline std::optional<int> coalition_number(const kcoal::Graph & g, int k)
{
    Matrix m(g);
    std::optional<int> best;
    each_partition(m.n, [&](const std::vector<unsigned> & blocks) {
        int size = static_cast<int>(blocks.size());
        if ((! best || size > *best) && coalition_partition(m, blocks, k))
            best = size;
    });
    return best;
}

inline int gamma(const kcoal::Graph & g, int k)
{
    Matrix m(g);
    int best = m.n;
    for (unsigned s = 0; s < (1u << m.n); ++s)
        if (std::popcount(s) < best && m.dominating(s, k))
            best = std::popcount(s);
    return best;
}

inline int domatic(const kcoal::Graph & g, int k)
{
    Matrix m(g);
    int best = 0;
    each_partition(m.n, [&](const std::vector<unsigned> & blocks) {
        int size = static_cast<int>(blocks.size());
        if (size <= best)
            return;
        for (unsigned b : blocks)
            if (! m.dominating(b, k))
                return;
        best = size;
    });
    return best;
}

} // namespace oracle
