#include <kcoal/domination.hpp>
#include <kcoal/error.hpp>

#include <string>

namespace kcoal {

namespace {

void check_k(int k)
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1, got " + std::to_string(k));
}

void require_dominating(const Graph & g, VertexSet s, int k)
{
    if (! dominates(g, s, k))
        throw PreconditionError(s.to_string() + " is not " + std::to_string(k) + "-dominating");
}

/// Include-first DFS over vertices in index order. Sets of equal size are
/// reached in lexicographic order, so the first strict improvement at the
/// optimum size is the lexicographically smallest optimum.
class MinDominatingSearch {
public:
    MinDominatingSearch(const Graph & g, int k) :
        g_(g), k_(k), n_(g.order()), best_(g.vertices()), best_size_(g.order() + 1)
    {
    }

    VertexSet run()
    {
        search(0, forced_vertices(g_, k_), VertexSet{});
        return best_;
    }

private:
    const Graph & g_;
    int k_, n_;
    VertexSet best_;
    int best_size_;

    /// Every excluded vertex can still collect k neighbours from in ∪ undecided.
    bool feasible(VertexSet in, VertexSet out, VertexSet undecided) const
    {
        VertexSet reach = in | undecided;
        for (Vertex v : out)
            if ((g_.neighbours(v) & reach).size() < k_)
                return false;
        return true;
    }

    void search(Vertex next, VertexSet in, VertexSet out)
    {
        if (in.size() >= best_size_)
            return;
        VertexSet undecided = g_.vertices() - in - out;
        if (! feasible(in, out, undecided))
            return;
        while (next < n_ && (in.contains(next) || out.contains(next)))
            ++next;
        if (next == n_) {
            best_ = in;
            best_size_ = in.size();
            return;
        }
        VertexSet with = in;
        with.insert(next);
        search(next + 1, with, out);
        VertexSet without = out;
        without.insert(next);
        search(next + 1, in, without);
    }
};

} // namespace

bool is_k_dominating(const Graph & g, VertexSet s, int k)
{
    check_k(k);
    g.check_subset(s);
    return dominates(g, s, k);
}

bool is_minimal_k_dominating(const Graph & g, VertexSet s, int k)
{
    check_k(k);
    g.check_subset(s);
    require_dominating(g, s, k);
    for (Vertex v : s)
        if (dominates(g, s - VertexSet{v}, k))
            return false;
    return true;
}

VertexSet minimalize(const Graph & g, VertexSet s, int k)
{
    check_k(k);
    g.check_subset(s);
    require_dominating(g, s, k);
    for (bool removed = true; removed;) {
        removed = false;
        for (Vertex v = s.empty() ? -1 : s.back(); v >= 0; --v) {
            if (! s.contains(v))
                continue;
            VertexSet smaller = s - VertexSet{v};
            if (dominates(g, smaller, k)) {
                s = smaller;
                removed = true;
                break;
            }
        }
    }
    return s;
}

VertexSet forced_vertices(const Graph & g, int k)
{
    VertexSet forced;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) < k)
            forced.insert(v);
    return forced;
}

VertexSet min_k_dominating_set(const Graph & g, int k)
{
    check_k(k);
    return MinDominatingSearch(g, k).run();
}

} // namespace kcoal
