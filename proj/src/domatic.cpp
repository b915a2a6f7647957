#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/error.hpp>

#include <algorithm>
#include <optional>

namespace kcoal {

void check_partition_of(const Graph & g, const Partition & p)
{
    if (p.order() != g.order())
        throw InvalidPartition("partition covers " + std::to_string(p.order()) + " vertices, graph has "
            + std::to_string(g.order()));
}

bool is_k_domatic(const Graph & g, const Partition & p, int k)
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    check_partition_of(g, p);
    return std::all_of(p.begin(), p.end(), [&](VertexSet b) { return dominates(g, b, k); });
}

int domatic_upper_bound(const Graph & g, int k)
{
    return std::min(g.order(), g.min_degree() / k + 1);
}

namespace {

/// Does a partition into exactly `target` k-dominating blocks exist? Vertices
/// are placed in index order, existing blocks before a new one.
class DomaticSearch {
public:
    DomaticSearch(const Graph & g, int k, int target) :
        g_(g), k_(k), n_(g.order()), target_(target), blocks_(target)
    {
    }

    std::optional<Partition> run()
    {
        if (place(0, 0))
            return Partition(n_, blocks_);
        return std::nullopt;
    }

private:
    const Graph & g_;
    int k_, n_, target_;
    std::vector<VertexSet> blocks_;

    bool viable(Vertex next, int opened) const
    {
        VertexSet unassigned = g_.vertices() - VertexSet::range(next);
        for (Vertex u = 0; u < next; ++u) {
            VertexSet nbrs = g_.neighbours(u);
            for (int b = 0; b < opened; ++b)
                if (! blocks_[b].contains(u) && (nbrs & (blocks_[b] | unassigned)).size() < k_)
                    return false;
            if (opened < target_ && (nbrs & unassigned).size() < k_)
                return false;
        }
        return true;
    }

    bool place(Vertex v, int opened)
    {
        if (n_ - v < target_ - opened)
            return false;
        if (! viable(v, opened))
            return false;
        if (v == n_)
            return true;
        int limit = std::min(opened + 1, target_);
        for (int b = 0; b < limit; ++b) {
            blocks_[b].insert(v);
            if (place(v + 1, std::max(opened, b + 1)))
                return true;
            blocks_[b].erase(v);
        }
        return false;
    }
};

} // namespace

Partition find_max_domatic_partition(const Graph & g, int k)
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    if (g.order() == 0)
        return Partition(0, {});
    for (int d = domatic_upper_bound(g, k); d >= 1; --d)
        if (auto p = DomaticSearch(g, k, d).run())
            return *p;
    // {V} is always k-dominating, so d = 1 never fails.
    return Partition(g.order(), {g.vertices()});
}

} // namespace kcoal
