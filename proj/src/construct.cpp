#include <kcoal/coalition.hpp>
#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/error.hpp>

#include <algorithm>

namespace kcoal {

namespace {

/// Minimal k-dominating sets split as {lowest} vs rest; a singleton (only
/// possible for k = 1) stays whole since it is a 1-dominating 1-set.
void add_split(std::vector<VertexSet> & out, VertexSet block)
{
    if (block.size() == 1) {
        out.push_back(block);
        return;
    }
    VertexSet low{block.front()};
    out.push_back(low);
    out.push_back(block - low);
}

bool forms_coalition(const Graph & g, VertexSet a, VertexSet b, int k)
{
    return ! dominates(g, a, k) && ! dominates(g, b, k) && dominates(g, a | b, k);
}

/// Every two-part split of core (first part holding core's lowest vertex),
/// with surplus kept apart or merged into either part. First valid wins.
std::optional<Partition> search_last_block(const Graph & g, int k, const std::vector<VertexSet> & fixed,
    VertexSet core, VertexSet surplus)
{
    auto try_blocks = [&](std::vector<VertexSet> tail) -> std::optional<Partition> {
        std::vector<VertexSet> blocks = fixed;
        for (auto b : tail)
            if (! b.empty())
                blocks.push_back(b);
        Partition p(g.order(), blocks);
        if (is_k_coalition_partition(g, p, k))
            return p;
        return std::nullopt;
    };

    std::vector<Vertex> members = core.to_vector();
    std::uint64_t splits = std::uint64_t{1} << (members.size() - 1);
    for (std::uint64_t mask = 0; mask < splits; ++mask) {
        VertexSet first{members[0]};
        for (std::size_t i = 1; i < members.size(); ++i)
            if ((mask >> (i - 1)) & 1u)
                first.insert(members[i]);
        VertexSet second = core - first;
        if (auto p = try_blocks({first, second, surplus}))
            return p;
        if (! surplus.empty()) {
            if (auto p = try_blocks({first, second | surplus}))
                return p;
            if (auto p = try_blocks({first | surplus, second}))
                return p;
        }
    }
    return std::nullopt;
}

} // namespace

namespace {

/// The procedure with x[last] as the block that absorbs every surplus vertex.
Partition refine(const Graph & g, int k, std::vector<VertexSet> x, int last, bool & literal_ok)
{
    const int s = static_cast<int>(x.size());
    for (int i = 0; i < s; ++i) {
        if (i == last)
            continue;
        VertexSet core = minimalize(g, x[i], k);
        x[last] |= x[i] - core;
        x[i] = core;
    }

    std::vector<VertexSet> theta;
    for (int i = 0; i < s; ++i)
        if (i != last)
            add_split(theta, x[i]);
    std::vector<VertexSet> fixed = theta;

    VertexSet core = minimalize(g, x[last], k);
    VertexSet surplus = x[last] - core;
    add_split(theta, core);
    if (! surplus.empty()) {
        bool partnered = std::any_of(theta.begin(), theta.end(),
            [&](VertexSet b) { return forms_coalition(g, surplus, b, k); });
        if (partnered)
            theta.push_back(surplus);
        else
            theta.back() |= surplus;
    }

    Partition candidate(g.order(), theta);
    literal_ok = is_k_coalition_partition(g, candidate, k);
    if (literal_ok)
        return candidate;
    if (auto alt = search_last_block(g, k, fixed, core, surplus))
        return *alt;
    return candidate;
}

} // namespace

ConstructionResult construct_from_domatic(const Graph & g, int k)
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1");
    if (g.order() == 0 || g.min_degree() < k)
        throw PreconditionError("construction needs minimum degree >= k; δ(G) = " + std::to_string(g.min_degree())
            + ", k = " + std::to_string(k));

    Partition phi = find_max_domatic_partition(g, k);
    const int s = phi.size();

    ConstructionResult result;
    result.domatic_blocks = s;

    // The canonical last block first; if neither its literal refinement nor
    // another split of its core validates, let a different block absorb the
    // surplus vertices.
    for (int step = 0; step < s; ++step) {
        int last = step == 0 ? s - 1 : step - 1;
        bool literal_ok = false;
        Partition candidate = refine(g, k, phi.blocks(), last, literal_ok);
        auto v = validate_partition(g, candidate, k);
        if (! v)
            continue;
        result.used_fallback = ! (step == 0 && literal_ok);
        result.certificate = std::move(*v.certificate);
        result.partition = std::move(candidate);
        return result;
    }
    throw Error("construction produced no valid " + std::to_string(k) + "-coalition partition for this graph");
}

} // namespace kcoal
