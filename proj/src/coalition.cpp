#include <kcoal/coalition.hpp>
#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/error.hpp>

#include <json.hpp>

#include <algorithm>

namespace kcoal {

namespace {

void check_k(int k)
{
    if (k < 1)
        throw InvalidArgument("k must be at least 1, got " + std::to_string(k));
}

using Clock = std::chrono::steady_clock;

} // namespace

ValidationResult validate_partition(const Graph & g, const Partition & p, int k)
{
    check_k(k);
    check_partition_of(g, p);

    std::vector<bool> dom(p.size());
    for (int i = 0; i < p.size(); ++i)
        dom[i] = dominates(g, p[i], k);

    CoalitionCertificate cert;
    for (int i = 0; i < p.size(); ++i) {
        if (dom[i]) {
            if (p[i].size() == k) {
                cert.justify.push_back(Justification::self_dominating());
                continue;
            }
            return {std::nullopt, i,
                "block " + p[i].to_string() + " is " + std::to_string(k) + "-dominating but has "
                    + std::to_string(p[i].size()) + " vertices"};
        }
        int partner = -1;
        for (int j = 0; j < p.size() && partner < 0; ++j)
            if (j != i && ! dom[j] && dominates(g, p[i] | p[j], k))
                partner = j;
        if (partner < 0)
            return {std::nullopt, i,
                "block " + p[i].to_string() + " forms a " + std::to_string(k) + "-coalition with no other block"};
        cert.justify.push_back(Justification::with(partner));
    }
    return {std::move(cert), -1, {}};
}

bool is_k_coalition_partition(const Graph & g, const Partition & p, int k)
{
    return static_cast<bool>(validate_partition(g, p, k));
}

std::string certificate_json(const Partition & p, const CoalitionCertificate & cert)
{
    nlohmann::json blocks = nlohmann::json::array(), justify = nlohmann::json::array();
    for (auto & b : p)
        blocks.push_back(b.to_vector());
    for (auto & j : cert.justify) {
        if (j.is_self())
            justify.push_back({{"self", true}});
        else
            justify.push_back({{"partner", j.partner}});
    }
    return nlohmann::json{{"blocks", blocks}, {"justify", justify}}.dump();
}

SolveResult coalition_number_oracle(const Graph & g, int k)
{
    check_k(k);
    const int n = g.order();
    if (n < 1 || n > 11)
        throw BudgetExceeded("the exhaustive oracle supports 1 <= n <= 11, got n = " + std::to_string(n));

    auto start = Clock::now();
    SolveResult result;
    std::vector<int> rgs(n, 0), prefix_max(n, 0);
    int best = 0;
    // Knuth's restricted-growth-string successor: bump the last position that
    // may grow, reset everything after it to 0.
    while (true) {
        ++result.nodes_explored;
        int blocks = prefix_max[n - 1] + 1;
        if (blocks > best) {
            Partition p = Partition::from_rgs(rgs);
            if (auto v = validate_partition(g, p, k)) {
                best = blocks;
                result.value = blocks;
                result.witness = p;
                result.certificate = std::move(v.certificate);
            }
        }
        int i = n - 1;
        while (i > 0 && rgs[i] > prefix_max[i - 1])
            --i;
        if (i == 0)
            break;
        ++rgs[i];
        prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    result.elapsed = Clock::now() - start;
    return result;
}

namespace {

/// Vertices are placed in index order into an existing block or a new one, so
/// leaves are met in restricted-growth order. A branch is cut when it cannot
/// beat the incumbent or when some block can no longer be justified however
/// the remaining vertices are placed.
class CoalitionSearch {
public:
    CoalitionSearch(const Graph & g, int k, std::uint64_t node_limit, int stop_at) :
        k_(k), n_(g.order()), node_limit_(node_limit), stop_at_(stop_at), adj_(g.order())
    {
        for (Vertex v = 0; v < n_; ++v)
            adj_[v] = g.neighbours(v).bits();
        all_ = VertexSet::range(n_).bits();
        blocks_.assign(n_, 0);
        dom_.assign(n_, false);
        rgs_.assign(n_, 0);
    }

    void run()
    {
        if (n_ > 0)
            place(0, 0);
    }

    int best() const { return best_; }
    const std::vector<int> & best_rgs() const { return best_rgs_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    int k_, n_;
    std::uint64_t node_limit_;
    int stop_at_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t all_ = 0;
    std::vector<std::uint64_t> blocks_;
    std::vector<bool> dom_;
    std::vector<int> rgs_, best_rgs_;
    int best_ = 0;
    std::uint64_t nodes_ = 0;
    bool done_ = false;

    bool dom(std::uint64_t s) const
    {
        for (std::uint64_t rest = all_ & ~s; rest; rest &= rest - 1)
            if (std::popcount(adj_[std::countr_zero(rest)] & s) < k_)
                return false;
        return true;
    }

    /// Can block i still end up justified, given `unassigned` is yet to be placed?
    bool justifiable(int i, int opened, std::uint64_t unassigned) const
    {
        int size = std::popcount(blocks_[i]);
        if (dom_[i])
            return size <= k_ && size + std::popcount(unassigned) >= k_;
        std::uint64_t reach = blocks_[i] | unassigned;
        if (unassigned && dom(reach))
            return true;
        for (int j = 0; j < opened; ++j)
            if (j != i && ! dom_[j] && dom(reach | blocks_[j]))
                return true;
        return false;
    }

    bool all_justifiable(int opened, std::uint64_t unassigned) const
    {
        for (int i = 0; i < opened; ++i)
            if (! justifiable(i, opened, unassigned))
                return false;
        return true;
    }

    void place(Vertex v, int opened)
    {
        if (++nodes_ > node_limit_)
            throw BudgetExceeded("coalition search exceeded " + std::to_string(node_limit_) + " nodes");
        if (v == n_) {
            best_ = opened;
            best_rgs_ = rgs_;
            done_ = best_ >= stop_at_;
            return;
        }
        std::uint64_t unassigned = all_ & ~((std::uint64_t{2} << v) - 1);
        for (int b = 0; b <= opened && ! done_; ++b) {
            int now_open = std::max(opened, b + 1);
            if (now_open + (n_ - v - 1) <= best_)
                continue;
            bool was_dom = dom_[b];
            blocks_[b] |= std::uint64_t{1} << v;
            dom_[b] = dom(blocks_[b]);
            rgs_[v] = b;
            if (all_justifiable(now_open, unassigned))
                place(v + 1, now_open);
            blocks_[b] &= ~(std::uint64_t{1} << v);
            dom_[b] = was_dom;
        }
    }
};

} // namespace

SolveResult coalition_number(const Graph & g, int k, const SolverOptions & options)
{
    check_k(k);
    if (g.order() > options.max_vertices)
        throw BudgetExceeded("graph has " + std::to_string(g.order()) + " vertices, solver budget is "
            + std::to_string(options.max_vertices));

    auto start = Clock::now();
    int stop_at = proven_upper_bound(g, k);
    if (options.trust_paper_bounds)
        if (auto ub = upper_bound(g, k))
            stop_at = std::min(stop_at, *ub);

    CoalitionSearch search(g, k, options.node_limit, stop_at);
    search.run();

    SolveResult result;
    result.nodes_explored = search.nodes();
    if (search.best() > 0) {
        Partition p = Partition::from_rgs(search.best_rgs());
        auto v = validate_partition(g, p, k);
        if (! v)
            throw Error("internal: solver witness failed validation: " + v.reason);
        result.value = search.best();
        result.witness = std::move(p);
        result.certificate = std::move(v.certificate);
    }
    result.elapsed = Clock::now() - start;
    return result;
}

Graph coalition_graph(const Graph & g, const Partition & p, int k)
{
    auto v = validate_partition(g, p, k);
    if (! v)
        throw PreconditionError("not a " + std::to_string(k) + "-coalition partition: " + v.reason);
    std::vector<bool> dom(p.size());
    for (int i = 0; i < p.size(); ++i)
        dom[i] = dominates(g, p[i], k);
    std::vector<Edge> es;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (! dom[i] && ! dom[j] && dominates(g, p[i] | p[j], k))
                es.emplace_back(i, j);
    return Graph(p.size(), es);
}

std::optional<int> upper_bound(const Graph & g, int k)
{
    check_k(k);
    const int n = g.order();
    if (n == 0)
        return std::nullopt;
    const int delta = g.min_degree(), big_delta = g.max_degree();
    int bound = n;
    if (k > delta)
        bound = std::min(bound, big_delta - k + 3);
    if (k == delta && big_delta >= delta + 1)
        bound = std::min(bound, 2 * big_delta - 2 * delta + 4);
    if (g.is_regular(k))
        bound = std::min(bound, 4);
    return bound;
}

int proven_upper_bound(const Graph & g, int k)
{
    check_k(k);
    int bound = g.order();
    if (k > g.min_degree())
        bound = std::min(bound, std::max(2, g.max_degree() - k + 3));
    return bound;
}

int lower_bound_domatic(const Graph & g, int k)
{
    check_k(k);
    int bound = 1;
    if (g.is_connected())
        bound = std::max(bound, 2 * domatic_number(g, k));
    if (k % 2 == 0)
        bound = std::max(bound, domatic_number(g, k / 2));
    return bound;
}

} // namespace kcoal
