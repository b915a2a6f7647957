#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/enumerate.hpp>
#include <kcoal/error.hpp>
#include <kcoal/verifier.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace kcoal {

// ---------------------------------------------------------------- corpora

void Corpus::describe(const std::string & part)
{
    description_ += description_.empty() ? part : "; " + part;
}

void Corpus::add_all_graphs(int n)
{
    AllGraphs probe(n);
    segments_.push_back({Kind::Graphs, n, probe.count(), std::nullopt});
    describe("all graphs n=" + std::to_string(n));
}

void Corpus::add_labeled_trees(int n)
{
    LabeledTrees probe(n);
    segments_.push_back({Kind::Trees, n, probe.count(), std::nullopt});
    describe("all labelled trees n=" + std::to_string(n));
}

void Corpus::add_family(const FamilySpec & spec)
{
    spec.validate();
    segments_.push_back({Kind::Family, spec.order(), 1, spec});
    describe(to_string(spec));
}

std::uint64_t Corpus::size() const
{
    std::uint64_t total = 0;
    for (auto & s : segments_)
        total += s.count;
    return total;
}

Instance Corpus::at(std::uint64_t index) const
{
    for (auto & s : segments_) {
        if (index >= s.count) {
            index -= s.count;
            continue;
        }
        switch (s.kind) {
        case Kind::Graphs:
            return {graph_from_edge_mask(s.n, index), "graph:" + std::to_string(s.n) + "#" + std::to_string(index)};
        case Kind::Trees:
            return {labeled_tree_at(s.n, index), "tree:" + std::to_string(s.n) + "#" + std::to_string(index)};
        case Kind::Family:
            return {generate(*s.spec), to_string(*s.spec)};
        }
    }
    throw InvalidArgument("corpus index out of range");
}

std::vector<FamilySpec> families(int max_n)
{
    std::vector<FamilySpec> out;
    auto add = [&](FamilySpec f) {
        if (f.order() <= max_n)
            out.push_back(std::move(f));
    };
    for (int n = 1; n <= max_n; ++n) {
        add(FamilySpec::path(n));
        add(FamilySpec::complete(n));
        add(FamilySpec::empty(n));
        if (n >= 3)
            add(FamilySpec::cycle(n));
        if (n % 2 == 0)
            add(FamilySpec::cocktail(n));
    }
    for (int k = 1; k < max_n; ++k) {
        add(FamilySpec::star(k));
        add(FamilySpec::spider(k));
    }
    for (int s = 1; s < max_n; ++s)
        for (int t = s; s + t <= max_n; ++t)
            add(FamilySpec::biclique(s, t));
    std::vector<FamilySpec> outers{FamilySpec::path(1), FamilySpec::path(2), FamilySpec::path(3),
        FamilySpec::path(4), FamilySpec::cycle(3), FamilySpec::cycle(4), FamilySpec::complete(3),
        FamilySpec::star(2)};
    std::vector<FamilySpec> inners{FamilySpec::empty(1), FamilySpec::empty(2), FamilySpec::empty(3),
        FamilySpec::complete(2), FamilySpec::path(3)};
    for (auto & o : outers)
        for (auto & i : inners)
            add(FamilySpec::corona(o, i));
    return out;
}

Corpus Corpus::standard(int max_graph_n, int max_tree_n, int max_family_n)
{
    Corpus c;
    for (int n = 1; n <= max_graph_n; ++n)
        c.add_all_graphs(n);
    for (int n = 1; n <= max_tree_n; ++n)
        c.add_labeled_trees(n);
    for (auto & f : families(max_family_n))
        c.segments_.push_back({Kind::Family, f.order(), 1, f});
    c.describe("families n<=" + std::to_string(max_family_n));
    return c;
}

Corpus Corpus::trees(int min_n, int max_n)
{
    Corpus c;
    for (int n = min_n; n <= max_n; ++n)
        c.add_labeled_trees(n);
    return c;
}

// ---------------------------------------------------------------- plumbing

const char * to_string(Severity s)
{
    return s == Severity::Assert ? "assert" : "report";
}

void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)> & fn)
{
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs == 1 || count < 2) {
        for (std::uint64_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            constexpr std::uint64_t chunk = 64;
            for (std::uint64_t lo; (lo = next.fetch_add(chunk)) < count;)
                for (std::uint64_t i = lo; i < std::min(count, lo + chunk); ++i)
                    fn(i);
        }
        catch (...) {
            std::lock_guard lock(error_mutex);
            if (! error)
                error = std::current_exception();
            next = count;
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Status { Checked, Skipped, Budget };

struct Outcome {
    Status status = Status::Checked;
    std::optional<Violation> violation;

    static Outcome skip() { return {Status::Skipped, std::nullopt}; }
    static Outcome budget() { return {Status::Budget, std::nullopt}; }
    static Outcome pass() { return {}; }
};

Outcome fail(const Graph & g, const std::string & name, int k, std::string expected, std::string got)
{
    return {Status::Checked, Violation{name, to_edge_list(g), k, std::move(expected), std::move(got)}};
}

std::string show(const std::optional<int> & v)
{
    return v ? std::to_string(*v) : "undefined";
}

/// Runs fn over [0, count) and tallies the outcomes into a sorted report.
VerificationReport tally(const std::string & id, Severity severity, const std::string & corpus, std::uint64_t count,
    const VerifyOptions & options, const std::function<Outcome(std::uint64_t)> & fn)
{
    auto start = Clock::now();
    VerificationReport report;
    report.theorem_id = id;
    report.severity = severity;
    report.corpus = corpus;

    std::atomic<std::uint64_t> checked{0}, skipped{0}, budget{0};
    std::mutex m;
    parallel_for(count, options.jobs, [&](std::uint64_t i) {
        Outcome o = fn(i);
        switch (o.status) {
        case Status::Checked: ++checked; break;
        case Status::Skipped: ++skipped; break;
        case Status::Budget: ++budget; break;
        }
        if (o.violation) {
            std::lock_guard lock(m);
            report.violations.push_back(std::move(*o.violation));
        }
    });
    std::sort(report.violations.begin(), report.violations.end());
    report.checked = checked;
    report.skipped = skipped;
    report.budget_exceeded = budget;
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

/// C_k via the fast solver; nullopt when the budget is hit.
std::optional<SolveResult> solve(const Graph & g, int k, const VerifyOptions & options)
{
    try {
        return coalition_number(g, k, options.solver);
    }
    catch (const BudgetExceeded &) {
        return std::nullopt;
    }
}

struct KRange {
    int lo, hi;
    int count() const { return std::max(0, hi - lo + 1); }
};

KRange k_range(const VerifyOptions & o, int lo, int hi)
{
    return {o.k_min.value_or(lo), o.k_max.value_or(hi)};
}

bool k_selected(const VerifyOptions & o, int k)
{
    return (! o.k_min || k >= *o.k_min) && (! o.k_max || k <= *o.k_max);
}

/// (graph, k) pairs of a corpus, k from a range, flattened to one index.
VerificationReport over_corpus(const std::string & id, Severity severity, const Corpus & corpus, KRange ks,
    const VerifyOptions & options, const std::function<Outcome(const Instance &, int)> & fn)
{
    std::uint64_t per = ks.count();
    std::string desc = corpus.description() + "; k=" + std::to_string(ks.lo) + ".." + std::to_string(ks.hi);
    return tally(id, severity, desc, corpus.size() * per, options, [&](std::uint64_t i) {
        return fn(corpus.at(i / per), ks.lo + static_cast<int>(i % per));
    });
}

/// (graph, k) pairs for a list of explicit instances.
struct Case {
    FamilySpec spec;
    int k;
    std::optional<int> expected;
};

VerificationReport over_cases(const std::string & id, Severity severity, const std::string & desc,
    const std::vector<Case> & cases, const VerifyOptions & options,
    const std::function<Outcome(const Graph &, const Case &)> & fn)
{
    return tally(id, severity, desc, cases.size(), options, [&](std::uint64_t i) {
        return fn(generate(cases[i].spec), cases[i]);
    });
}

/// Value claims: C_k must equal case.expected exactly.
VerificationReport exact_values(const std::string & id, Severity severity, const std::string & desc,
    const std::vector<Case> & cases, const VerifyOptions & options)
{
    return over_cases(id, severity, desc, cases, options, [&](const Graph & g, const Case & c) {
        auto r = solve(g, c.k, options);
        if (! r)
            return Outcome::budget();
        if (r->value != c.expected)
            return fail(g, to_string(c.spec), c.k, show(c.expected), show(r->value));
        return Outcome::pass();
    });
}

Corpus bound_corpus(const VerifyOptions & o)
{
    int g = std::clamp(o.max_n.value_or(6), 1, AllGraphs::kMaxOrder);
    return Corpus::standard(g, std::min(g + 1, LabeledTrees::kMaxOrder), g + 3);
}

/// True when the only partition with n blocks, all singletons, is valid.
bool singletons_valid(const Graph & g, int k)
{
    std::vector<VertexSet> blocks;
    for (Vertex v = 0; v < g.order(); ++v)
        blocks.push_back(VertexSet{v});
    return is_k_coalition_partition(g, Partition(g.order(), blocks), k);
}

std::vector<Vertex> leaves(const Graph & g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return out;
}

bool has_deep_vertex(const Graph & tree)
{
    auto ls = leaves(tree);
    for (Vertex x = 0; x < tree.order(); ++x) {
        auto dist = tree.distances_from(x);
        if (std::all_of(ls.begin(), ls.end(), [&](Vertex l) { return dist[l] >= 2; }))
            return true;
    }
    return false;
}

bool is_path_graph(const Graph & g)
{
    return g.is_tree() && g.max_degree() <= 2;
}

// ---------------------------------------------------------------- checks

VerificationReport check_exist(const VerifyOptions & o)
{
    return over_corpus("T-EXIST", Severity::Assert, bound_corpus(o), k_range(o, 1, 3), o,
        [&](const Instance & in, int k) {
            const Graph & g = in.graph;
            if (g.min_degree() < k)
                return Outcome::skip();
            auto r = solve(g, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return fail(g, in.name, k, "a k-coalition partition", "undefined");
            try {
                construct_from_domatic(g, k);
            }
            catch (const Error & e) {
                return fail(g, in.name, k, "construction validates", e.what());
            }
            return Outcome::pass();
        });
}

VerificationReport check_2dk(const VerifyOptions & o)
{
    return over_corpus("T-2DK", Severity::Assert, bound_corpus(o), k_range(o, 1, 3), o,
        [&](const Instance & in, int k) {
            const Graph & g = in.graph;
            if (! g.is_connected())
                return Outcome::skip();
            auto r = solve(g, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = 2 * domatic_number(g, k);
            if (*r->value < bound)
                return fail(g, in.name, k, ">= " + std::to_string(bound), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_halfk(const VerifyOptions & o)
{
    return over_corpus("C-HALFK", Severity::Assert, bound_corpus(o), k_range(o, 1, 3), o,
        [&](const Instance & in, int k) {
            const Graph & g = in.graph;
            if (k % 2 != 0)
                return Outcome::skip();
            auto r = solve(g, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = domatic_number(g, k / 2);
            if (*r->value < bound)
                return fail(g, in.name, k, ">= " + std::to_string(bound), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_partners(const VerifyOptions & o)
{
    return over_corpus("L-PARTNERS", Severity::Assert, bound_corpus(o), k_range(o, 1, 3), o,
        [&](const Instance & in, int k) {
            const Graph & g = in.graph;
            auto r = solve(g, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = g.max_degree() - k + 2;
            int worst = coalition_graph(g, *r->witness, k).max_degree();
            if (worst > bound)
                return fail(g, in.name, k, "partners <= " + std::to_string(bound), std::to_string(worst));
            return Outcome::pass();
        });
}

VerificationReport check_ub1(const VerifyOptions & o)
{
    return over_corpus("T-UB1", Severity::Assert, bound_corpus(o), k_range(o, 1, 3), o,
        [&](const Instance & in, int k) {
            const Graph & g = in.graph;
            if (k <= g.min_degree())
                return Outcome::skip();
            auto r = solve(g, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = g.max_degree() - k + 3;
            if (*r->value > bound)
                return fail(g, in.name, k, "<= " + std::to_string(bound), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_ub2(const VerifyOptions & o)
{
    Corpus corpus = bound_corpus(o);
    return tally("T-UB2", Severity::Report, corpus.description() + "; k=δ(G)", corpus.size(), o,
        [&](std::uint64_t i) {
            Instance in = corpus.at(i);
            const Graph & g = in.graph;
            int delta = g.min_degree(), big = g.max_degree();
            if (delta < 1 || big < delta + 1 || ! k_selected(o, delta))
                return Outcome::skip();
            auto r = solve(g, delta, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = 2 * big - 2 * delta + 4;
            if (*r->value > bound)
                return fail(g, in.name, delta, "<= " + std::to_string(bound), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_regular(const VerifyOptions & o)
{
    Corpus corpus = bound_corpus(o);
    int fam_n = o.max_n.value_or(6) + 3;
    for (int n = 3; n <= fam_n; ++n) {
        corpus.add_family(FamilySpec::cycle(n));
        corpus.add_family(FamilySpec::complete(n));
        if (n % 2 == 0 && n >= 4)
            corpus.add_family(FamilySpec::cocktail(n));
    }
    return tally("C-REG", Severity::Assert, corpus.description() + "; k = regularity", corpus.size(), o,
        [&](std::uint64_t i) {
            Instance in = corpus.at(i);
            const Graph & g = in.graph;
            int r = g.min_degree();
            if (r < 1 || ! g.is_regular(r) || ! k_selected(o, r))
                return Outcome::skip();
            auto res = solve(g, r, o);
            if (! res)
                return Outcome::budget();
            if (! res->value || *res->value < 3 || *res->value > 4)
                return fail(g, in.name, r, "3..4", show(res->value));
            return Outcome::pass();
        });
}

VerificationReport check_kn(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(9);
    for (int n = 3; n <= max_n; ++n)
        for (int k = 2; k <= n - 1; ++k)
            if (k_selected(o, k))
                cases.push_back({FamilySpec::complete(n), k, n - k + 2});
    return exact_values("T-KN", Severity::Assert, "K_n, 3<=n<=" + std::to_string(max_n) + ", 2<=k<=n-1", cases, o);
}

VerificationReport check_kst_lb(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_t = o.max_n.value_or(6);
    for (int t = 1; t <= max_t; ++t)
        for (int s = 1; s <= t; ++s)
            for (int k = 1; k <= t; ++k)
                if (k_selected(o, k))
                    cases.push_back({FamilySpec::biclique(s, t), k, t - k + 2});
    return over_cases("T-KST-LB", Severity::Assert, "K_{s,t}, 1<=s<=t<=" + std::to_string(max_t) + ", 1<=k<=t",
        cases, o, [&](const Graph & g, const Case & c) {
            auto r = solve(g, c.k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value || *r->value < *c.expected)
                return fail(g, to_string(c.spec), c.k, ">= " + std::to_string(*c.expected), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_tree_ub(const VerifyOptions & o)
{
    int max_n = std::min(o.max_n.value_or(8), LabeledTrees::kMaxOrder);
    return over_corpus("C-TREE-UB", Severity::Report, Corpus::trees(2, max_n), {2, 2}, o,
        [&](const Instance & in, int k) {
            auto r = solve(in.graph, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            int bound = in.graph.max_degree() + 1;
            if (*r->value > bound)
                return fail(in.graph, in.name, k, "<= " + std::to_string(bound), show(r->value));
            return Outcome::pass();
        });
}

VerificationReport check_path(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(12);
    for (int n = 1; n <= max_n; ++n) {
        // The literature lists C_2(P_1) = 1, but {{v}} has one member, not 2,
        // so no 2-coalition partition of P_1 exists.
        std::optional<int> expected = n == 1 ? std::nullopt : n == 2 ? std::optional(1) : n == 3 ? 2 : 3;
        cases.push_back({FamilySpec::path(n), 2, expected});
    }
    return exact_values("T-PATH", Severity::Assert, "P_1..P_" + std::to_string(max_n) + ", k=2", cases, o);
}

VerificationReport check_cycle_half(const VerifyOptions & o)
{
    int max_n = o.max_n.value_or(14);
    return tally("L-CYCLE-HALF", Severity::Assert, "C_3..C_" + std::to_string(max_n) + ", k=2",
        max_n >= 3 ? max_n - 2 : 0, o, [&](std::uint64_t i) {
            int n = static_cast<int>(i) + 3;
            Graph g = generate(FamilySpec::cycle(n));
            int gamma = gamma_k(g, 2);
            if (2 * gamma < n)
                return fail(g, "cycle:" + std::to_string(n), 2, "|S| >= n/2 = " + std::to_string(n / 2.0),
                    std::to_string(gamma));
            return Outcome::pass();
        });
}

VerificationReport check_cycle(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(12);
    for (int n = 3; n <= max_n; ++n)
        cases.push_back({FamilySpec::cycle(n), 2, n % 2 == 0 ? 4 : 3});
    return exact_values("T-CYCLE", Severity::Assert, "C_3..C_" + std::to_string(max_n) + ", k=2", cases, o);
}

VerificationReport check_corona_k1(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(12);
    for (int n = 3; 2 * n <= max_n; ++n) {
        cases.push_back({FamilySpec::corona(FamilySpec::cycle(n), FamilySpec::empty(1)), 2, 4});
        cases.push_back({FamilySpec::corona(FamilySpec::path(n), FamilySpec::empty(1)), 2, 4});
    }
    return exact_values("C-CORONA-K1", Severity::Assert,
        "C_n∘K_1 and P_n∘K_1, n>=3, 2n<=" + std::to_string(max_n) + ", k=2", cases, o);
}

int corona_cycle_value(int l, int k)
{
    if (l <= k - 3)
        return 2;
    if (l == k - 2)
        return 3;
    if (l == k - 1)
        return 4;
    return 2;
}

int corona_path_value(int n, int l, int k)
{
    if (l == k - 2)
        return n <= 3 ? 2 : 3;
    return corona_cycle_value(l, k);
}

std::vector<Case> corona_cases(bool cycle, const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(14);
    KRange ks = k_range(o, 2, 5);
    for (int n = 3; n <= 6; ++n)
        for (int l = 1; l <= 5; ++l) {
            if (n * (1 + l) > max_n)
                continue;
            FamilySpec outer = cycle ? FamilySpec::cycle(n) : FamilySpec::path(n);
            for (int k = ks.lo; k <= ks.hi; ++k)
                cases.push_back({FamilySpec::corona(outer, FamilySpec::empty(l)), k,
                    cycle ? corona_cycle_value(l, k) : corona_path_value(n, l, k)});
        }
    return cases;
}

VerificationReport check_corona_cycle(const VerifyOptions & o)
{
    return exact_values("T-CORONA-CYCLE", Severity::Assert,
        "C_n∘K̄_l, 3<=n<=6, 1<=l<=5, n(1+l)<=" + std::to_string(o.max_n.value_or(14)), corona_cases(true, o), o);
}

VerificationReport check_corona_path(const VerifyOptions & o)
{
    return exact_values("T-CORONA-PATH", Severity::Assert,
        "P_n∘K̄_l, 3<=n<=6, 1<=l<=5, n(1+l)<=" + std::to_string(o.max_n.value_or(14)), corona_cases(false, o), o);
}

/// Exhaustive graphs n = 2..max_n (default 7) with C_2(G) = n.
VerificationReport over_full_c2(const std::string & id, Severity severity, const VerifyOptions & o,
    const std::function<Outcome(const Instance &)> & fn)
{
    int max_n = std::clamp(o.max_n.value_or(7), 2, AllGraphs::kMaxOrder);
    Corpus corpus;
    for (int n = 2; n <= max_n; ++n)
        corpus.add_all_graphs(n);
    return tally(id, severity, corpus.description() + "; k=2, C_2(G)=n", corpus.size(), o, [&](std::uint64_t i) {
        Instance in = corpus.at(i);
        // With n blocks every block is a singleton, so C_2(G) = n exactly
        // when the all-singletons partition is valid.
        if (! singletons_valid(in.graph, 2))
            return Outcome::skip();
        return fn(in);
    });
}

VerificationReport check_deg(const VerifyOptions & o)
{
    return over_full_c2("T-DEG", Severity::Report, o, [](const Instance & in) {
        int n = in.graph.order();
        if (in.graph.max_degree() < n - 2)
            return fail(in.graph, in.name, 2, "max degree >= " + std::to_string(n - 2),
                std::to_string(in.graph.max_degree()));
        return Outcome::pass();
    });
}

VerificationReport check_cocktail(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_n = o.max_n.value_or(10);
    for (int n = 2; n <= max_n; n += 2)
        cases.push_back({FamilySpec::cocktail(n), 2, n});
    return exact_values("L-COCKTAIL", Severity::Assert, "cocktail(n), even n<=" + std::to_string(max_n) + ", k=2",
        cases, o);
}

VerificationReport check_reg_cocktail(const VerifyOptions & o)
{
    return over_full_c2("C-REG-COCKTAIL", Severity::Report, o, [](const Instance & in) {
        const Graph & g = in.graph;
        int n = g.order();
        if (! g.is_regular(n - 2))
            return Outcome::skip();
        // Isomorphic to cocktail(n) iff the complement is a perfect matching.
        if (n % 2 != 0 || ! g.complement().is_regular(1))
            return fail(g, in.name, 2, "n even and G ≅ cocktail(n)", "n=" + std::to_string(n));
        return Outcome::pass();
    });
}

VerificationReport check_parity(const VerifyOptions & o)
{
    return over_full_c2("C-PARITY", Severity::Report, o, [](const Instance & in) {
        const Graph & g = in.graph;
        int n = g.order();
        if (n % 2 == 0)
            return Outcome::skip();
        int full = 0;
        for (Vertex v = 0; v < n; ++v)
            full += g.degree(v) == n - 1;
        if (full % 2 == 0)
            return fail(g, in.name, 2, "odd number of full vertices", std::to_string(full));
        return Outcome::pass();
    });
}

VerificationReport over_trees(const std::string & id, const VerifyOptions & o,
    const std::function<Outcome(const Instance &, int)> & fn)
{
    int max_n = std::min(o.max_n.value_or(8), LabeledTrees::kMaxOrder);
    return over_corpus(id, Severity::Report, Corpus::trees(2, max_n), {2, 2}, o,
        [&](const Instance & in, int k) {
            auto r = solve(in.graph, k, o);
            if (! r)
                return Outcome::budget();
            if (! r->value)
                return Outcome::skip();
            return fn(in, *r->value);
        });
}

VerificationReport check_tree_half(const VerifyOptions & o)
{
    return over_trees("T-TREE-HALF", o, [](const Instance & in, int c) {
        int n = in.graph.order();
        if (2 * c > n + 2)
            return fail(in.graph, in.name, 2, "<= " + std::to_string(n / 2.0 + 1), std::to_string(c));
        return Outcome::pass();
    });
}

VerificationReport check_tree_n(const VerifyOptions & o)
{
    return over_trees("C-TREE-N", o, [](const Instance & in, int c) {
        const Graph & t = in.graph;
        int n = t.order();
        if (c == n && n != 2)
            return fail(t, in.name, 2, "C_2 = n only for P_2", std::to_string(c));
        if (c == n - 1 && ! (n == 4 && is_path_graph(t)))
            return fail(t, in.name, 2, "C_2 = n-1 only for P_4", std::to_string(c));
        return Outcome::pass();
    });
}

VerificationReport check_tree_dist(const VerifyOptions & o)
{
    return over_trees("T-TREE-DIST", o, [](const Instance & in, int c) {
        if (! has_deep_vertex(in.graph))
            return Outcome::skip();
        if (c < 3)
            return fail(in.graph, in.name, 2, ">= 3", std::to_string(c));
        return Outcome::pass();
    });
}

VerificationReport check_spider(const VerifyOptions & o)
{
    std::vector<Case> cases;
    for (int k : {3, 4})
        if (FamilySpec::spider(k).order() <= o.max_n.value_or(14))
            cases.push_back({FamilySpec::spider(k), 2, k + 1});
    return exact_values("C-SPIDER", Severity::Report, "spider(3), spider(4), k=2", cases, o);
}

VerificationReport check_conj_kst(const VerifyOptions & o)
{
    std::vector<Case> cases;
    int max_t = o.max_n.value_or(6);
    for (int t = 2; t <= max_t; ++t)
        for (int s = 2; s <= t; ++s)
            for (int k = 2; k <= t; ++k)
                if (k_selected(o, k))
                    cases.push_back({FamilySpec::biclique(s, t), k, t - k + 2});
    return exact_values("CONJ-KST", Severity::Report, "K_{s,t}, 2<=s<=t<=" + std::to_string(max_t) + ", 2<=k<=t",
        cases, o);
}

} // namespace

const std::vector<TheoremCheck> & registry()
{
    static const std::vector<TheoremCheck> checks{
        {"T-EXIST", "δ(G) >= k implies a k-coalition partition exists", Severity::Assert, check_exist},
        {"T-2DK", "connected G: C_k(G) >= 2 d_k(G)", Severity::Assert, check_2dk},
        {"C-HALFK", "even k: C_k(G) >= d_{k/2}(G)", Severity::Assert, check_halfk},
        {"L-PARTNERS", "every block has at most Δ-k+2 coalition partners", Severity::Assert, check_partners},
        {"T-UB1", "k > δ(G): C_k(G) <= Δ-k+3", Severity::Assert, check_ub1},
        {"T-UB2", "Δ >= δ+1: C_δ(G) <= 2Δ-2δ+4", Severity::Report, check_ub2},
        {"C-REG", "k-regular G: 3 <= C_k(G) <= 4", Severity::Assert, check_regular},
        {"T-KN", "C_k(K_n) = n-k+2 for 2 <= k <= n-1", Severity::Assert, check_kn},
        {"T-KST-LB", "s <= t: C_k(K_{s,t}) >= t-k+2", Severity::Assert, check_kst_lb},
        {"C-TREE-UB", "tree T: C_2(T) <= Δ+1", Severity::Report, check_tree_ub},
        {"T-PATH", "C_2(P_n) = 1, 2, 3 for n = 2, 3, >= 4", Severity::Assert, check_path},
        {"L-CYCLE-HALF", "every 2-dominating set of C_n has >= n/2 vertices", Severity::Assert, check_cycle_half},
        {"T-CYCLE", "C_2(C_n) = 4 for even n, 3 for odd n", Severity::Assert, check_cycle},
        {"C-CORONA-K1", "C_2(C_n∘K_1) = C_2(P_n∘K_1) = 4", Severity::Assert, check_corona_k1},
        {"T-CORONA-CYCLE", "C_k(C_n∘K̄_l) = 2, 3, 4, 2 by l vs k", Severity::Assert, check_corona_cycle},
        {"T-CORONA-PATH", "C_k(P_n∘K̄_l) = 2, 2|3, 4, 2 by l vs k", Severity::Assert, check_corona_path},
        {"T-DEG", "C_2(G) = n implies a vertex of degree >= n-2", Severity::Report, check_deg},
        {"L-COCKTAIL", "C_2(cocktail(n)) = n", Severity::Assert, check_cocktail},
        {"C-REG-COCKTAIL", "(n-2)-regular with C_2 = n implies n even and G ≅ cocktail(n)", Severity::Report,
            check_reg_cocktail},
        {"C-PARITY", "C_2(G) = n with n odd implies an odd number of full vertices", Severity::Report,
            check_parity},
        {"T-TREE-HALF", "tree T: C_2(T) <= n/2 + 1", Severity::Report, check_tree_half},
        {"C-TREE-N", "tree T: C_2(T) = n only for P_2, = n-1 only for P_4", Severity::Report, check_tree_n},
        {"T-TREE-DIST", "tree with a vertex at distance >= 2 from all leaves: C_2(T) >= 3", Severity::Report,
            check_tree_dist},
        {"C-SPIDER", "C_2(spider(k)) = k+1", Severity::Report, check_spider},
        {"CONJ-KST", "conjecture: C_k(K_{s,t}) = t-k+2", Severity::Report, check_conj_kst},
    };
    return checks;
}

VerificationReport verify(const std::string & theorem_id, const VerifyOptions & options)
{
    for (auto & c : registry())
        if (c.id == theorem_id)
            return c.run(options);
    throw InvalidArgument("unknown theorem id \"" + theorem_id + "\"");
}

std::vector<VerificationReport> verify_all(const VerifyOptions & options)
{
    std::vector<VerificationReport> out;
    for (auto & c : registry())
        out.push_back(c.run(options));
    return out;
}

int exit_code(const std::vector<VerificationReport> & reports)
{
    bool reported = false;
    for (auto & r : reports) {
        if (r.passed())
            continue;
        if (r.severity == Severity::Assert)
            return 2;
        reported = true;
    }
    return reported ? 3 : 0;
}

namespace {

nlohmann::json to_json(const VerificationReport & r)
{
    nlohmann::json vs = nlohmann::json::array();
    for (auto & v : r.violations)
        vs.push_back({{"instance", v.instance}, {"graph", v.graph}, {"k", v.k}, {"expected", v.expected},
            {"got", v.got}});
    return {{"theorem", r.theorem_id}, {"severity", to_string(r.severity)}, {"corpus", r.corpus},
        {"checked", r.checked}, {"skipped", r.skipped}, {"budget_exceeded", r.budget_exceeded},
        {"violations", vs}, {"elapsed_ms", r.elapsed.count()}};
}

} // namespace

std::string report_json(const VerificationReport & report)
{
    return to_json(report).dump();
}

std::string reports_json(const std::vector<VerificationReport> & reports)
{
    nlohmann::json all = nlohmann::json::array();
    for (auto & r : reports)
        all.push_back(to_json(r));
    return all.dump();
}

std::string report_text(const VerificationReport & r)
{
    std::ostringstream out;
    out << r.theorem_id << " [" << to_string(r.severity) << "] " << (r.passed() ? "PASS" : "FAIL")
        << " checked=" << r.checked << " skipped=" << r.skipped << " budget=" << r.budget_exceeded
        << " violations=" << r.violations.size() << " (" << r.elapsed.count() << " ms)\n";
    constexpr std::size_t shown = 10;
    for (std::size_t i = 0; i < std::min(shown, r.violations.size()); ++i) {
        auto & v = r.violations[i];
        out << "  " << v.instance << " k=" << v.k << " expected " << v.expected << ", got " << v.got << "\n";
    }
    if (r.violations.size() > shown)
        out << "  ... " << r.violations.size() - shown << " more\n";
    return out.str();
}

} // namespace kcoal
