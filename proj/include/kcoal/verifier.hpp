#pragma once

#include <kcoal/coalition.hpp>
#include <kcoal/families.hpp>
#include <kcoal/graph.hpp>

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kcoal {

/// A named graph drawn from a corpus.
struct Instance {
    Graph graph;
    std::string name;
};

/// Lazily indexed union of exhaustive and family corpora, so workers can
/// split the index range without materialising millions of graphs.
class Corpus {
public:
    void add_all_graphs(int n);
    void add_labeled_trees(int n);
    void add_family(const FamilySpec & spec);

    std::uint64_t size() const;
    Instance at(std::uint64_t index) const;
    const std::string & description() const { return description_; }

    /// Every graph on 1..max_graph_n vertices, every labelled tree on
    /// 1..max_tree_n vertices, and families() up to max_family_n vertices.
    static Corpus standard(int max_graph_n, int max_tree_n, int max_family_n);
    static Corpus trees(int min_n, int max_n);

private:
    enum class Kind { Graphs, Trees, Family };
    struct Segment {
        Kind kind;
        int n;
        std::uint64_t count;
        std::optional<FamilySpec> spec;
    };
    std::vector<Segment> segments_;
    std::string description_;

    void describe(const std::string & part);
};

/// Family instances on at most max_n vertices: paths, cycles, complete and
/// empty graphs, bicliques, stars, spiders, cocktail-party graphs and a few
/// coronas.
std::vector<FamilySpec> families(int max_n);

enum class Severity { Assert, Report };
const char * to_string(Severity s);

struct Violation {
    std::string instance;
    /// Canonical edge-list text.
    std::string graph;
    int k = 0;
    std::string expected;
    std::string got;

    auto operator<=>(const Violation &) const = default;
};

struct VerificationReport {
    std::string theorem_id;
    Severity severity = Severity::Assert;
    std::string corpus;
    std::uint64_t checked = 0;
    /// Instances outside the hypotheses or with C_k undefined where the claim
    /// presumes a partition exists.
    std::uint64_t skipped = 0;
    std::uint64_t budget_exceeded = 0;
    std::vector<Violation> violations;
    std::chrono::milliseconds elapsed{0};

    bool passed() const { return violations.empty(); }
};

struct VerifyOptions {
    std::optional<int> max_n;
    std::optional<int> k_min, k_max;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned jobs = 0;
    SolverOptions solver;
};

struct TheoremCheck {
    std::string id;
    std::string claim;
    Severity severity;
    std::function<VerificationReport(const VerifyOptions &)> run;
};

const std::vector<TheoremCheck> & registry();

/// Throws InvalidArgument for an unknown id.
VerificationReport verify(const std::string & theorem_id, const VerifyOptions & options = {});
std::vector<VerificationReport> verify_all(const VerifyOptions & options = {});

/// 0 all pass, 2 any assert violation, 3 only report violations.
int exit_code(const std::vector<VerificationReport> & reports);

std::string report_json(const VerificationReport & report);
std::string reports_json(const std::vector<VerificationReport> & reports);
std::string report_text(const VerificationReport & report);

/// Calls fn(i) for i in [0, count) across `jobs` threads.
void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)> & fn);

} // namespace kcoal
