#pragma once

#include <kcoal/graph.hpp>
#include <kcoal/partition.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcoal {

/// Why one block of a k-coalition partition is allowed to be there.
struct Justification {
    /// -1 for a k-dominating block of exactly k vertices, else the partner block.
    int partner = -1;

    static Justification self_dominating() { return {-1}; }
    static Justification with(int j) { return {j}; }
    bool is_self() const { return partner < 0; }
    bool operator==(const Justification &) const = default;
};

/// justify[i] explains block i of the partition it was computed for.
struct CoalitionCertificate {
    std::vector<Justification> justify;
    bool operator==(const CoalitionCertificate &) const = default;
};

struct ValidationResult {
    std::optional<CoalitionCertificate> certificate;
    /// Lowest block with no justification, -1 when valid.
    int failing_block = -1;
    std::string reason;

    explicit operator bool() const { return certificate.has_value(); }
};

/// Certificate using the smallest valid partner index for every block, or the
/// first failing block. Throws InvalidPartition when p does not partition V(G).
ValidationResult validate_partition(const Graph & g, const Partition & p, int k);

/// Definition check without building a certificate.
bool is_k_coalition_partition(const Graph & g, const Partition & p, int k);

/// {"blocks": [[...],...], "justify": [{"self": true} | {"partner": j}, ...]}
std::string certificate_json(const Partition & p, const CoalitionCertificate & cert);

struct SolveResult {
    /// C_k(G); empty when no k-coalition partition exists.
    std::optional<int> value;
    std::optional<Partition> witness;
    std::optional<CoalitionCertificate> certificate;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SolverOptions {
    int max_vertices = 14;
    std::uint64_t node_limit = 1'000'000'000;
    /// Also stop at the stated upper bounds that this library does not prove
    /// (2Δ−2δ+4 at k = δ, 4 for k-regular graphs, and the raw Δ−k+3).
    bool trust_paper_bounds = false;
};

/// Exhaustive restricted-growth-string enumeration, 1 <= n <= 11. The witness
/// is the first optimal partition in restricted-growth order.
SolveResult coalition_number_oracle(const Graph & g, int k);

/// Branch and bound over restricted-growth strings. Same value and witness as
/// the oracle; throws BudgetExceeded past options.max_vertices or node_limit.
SolveResult coalition_number(const Graph & g, int k, const SolverOptions & options = {});

struct ConstructionResult {
    Partition partition;
    CoalitionCertificate certificate;
    /// d_k(G) of the domatic partition the construction started from.
    int domatic_blocks = 0;
    /// The literal procedure (canonical last block, lowest-vertex split) did
    /// not validate, so another last block or split of its core was used.
    bool used_fallback = false;
};

/// Refines a maximum k-domatic partition into a k-coalition partition.
/// Requires δ(G) >= k (PreconditionError otherwise).
ConstructionResult construct_from_domatic(const Graph & g, int k);

/// kCG(G, p): vertex i is block i, edge {i,j} when blocks i and j form a
/// k-coalition. Throws PreconditionError when p is not a k-coalition partition.
Graph coalition_graph(const Graph & g, const Partition & p, int k);

/// min{n; Δ−k+3 if k > δ; 2Δ−2δ+4 if k = δ and Δ >= δ+1; 4 if k-regular},
/// exactly as stated in the literature. Empty only for the null graph.
std::optional<int> upper_bound(const Graph & g, int k);

/// min{n; max(2, Δ−k+3) if k > δ}: the bound the solver stops at by default.
int proven_upper_bound(const Graph & g, int k);

/// max(2·d_k if connected, d_{k/2} if k even, 1).
int lower_bound_domatic(const Graph & g, int k);

} // namespace kcoal
