#pragma once

#include <kcoal/graph.hpp>
#include <kcoal/partition.hpp>

namespace kcoal {

/// Throws InvalidPartition when p is not a partition of V(G).
void check_partition_of(const Graph & g, const Partition & p);

/// Every block of p is k-dominating.
bool is_k_domatic(const Graph & g, const Partition & p, int k);

/// ⌊δ(G)/k⌋ + 1 capped at n: each vertex needs k neighbours in every block
/// but its own.
int domatic_upper_bound(const Graph & g, int k);

/// Maximum k-domatic partition with the lexicographically smallest
/// restricted-growth string among optima.
Partition find_max_domatic_partition(const Graph & g, int k);

/// d_k(G); 0 only for the empty graph.
inline int domatic_number(const Graph & g, int k) { return find_max_domatic_partition(g, k).size(); }

} // namespace kcoal
