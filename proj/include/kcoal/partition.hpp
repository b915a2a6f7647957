#pragma once

#include <kcoal/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace kcoal {

/// Disjoint nonempty blocks covering 0..n-1, kept sorted by minimum element.
class Partition {
public:
    Partition() = default;

    /// Sorts the blocks; throws InvalidPartition on overlap, gap, empty block,
    /// or a member outside 0..n-1.
    Partition(int n, std::vector<VertexSet> blocks);

    /// From a restricted-growth string: vertex v goes to block rgs[v].
    static Partition from_rgs(const std::vector<int> & rgs);

    int order() const { return n_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const VertexSet & operator[](int i) const { return blocks_[i]; }
    const std::vector<VertexSet> & blocks() const { return blocks_; }
    auto begin() const { return blocks_.begin(); }
    auto end() const { return blocks_.end(); }

    /// Block index of every vertex, i.e. the restricted-growth string.
    std::vector<int> rgs() const;

    bool operator==(const Partition &) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> blocks_;
};

/// One block per line, space separated, in canonical order.
std::string to_partition_text(const Partition & p);

/// '#' comments and blank lines allowed; block order in the file is free.
Partition parse_partition(std::string_view text, int n);
Partition read_partition(std::istream & in, int n);

} // namespace kcoal
