#include <kcoal/error.hpp>
#include <kcoal/partition.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>

namespace kcoal {

Partition::Partition(int n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks))
{
    VertexSet all = VertexSet::range(n), covered;
    for (auto & b : blocks_) {
        if (b.empty())
            throw InvalidPartition("partition contains an empty block");
        if (! b.is_subset_of(all))
            throw InvalidPartition("block " + b.to_string() + " has a member outside 0.." + std::to_string(n - 1));
        if (b.intersects(covered))
            throw InvalidPartition("blocks overlap on " + (b & covered).to_string());
        covered |= b;
    }
    if (covered != all)
        throw InvalidPartition("vertices " + (all - covered).to_string() + " are not covered");
    std::sort(blocks_.begin(), blocks_.end(), [](VertexSet x, VertexSet y) { return x.front() < y.front(); });
}

Partition Partition::from_rgs(const std::vector<int> & rgs)
{
    std::vector<VertexSet> blocks;
    for (Vertex v = 0; v < static_cast<int>(rgs.size()); ++v) {
        int b = rgs[v];
        if (b < 0 || b > static_cast<int>(blocks.size()))
            throw InvalidPartition("not a restricted-growth string");
        if (b == static_cast<int>(blocks.size()))
            blocks.emplace_back();
        blocks[b].insert(v);
    }
    return Partition(static_cast<int>(rgs.size()), std::move(blocks));
}

std::vector<int> Partition::rgs() const
{
    std::vector<int> out(n_);
    for (int i = 0; i < size(); ++i)
        for (Vertex v : blocks_[i])
            out[v] = i;
    return out;
}

std::string to_partition_text(const Partition & p)
{
    std::string out;
    for (auto & b : p) {
        bool first = true;
        for (Vertex v : b) {
            if (! first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

Partition parse_partition(std::string_view text, int n)
{
    std::vector<VertexSet> blocks;
    VertexSet seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;

        VertexSet block;
        std::size_t i = first;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            int v = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
            std::size_t next = ptr - line.data();
            if (ec != std::errc{} || (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r'))
                throw ParseError(ParseErrorKind::MalformedLine, line_no, "expected vertex ids");
            if (v < 0 || v >= n)
                throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                    "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            if (seen.contains(v))
                throw ParseError(ParseErrorKind::DuplicateVertex, line_no, std::to_string(v));
            seen.insert(v);
            block.insert(v);
            i = next;
        }
        blocks.push_back(block);
    }
    return Partition(n, std::move(blocks));
}

Partition read_partition(std::istream & in, int n)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_partition(text, n);
}

} // namespace kcoal
