#include <kcoal/error.hpp>
#include <kcoal/graph.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace kcoal {

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (! first)
            out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

const char * to_string(ParseErrorKind kind)
{
    switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MalformedLine: return "malformed line";
    case ParseErrorKind::VertexOutOfRange: return "vertex id out of range";
    case ParseErrorKind::LoopEdge: return "loop edge";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::EdgeCountMismatch: return "edge count mismatch";
    case ParseErrorKind::DuplicateVertex: return "vertex listed twice";
    case ParseErrorKind::BadFamily: return "bad family spec";
    }
    return "parse error";
}

namespace {

std::string parse_message(ParseErrorKind kind, int line, const std::string & detail)
{
    std::string msg = to_string(kind);
    if (line > 0)
        msg += " at line " + std::to_string(line);
    if (! detail.empty())
        msg += ": " + detail;
    return msg;
}

} // namespace

ParseError::ParseError(ParseErrorKind kind, int line, const std::string & detail) :
    Error(parse_message(kind, line, detail)),
    kind_(kind),
    line_(line)
{
}

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw InvalidArgument("graph order must lie in 0.." + std::to_string(kMaxVertices) + ", got " + std::to_string(n));
    adj_.resize(n);
}

Graph::Graph(int n, const std::vector<Edge> & edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw InvalidArgument("loop edge at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            throw InvalidArgument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }
}

int Graph::min_degree() const
{
    int best = n_ == 0 ? 0 : n_;
    for (auto & row : adj_)
        best = std::min(best, row.size());
    return best;
}

int Graph::max_degree() const
{
    int best = 0;
    for (auto & row : adj_)
        best = std::max(best, row.size());
    return best;
}

bool Graph::is_regular(int r) const
{
    return std::all_of(adj_.begin(), adj_.end(), [r](VertexSet row) { return row.size() == r; });
}

bool Graph::is_connected() const
{
    if (n_ == 0)
        return true;
    VertexSet seen{0}, frontier{0};
    while (! frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= adj_[v];
        frontier = next - seen;
        seen |= next;
    }
    return seen == vertices();
}

bool Graph::is_tree() const
{
    return n_ >= 1 && m_ == n_ - 1 && is_connected();
}

std::vector<int> Graph::distances_from(Vertex source) const
{
    std::vector<int> dist(n_, -1);
    dist[source] = 0;
    VertexSet seen{source}, frontier{source};
    for (int d = 1; ! frontier.empty(); ++d) {
        VertexSet next;
        for (Vertex v : frontier)
            next |= adj_[v];
        frontier = next - seen;
        seen |= frontier;
        for (Vertex v : frontier)
            dist[v] = d;
    }
    return dist;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const
{
    Graph g(n_);
    for (Vertex v = 0; v < n_; ++v)
        g.adj_[v] = vertices() - adj_[v] - VertexSet{v};
    g.m_ = n_ * (n_ - 1) / 2 - m_;
    return g;
}

Graph Graph::relabelled(const std::vector<Vertex> & perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw InvalidArgument("permutation size does not match graph order");
    std::vector<Edge> es;
    for (auto [u, v] : edges())
        es.emplace_back(perm[u], perm[v]);
    return Graph(n_, es);
}

void Graph::check_subset(VertexSet s) const
{
    if (! s.is_subset_of(vertices()))
        throw InvalidArgument("vertex set " + s.to_string() + " has a member outside 0.." + std::to_string(n_ - 1));
}

std::string to_edge_list(const Graph & g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace {

/// Splits a line into whitespace-separated integer fields; false on junk.
bool parse_ints(std::string_view line, std::vector<long long> & out)
{
    out.clear();
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        if (i == line.size())
            break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{})
            return false;
        std::size_t next = ptr - line.data();
        if (next < line.size() && line[next] != ' ' && line[next] != '\t' && line[next] != '\r')
            return false;
        out.push_back(value);
        i = next;
    }
    return true;
}

bool is_skippable(std::string_view line)
{
    auto first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::vector<long long> fields;
    long long n = -1, m = -1;
    int line_no = 0, header_line = 0;
    std::vector<Edge> edges;
    std::vector<VertexSet> seen;

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (is_skippable(line))
            continue;

        if (n < 0) {
            if (! parse_ints(line, fields) || fields.size() != 2 || fields[0] < 0 || fields[1] < 0)
                throw ParseError(ParseErrorKind::MalformedHeader, line_no, "expected \"n m\"");
            if (fields[0] > Graph::kMaxVertices)
                throw ParseError(ParseErrorKind::MalformedHeader, line_no,
                    "at most " + std::to_string(Graph::kMaxVertices) + " vertices supported");
            n = fields[0];
            m = fields[1];
            header_line = line_no;
            seen.assign(n, VertexSet{});
            continue;
        }

        if (! parse_ints(line, fields) || fields.size() != 2)
            throw ParseError(ParseErrorKind::MalformedLine, line_no, "expected \"u v\"");
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(ParseErrorKind::EdgeCountMismatch, line_no, "more than " + std::to_string(m) + " edges");
        long long u = fields[0], v = fields[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseErrorKind::VertexOutOfRange, line_no,
                "vertex ids must lie in 0.." + std::to_string(n - 1));
        if (u == v)
            throw ParseError(ParseErrorKind::LoopEdge, line_no, std::to_string(u) + " " + std::to_string(v));
        if (seen[u].contains(static_cast<Vertex>(v)))
            throw ParseError(ParseErrorKind::DuplicateEdge, line_no, std::to_string(u) + " " + std::to_string(v));
        seen[u].insert(static_cast<Vertex>(v));
        seen[v].insert(static_cast<Vertex>(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    if (n < 0)
        throw ParseError(ParseErrorKind::MalformedHeader, line_no, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(ParseErrorKind::EdgeCountMismatch, header_line,
            "header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(std::istream & in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_edge_list(text);
}

} // namespace kcoal
