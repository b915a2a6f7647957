#include <kcoal/error.hpp>
#include <kcoal/families.hpp>
#include <kcoal/graph.hpp>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

using namespace kcoal;

namespace {

ParseError parse_failure(const std::string & text)
{
    try {
        parse_edge_list(text);
    }
    catch (const ParseError & e) {
        return e;
    }
    FAIL("no ParseError for: " << text);
    return ParseError(ParseErrorKind::MalformedHeader, 0, "");
}

} // namespace

TEST_CASE("vertex sets")
{
    VertexSet s{0, 3, 5};
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.front() == 0);
    CHECK(s.back() == 5);
    CHECK(s.to_vector() == std::vector<Vertex>{0, 3, 5});
    CHECK(s.to_string() == "{0,3,5}");
    CHECK((s - VertexSet{3}) == VertexSet{0, 5});
    CHECK(VertexSet::range(4).size() == 4);
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(VertexSet{}.empty());
}

TEST_CASE("parse edge lists")
{
    Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(p3 == generate(FamilySpec::path(3)));

    Graph k1 = parse_edge_list("1 0\n");
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);

    Graph commented = parse_edge_list("# a path\n\n3 2\n# edges\n2 1\n\n1 0\n");
    CHECK(commented == p3);
}

TEST_CASE("parse errors carry kind and line")
{
    auto loop = parse_failure("2 1\n0 0\n");
    CHECK(loop.kind() == ParseErrorKind::LoopEdge);
    CHECK(loop.line() == 2);

    auto range = parse_failure("3 1\n0 3\n");
    CHECK(range.kind() == ParseErrorKind::VertexOutOfRange);
    CHECK(range.line() == 2);

    auto dup = parse_failure("3 2\n0 1\n# same edge reversed\n1 0\n");
    CHECK(dup.kind() == ParseErrorKind::DuplicateEdge);
    CHECK(dup.line() == 4);

    CHECK(parse_failure("three 2\n").kind() == ParseErrorKind::MalformedHeader);
    CHECK(parse_failure("").kind() == ParseErrorKind::MalformedHeader);
    CHECK(parse_failure("3 1\n0\n").kind() == ParseErrorKind::MalformedLine);
    CHECK(parse_failure("3 1\n0 1 2\n").kind() == ParseErrorKind::MalformedLine);
    CHECK(parse_failure("3 2\n0 1\n").kind() == ParseErrorKind::EdgeCountMismatch);
    CHECK(parse_failure("3 1\n0 1\n1 2\n").kind() == ParseErrorKind::EdgeCountMismatch);
    CHECK(parse_failure("3 1\n-1 2\n").kind() == ParseErrorKind::VertexOutOfRange);
}

TEST_CASE("constructor validation")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(65), InvalidArgument);
    CHECK_THROWS_AS(Graph(-1), InvalidArgument);
    CHECK_NOTHROW(Graph(64));
}

TEST_CASE("degrees, connectivity and distances")
{
    Graph star = generate(FamilySpec::star(4));
    CHECK(star.min_degree() == 1);
    CHECK(star.max_degree() == 4);
    CHECK(star.is_tree());
    CHECK(star.distances_from(1) == std::vector<int>{1, 0, 2, 2, 2});

    Graph two = Graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two.is_connected());
    CHECK_FALSE(two.is_tree());
    CHECK(two.distances_from(0)[3] == -1);
    CHECK(two.is_regular(1));

    CHECK(Graph(0).is_connected());
    CHECK(Graph(1).is_tree());
    CHECK(generate(FamilySpec::cycle(5)).is_regular(2));
    CHECK_FALSE(generate(FamilySpec::cycle(5)).is_tree());
}

TEST_CASE("complement and subset checks")
{
    Graph c4 = generate(FamilySpec::cycle(4));
    Graph co = c4.complement();
    CHECK(co.size() == 2);
    CHECK(co.adjacent(0, 2));
    CHECK(co.adjacent(1, 3));
    CHECK(co.complement() == c4);
    CHECK_THROWS_AS(c4.check_subset(VertexSet{4}), InvalidArgument);
    CHECK_NOTHROW(c4.check_subset(VertexSet{0, 3}));
}

TEST_CASE("edge list round trip")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 3 == 0)
                    edges.emplace_back(v, u);
        std::shuffle(edges.begin(), edges.end(), rng);
        Graph g(n, edges);
        std::string text = to_edge_list(g);
        CHECK(parse_edge_list(text) == g);
        std::istringstream in(text);
        CHECK(read_edge_list(in) == g);
        CHECK(to_edge_list(parse_edge_list(text)) == text);
    }
}

TEST_CASE("relabelling preserves the degree sequence")
{
    std::mt19937 rng(11);
    Graph g = generate(FamilySpec::spider(3));
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = g.relabelled(perm);
    CHECK(h.size() == g.size());
    for (Vertex v = 0; v < g.order(); ++v)
        CHECK(h.degree(perm[v]) == g.degree(v));
    for (auto [u, v] : g.edges())
        CHECK(h.adjacent(perm[u], perm[v]));
    CHECK_THROWS_AS(g.relabelled({0, 1}), InvalidArgument);
}
