#include "oracle.hpp"

#include <kcoal/coalition.hpp>
#include <kcoal/domatic.hpp>
#include <kcoal/domination.hpp>
#include <kcoal/enumerate.hpp>
#include <kcoal/error.hpp>
#include <kcoal/families.hpp>

#include <doctest.h>
#include <json.hpp>

#include <numeric>
#include <random>
#include <sstream>

using namespace kcoal;

namespace {

Graph fam(const char * dsl) { return load_graph(dsl); }

std::vector<int> partners(const CoalitionCertificate & c)
{
    std::vector<int> out;
    for (auto & j : c.justify)
        out.push_back(j.partner);
    return out;
}

Graph random_graph(std::mt19937 & rng, int n, int percent)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

void check_witness(const Graph & g, int k, const SolveResult & r)
{
    if (! r.value) {
        CHECK_FALSE(r.witness);
        return;
    }
    REQUIRE(r.witness);
    REQUIRE(r.certificate);
    CHECK(r.witness->size() == *r.value);
    auto v = validate_partition(g, *r.witness, k);
    REQUIRE(v);
    CHECK(*v.certificate == *r.certificate);
}

} // namespace

TEST_CASE("partitions")
{
    Partition p(5, {{3, 4}, {0, 2}, {1}});
    CHECK(p[0] == VertexSet{0, 2});
    CHECK(p[1] == VertexSet{1});
    CHECK(p.rgs() == std::vector<int>{0, 1, 0, 2, 2});
    CHECK(Partition::from_rgs(p.rgs()) == p);
    CHECK(to_partition_text(p) == "0 2\n1\n3 4\n");
    CHECK(parse_partition("# blocks in any order\n3 4\n\n1\n0 2\n", 5) == p);
    std::istringstream in("0 1\n2\n");
    CHECK(read_partition(in, 3) == Partition(3, {{0, 1}, {2}}));

    CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), InvalidPartition);
    CHECK_THROWS_AS(Partition(3, {{0, 1}}), InvalidPartition);
    CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), InvalidPartition);
    CHECK_THROWS_AS(Partition(3, {{0, 1}, {2, 3}}), InvalidPartition);
    CHECK_THROWS_AS(Partition::from_rgs({0, 2, 1}), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("0 1\n1 2\n", 3), ParseError);
    CHECK_THROWS_AS(parse_partition("0 1\n3\n", 3), ParseError);
    CHECK_THROWS_AS(parse_partition("0 x\n", 2), ParseError);
    CHECK_THROWS_AS(parse_partition("0\n", 2), InvalidPartition);
}

TEST_CASE("validation examples")
{
    auto c4 = validate_partition(fam("cycle:4"), Partition(4, {{0}, {1}, {2}, {3}}), 2);
    REQUIRE(c4);
    CHECK(partners(*c4.certificate) == std::vector<int>{2, 3, 0, 1});

    auto p4 = validate_partition(fam("path:4"), Partition(4, {{0, 3}, {1}, {2}}), 2);
    REQUIRE(p4);
    CHECK(partners(*p4.certificate) == std::vector<int>{1, 0, 0});

    auto bad = validate_partition(fam("path:4"), Partition(4, {{0, 1}, {2}, {3}}), 2);
    CHECK_FALSE(bad);
    CHECK(bad.failing_block == 1);
    CHECK(bad.reason.find("{2}") != std::string::npos);
    CHECK_FALSE(is_k_coalition_partition(fam("path:4"), Partition(4, {{0, 1}, {2}, {3}}), 2));
}

TEST_CASE("dominating blocks need exactly k vertices")
{
    Graph p2 = fam("path:2");
    Partition whole(2, {{0, 1}});
    auto one = validate_partition(p2, whole, 1);
    CHECK_FALSE(one);
    CHECK(one.failing_block == 0);
    auto two = validate_partition(p2, whole, 2);
    REQUIRE(two);
    CHECK(two.certificate->justify.front().is_self());

    // {1,2} is 1-dominating too, but with two vertices.
    CHECK_FALSE(is_k_coalition_partition(fam("star:2"), Partition(3, {{0}, {1, 2}}), 1));
}

TEST_CASE("validation errors")
{
    CHECK_THROWS_AS(validate_partition(fam("path:4"), Partition(3, {{0, 1, 2}}), 2), InvalidPartition);
    CHECK_THROWS_AS(validate_partition(fam("path:3"), Partition(3, {{0, 1, 2}}), 0), InvalidArgument);
}

TEST_CASE("certificate JSON")
{
    Partition p(4, {{0, 3}, {1}, {2}});
    auto v = validate_partition(fam("path:4"), p, 2);
    auto j = nlohmann::json::parse(certificate_json(p, *v.certificate));
    CHECK(j["blocks"] == nlohmann::json::parse("[[0,3],[1],[2]]"));
    CHECK(j["justify"] == nlohmann::json::parse(R"([{"partner":1},{"partner":0},{"partner":0}])"));

    Partition whole(2, {{0, 1}});
    auto self = validate_partition(fam("path:2"), whole, 2);
    CHECK(certificate_json(whole, *self.certificate) == R"({"blocks":[[0,1]],"justify":[{"self":true}]})");
}

TEST_CASE("oracle examples")
{
    auto c6 = coalition_number_oracle(fam("cycle:6"), 2);
    CHECK(c6.value == 4);
    check_witness(fam("cycle:6"), 2, c6);

    auto k1 = coalition_number_oracle(fam("complete:1"), 2);
    CHECK_FALSE(k1.value);
    CHECK_FALSE(k1.witness);

    CHECK_THROWS_AS(coalition_number_oracle(fam("path:12"), 2), BudgetExceeded);
}

TEST_CASE("two-vertex path splits into two coalition partners")
{
    Graph p2 = fam("path:2");
    CHECK(oracle::coalition_number(p2, 2) == 2);
    for (auto r : {coalition_number_oracle(p2, 2), coalition_number(p2, 2)}) {
        CHECK(r.value == 2);
        CHECK(r.witness == Partition(2, {{0}, {1}}));
        CHECK(partners(*r.certificate) == std::vector<int>{1, 0});
    }
}

TEST_CASE("solver examples")
{
    CHECK(coalition_number(fam("complete:5"), 2).value == 5);
    CHECK(coalition_number(fam("complete:5"), 3).value == 4);
    CHECK(coalition_number(fam("path:7"), 2).value == 3);
    CHECK(coalition_number(fam("cycle:5"), 2).value == 3);
    CHECK_FALSE(coalition_number(fam("path:1"), 2).value);
    CHECK(coalition_number(fam("path:1"), 1).value == 1);
    CHECK_THROWS_AS(coalition_number(fam("complete:15"), 2), BudgetExceeded);
    SolverOptions tight;
    tight.node_limit = 10;
    CHECK_THROWS_AS(coalition_number(fam("cycle:10"), 2, tight), BudgetExceeded);
    SolverOptions wide;
    wide.max_vertices = 15;
    CHECK(coalition_number(fam("complete:15"), 14, wide).value == 3);
    CHECK_THROWS_AS(coalition_number(fam("path:3"), 0), InvalidArgument);
}

TEST_CASE("solver, library oracle and brute force agree")
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (int k = 1; k <= 3; ++k) {
                auto expected = oracle::coalition_number(g, k);
                auto fast = coalition_number(g, k);
                auto slow = coalition_number_oracle(g, k);
                CHECK(fast.value == expected);
                CHECK(slow.value == expected);
                CHECK(fast.witness == slow.witness);
                check_witness(g, k, fast);
            }
        }
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph(rng, n, 20 + static_cast<int>(rng() % 60));
        for (int k = 1; k <= 3; ++k) {
            auto fast = coalition_number(g, k);
            CHECK(fast.value == oracle::coalition_number(g, k));
            check_witness(g, k, fast);
        }
    }
}

TEST_CASE("coalition number is invariant under relabelling")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 50);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        int k = 1 + static_cast<int>(rng() % 3);
        CHECK(coalition_number(g, k).value == coalition_number(g.relabelled(perm), k).value);
    }
}

TEST_CASE("solver never exceeds its stopping bound")
{
    for (int n = 1; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); mask += n <= 5 ? 1 : 7)
            for (int k = 1; k <= 3; ++k) {
                Graph g = graph_from_edge_mask(n, mask);
                auto r = coalition_number(g, k);
                if (r.value)
                    CHECK(*r.value <= proven_upper_bound(g, k));
            }
}

TEST_CASE("trusting the stated bounds keeps the value on regular graphs")
{
    SolverOptions trust;
    trust.trust_paper_bounds = true;
    for (const char * dsl : {"cycle:6", "cycle:7", "complete:6", "cocktail:8", "cycle:10"})
        CHECK(coalition_number(fam(dsl), 2, trust).value == coalition_number(fam(dsl), 2).value);
}

TEST_CASE("construction examples")
{
    auto c4 = construct_from_domatic(fam("cycle:4"), 2);
    CHECK(c4.partition == Partition(4, {{0}, {1}, {2}, {3}}));
    CHECK(partners(c4.certificate) == std::vector<int>{2, 3, 0, 1});
    CHECK(c4.domatic_blocks == 2);
    CHECK_FALSE(c4.used_fallback);

    auto k3 = construct_from_domatic(fam("complete:3"), 1);
    CHECK(k3.partition == Partition(3, {{0}, {1}, {2}}));
    CHECK(k3.domatic_blocks == 3);

    auto c6 = construct_from_domatic(fam("cycle:6"), 2);
    CHECK(c6.partition == Partition(6, {{0}, {1}, {2, 4}, {3, 5}}));
    CHECK(c6.partition.size() >= 2 * domatic_number(fam("cycle:6"), 2));

    CHECK_THROWS_AS(construct_from_domatic(fam("path:4"), 2), PreconditionError);
    CHECK_THROWS_AS(construct_from_domatic(fam("empty:3"), 1), PreconditionError);
    CHECK_THROWS_AS(construct_from_domatic(fam("cycle:4"), 0), InvalidArgument);
}

TEST_CASE("construction is sound on every graph with minimum degree at least k")
{
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t mask = 0; mask < graph_count(n); ++mask) {
            Graph g = graph_from_edge_mask(n, mask);
            for (int k = 1; k <= std::min(3, g.min_degree()); ++k) {
                auto r = construct_from_domatic(g, k);
                auto v = validate_partition(g, r.partition, k);
                REQUIRE(v);
                CHECK(*v.certificate == r.certificate);
                CHECK(r.domatic_blocks == domatic_number(g, k));
            }
        }
}

TEST_CASE("coalition graphs")
{
    Graph cg = coalition_graph(fam("cycle:4"), Partition(4, {{0}, {1}, {2}, {3}}), 2);
    CHECK(cg.order() == 4);
    CHECK(cg.edges() == std::vector<Edge>{{0, 2}, {1, 3}});

    Graph star = coalition_graph(fam("path:4"), Partition(4, {{0, 3}, {1}, {2}}), 2);
    CHECK(star.edges() == std::vector<Edge>{{0, 1}, {0, 2}});

    Graph single = coalition_graph(fam("path:2"), Partition(2, {{0, 1}}), 2);
    CHECK(single.order() == 1);
    CHECK(single.size() == 0);

    CHECK_THROWS_AS(coalition_graph(fam("path:4"), Partition(4, {{0, 1}, {2}, {3}}), 2), PreconditionError);
}

TEST_CASE("stated bounds")
{
    CHECK(upper_bound(fam("path:9"), 2) == 3);
    CHECK(upper_bound(fam("cycle:8"), 2) == 4);
    CHECK(upper_bound(fam("complete:4"), 1) == 4);
    CHECK(upper_bound(fam("star:5"), 1) == 6);
    CHECK(upper_bound(fam("star:5"), 2) == 6);
    CHECK(upper_bound(fam("complete:2"), 3) == 1);
    CHECK(proven_upper_bound(fam("complete:2"), 3) == 2);
    CHECK(proven_upper_bound(fam("path:9"), 2) == 3);
    CHECK(proven_upper_bound(fam("cycle:8"), 2) == 8);
}

TEST_CASE("domatic lower bound")
{
    CHECK(lower_bound_domatic(fam("cycle:4"), 2) == 4);
    Graph c5 = fam("cycle:5");
    int expected = std::max(2 * oracle::domatic(c5, 2), oracle::domatic(c5, 1));
    CHECK(expected == 2);
    CHECK(lower_bound_domatic(c5, 2) == expected);
    CHECK(lower_bound_domatic(fam("complete:2"), 2) == 2);
    CHECK(coalition_number(fam("complete:2"), 2).value == 2);
    CHECK(lower_bound_domatic(fam("empty:3"), 2) == 1);
    Graph matching(4, {{0, 1}, {2, 3}});
    CHECK(lower_bound_domatic(matching, 1) == 1);
    CHECK(lower_bound_domatic(matching, 2) == 2);
}

TEST_CASE("pendant coronas of short paths reach only three blocks")
{
    for (int n : {3, 4}) {
        Graph g = corona(generate(FamilySpec::path(n)), Graph(1));
        CHECK(oracle::coalition_number(g, 2) == 3);
        CHECK(coalition_number(g, 2).value == 3);
    }
    Graph p5 = corona(generate(FamilySpec::path(5)), Graph(1));
    CHECK(coalition_number(p5, 2).value == 4);
}

TEST_CASE("small bicliques against brute force")
{
    for (int s = 1; s <= 4; ++s)
        for (int t = s; s + t <= 8; ++t)
            for (int k = 1; k <= t; ++k) {
                Graph g = generate(FamilySpec::biclique(s, t));
                CHECK(coalition_number(g, k).value == oracle::coalition_number(g, k));
            }
}
