#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "remlab/constructions.hpp"
#include "remlab/generators.hpp"
#include "remlab/invariants.hpp"
#include "remlab/random.hpp"

using namespace remlab;

namespace {

std::size_t cycles_touching(const Graph & g, std::size_t length, const VertexSet & s)
{
    std::size_t hits = 0;
    for (const auto & c : oracle::cycles(g, length))
        for (auto v : c)
            if (s.test(v)) {
                ++hits;
                break;
            }
    return hits;
}

VertexSet parts_named(const VertexPartition & p, char prefix)
{
    VertexSet out(p.order());
    for (VertexPartition::PartId id = 0; id < p.part_count(); ++id)
        if (p.name(id).front() == prefix)
            out |= p.member_set(id);
    return out;
}

} // namespace

TEST_CASE("behrend sets")
{
    CHECK(behrend_set(1).B == std::vector<std::uint64_t>{1});
    CHECK(behrend_set(0).B.empty());
    auto ten = behrend_set(10);
    CHECK(ten.B.size() >= 4);
    CHECK(ten.B.size() <= oracle::max_3ap_free(10));
    for (int n = 1; n <= 16; ++n) {
        auto s = behrend_set(static_cast<std::uint64_t>(n));
        CHECK_FALSE(oracle::has_nontrivial_solution(s.B, 1));
        CHECK(s.B.size() <= oracle::max_3ap_free(n));
    }
}

TEST_CASE("solution-free sets pass the audit up to 200")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint64_t N = 1; N <= 200; ++N) {
            auto s = solution_free_set(N, k);
            REQUIRE_FALSE(s.B.empty());
            CHECK_FALSE(audit_solution_free(s));
        }
    for (std::size_t k = 1; k <= 2; ++k)
        for (std::uint64_t N = 1; N <= 40; ++N)
            CHECK_FALSE(oracle::has_nontrivial_solution(solution_free_set(N, k).B, k));
    CHECK(solution_free_set(2, 2).B == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("the audit agrees with the naive solution search")
{
    auto rng = make_rng(51, "test.arith");
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t N = 1 + uniform_below(rng, 24);
        const std::size_t k = 1 + uniform_below(rng, 2);
        SolutionFreeSet s{N, {}, k};
        for (std::uint64_t x = 1; x <= N; ++x)
            if (uniform_below(rng, 3) == 0)
                s.B.push_back(x);
        CHECK(audit_solution_free(s).has_value() == oracle::has_nontrivial_solution(s.B, k));
    }
    CHECK(audit_solution_free({10, {1, 2, 3}, 1}));
    CHECK(audit_solution_free({10, {2, 1}, 1}));
    CHECK(audit_solution_free({3, {1, 4}, 1}));
}

TEST_CASE("turan graphs")
{
    CHECK(turan_graph(6, 2) == complete_bipartite(3, 3));
    CHECK(min_degree(turan_graph(6, 2)) == 3);
    CHECK(min_degree(turan_graph(6, 3)) == 4);
    CHECK(turan_part_sizes(10, 3) == std::vector<std::size_t>{4, 3, 3});
    CHECK(min_degree(turan_graph(10, 3)) == 6);
    CHECK(min_degree(turan_graph(12, 3)) == 8);
    auto t = turan_construction(11, 4);
    CHECK(audit_construction(t).empty());
    CHECK(min_degree(t.graph) == t.declared_min_degree);
    CHECK_THROWS_AS(turan_graph(5, 0), InvalidArgument);
}

TEST_CASE("triangle gadget has only designated triangles")
{
    for (std::size_t m : {7u, 12u, 20u}) {
        auto B = behrend_set((m - 1) / 2);
        auto g = rs_gadget(1, m, B);
        CHECK(g.params.modulus == m);
        CHECK(audit_construction(g).empty());
        REQUIRE(g.designed_packing);
        CHECK(g.designed_packing->size() == m * B.B.size());
        CHECK(oracle::triangles(g.graph) == m * B.B.size());
        CHECK(g.graph.size() == 3 * m * B.B.size());
    }
    auto partial = rs_gadget(1, 5, behrend_set(6), 13);
    CHECK(oracle::triangles(partial.graph) == 5 * behrend_set(6).B.size());
}

TEST_CASE("pentagon gadget has only designated five-cycles")
{
    auto B = solution_free_set(4, 2);
    auto g = rs_gadget(2, 9, B);
    CHECK(audit_construction(g).empty());
    CHECK(oracle::cycles(g.graph, 5).size() == 9 * B.B.size());
    CHECK(oracle::cycles(g.graph, 3).empty());
}

TEST_CASE("gadget edge cases")
{
    auto empty = rs_gadget(1, 5, SolutionFreeSet{4, {}, 1});
    CHECK(empty.graph.size() == 0);
    CHECK(empty.designed_packing->size() == 0);
    CHECK_THROWS_AS(rs_gadget(1, 5, SolutionFreeSet{4, {1, 2, 3}, 1}), InvalidArgument);
    CHECK_THROWS_AS(rs_gadget(2, 5, behrend_set(4)), InvalidArgument);
    CHECK_THROWS_AS(rs_gadget(1, 5, behrend_set(4), 6), InvalidArgument);
}

TEST_CASE("gadget-plus-blow-up construction keeps short odd cycles in the gadget")
{
    auto c = lemma7_construction(1, 60, 0.3);
    CHECK(audit_construction(c).empty());
    auto u = parts_named(c.partition, 'U');
    CHECK(cycles_touching(c.graph, 3, u) == 0);
    CHECK(oracle::triangles(c.graph) == c.designed_packing->size());
    const auto delta = min_degree(c.graph);
    CHECK(delta + 3 >= c.declared_min_degree);
    CHECK(delta <= c.declared_min_degree + 3);

    auto five = lemma7_construction(2, 30, 0.5);
    CHECK(audit_construction(five).empty());
    CHECK(cycles_touching(five.graph, 5, parts_named(five.partition, 'U')) == 0);
    CHECK(cycles_touching(five.graph, 3, parts_named(five.partition, 'U')) == 0);

    CHECK_THROWS_AS(lemma7_construction(1, 10, 0.99), InvalidArgument);
    CHECK_THROWS_AS(lemma7_construction(1, 60, 0.3, 50), InvalidArgument);
}

TEST_CASE("no-critical-edge construction")
{
    auto c = thm9_no_critical_edge(3, 40, 0.1, 5);
    CHECK(audit_construction(c).empty());
    CHECK(c.params.degree == 4);
    CHECK(min_degree(c.graph) >= min_degree(turan_graph(40, 2)));
    // Every inside edge extends by all of V_2.
    CHECK(oracle::triangles(c.graph) >= 20 * 4 * 20 / 2);
    auto zero = thm9_no_critical_edge(3, 40, 0.0, 5);
    CHECK(zero.graph == turan_graph(40, 2));
    CHECK(oracle::triangles(zero.graph) == 0);
    CHECK_THROWS_AS(thm9_no_critical_edge(3, 42, 1.0 / 42, 5), InvalidArgument);
    CHECK(audit_construction(thm9_no_critical_edge(4, 30, 0.1, 2)).empty());
}

TEST_CASE("general lower-bound construction")
{
    for (double eps : {0.0, 0.05, 0.1}) {
        auto c = thm9_general(3, 40, eps, 11);
        CHECK(audit_construction(c).empty());
        CHECK(min_degree(c.graph) + 2 >= 10);
        const auto d = c.params.degree;
        CHECK(oracle::triangles(c.graph) == 10 * d * d);
        auto part = [&](Vertex v) { return c.partition.part_of(v); };
        for (const auto & t : oracle::cycles(c.graph, 3)) {
            std::vector<std::uint32_t> ps{part(t[0]), part(t[1]), part(t[2])};
            std::sort(ps.begin(), ps.end());
            CHECK(ps == std::vector<std::uint32_t>{1, 2, 3});
        }
        if (eps == 0.0)
            CHECK(is_bipartite(c.graph));
    }
    auto four = thm9_general(4, 70, 0.05, 3);
    CHECK(audit_construction(four).empty());
    CHECK(min_degree(four.graph) >= 4 * 70 / 7);
    CHECK_THROWS_AS(thm9_general(3, 40, 0.5, 1), InvalidArgument);
}
