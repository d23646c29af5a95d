#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "remlab/cleanup.hpp"
#include "remlab/generators.hpp"
#include "remlab/homomorphism.hpp"
#include "remlab/random.hpp"

using namespace remlab;

namespace {

Graph with_edges(const Graph & g, std::initializer_list<Edge> extra)
{
    GraphBuilder b(g);
    for (const auto & e : extra)
        b.add_edge(e.u, e.v);
    return b.build();
}

Graph c7_blowup(std::size_t each)
{
    std::vector<std::size_t> s(7, each);
    return blowup(cycle_graph(7), s).graph;
}

const ClaimCheck & find_check(const std::vector<ClaimCheck> & checks, const std::string & id)
{
    for (const auto & c : checks)
        if (c.id == id)
            return c;
    FAIL("missing check " << id);
    return checks.front();
}

/// Oracle total for a set of anchors: copies with x -> a, y -> b.
std::uint64_t anchored_total(const Graph & h, Vertex x, Vertex y, const Graph & g,
                             const std::vector<std::pair<Vertex, Vertex>> & anchors)
{
    std::uint64_t total = 0;
    for (auto [a, b] : anchors) {
        std::vector<std::vector<bool>> allowed(h.order(), std::vector<bool>(g.order(), true));
        allowed[x].assign(g.order(), false);
        allowed[y].assign(g.order(), false);
        allowed[x][a] = true;
        allowed[y][b] = true;
        total += oracle::count_maps(h, g, allowed);
    }
    return total;
}

} // namespace

TEST_CASE("cleanup of a bipartite graph removes nothing")
{
    Budget b;
    auto g = complete_bipartite(6, 7);
    auto c = cleanup_short_cycles(g, 2, 0.1, b);
    REQUIRE(c.packings.size() == 2);
    CHECK(c.packings[0].size() == 0);
    CHECK(c.packings[1].size() == 0);
    CHECK(c.ec.empty());
    CHECK(c.s.empty());
    CHECK(c.g_prime == g);
    CHECK(c.min_degree_g_prime == 6);
    CHECK_FALSE(c.odd_girth_g_prime.value);
    CHECK(first_failure(c.checks) == nullptr);
}

TEST_CASE("cleanup of K4")
{
    Budget b;
    auto c = cleanup_short_cycles(complete_graph(4), 1, 0.5, b);
    CHECK(c.packings[0].size() == 1);
    CHECK(c.ec.size() == 3);
    CHECK(c.s_threshold == 1);
    CHECK(c.s.count() == 3);
    CHECK(c.kept.count() == 1);
    CHECK(c.g_prime.size() == 0);
    CHECK(c.eps_c == doctest::Approx(1.0 / 16));
    CHECK_FALSE(c.small_packings);
    CHECK(find_check(c.checks, "cleanup.ec_exact").holds);
    CHECK(find_check(c.checks, "cleanup.odd_girth").holds);
    CHECK_THROWS_AS(cleanup_short_cycles(complete_graph(4), 0, 0.5, b), InvalidArgument);
    CHECK_THROWS_AS(cleanup_short_cycles(complete_graph(4), 1, 1.5, b), InvalidArgument);
}

TEST_CASE("G' has no short odd cycles")
{
    Budget b;
    auto rng = make_rng(51, "test.cleanup");
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 10 + uniform_below(rng, 8);
        GraphBuilder gb(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (uniform_unit(rng) < 0.4)
                    gb.add_edge(u, v);
        auto g = gb.build();
        const std::size_t k = 1 + trial % 3;
        auto c = cleanup_short_cycles(g, k, 0.2, b);
        for (std::size_t l = 1; l <= k; ++l) {
            CHECK(oracle::cycles(c.g_prime, 2 * l + 1).empty());
            CHECK_FALSE(audit_packing(c.packings[l - 1], g));
        }
        CHECK(find_check(c.checks, "cleanup.ec_exact").holds);
        c.s.for_each([&](Vertex v) { CHECK(c.g_prime.degree(v) == 0); });
    }
}

TEST_CASE("refinement of a bipartite graph with one planted edge")
{
    Budget b;
    auto base = complete_bipartite(10, 10);
    auto g = with_edges(base, {{0, 1}});
    auto c = cleanup_short_cycles(g, 1, 0.2, b);
    CHECK(c.packings[0].size() == 1);
    CHECK(c.s.count() == 3);
    auto r = refine_bipartite(g, c);
    CHECK(r.kind == RefinedKind::bipartite);
    CHECK(r.s_dd.empty());
    CHECK(r.g_dd == base);
    CHECK(r.type_one == 1);
    CHECK(r.type_two == 0);
    CHECK(r.part[0] == r.part[1]);
    CHECK(first_failure(r.checks) == nullptr);
    CHECK_THROWS_AS(refine_c7(g, c, b), PreconditionFailed);
}

TEST_CASE("refinement of a C7 blow-up with a planted chord")
{
    Budget b;
    auto base = c7_blowup(4);
    // Vertices 0 and 1 share the first class.
    auto g = with_edges(base, {{0, 1}});
    auto c = cleanup_short_cycles(g, 2, 0.1, b);
    CHECK(c.packings[0].size() == 1);
    auto r = refine_c7(g, c, b);
    CHECK(r.kind == RefinedKind::c7);
    CHECK(r.parts.part_count() == 8);
    CHECK(r.s_dd.empty());
    CHECK(r.g_dd == base);
    CHECK(r.type_one == 1);
    CHECK(is_homomorphism(r.g_dd, cycle_graph(7), r.part));
    CHECK(find_check(r.checks, "refine.c7_nonempty").holds);
    CHECK(find_check(r.checks, "refine.contains_g_prime").holds);
    CHECK_THROWS_AS(refine_bipartite(g, c), PreconditionFailed);
}

TEST_CASE("pipeline on K3 in K4 matches the anchored count")
{
    Budget b;
    auto h = complete_graph(3);
    auto g = complete_graph(4);
    auto p = find_h_copies_pipeline(h, g, b);
    CHECK(p.branch == "triangle");
    CHECK(p.violations.empty());
    CHECK(p.anchors == 1);
    CHECK(p.triangle_recipe_anchors == 1);
    CHECK(p.copies.value == 2);
    CHECK(p.samples.size() == 2);
    for (const auto & s : p.samples)
        CHECK(is_copy(h, g, s));
}

TEST_CASE("pipeline on a dense C5 blow-up")
{
    Budget b;
    std::vector<std::size_t> s(5, 4);
    auto g = blowup(cycle_graph(5), s).graph;
    auto h = cycle_graph(5);
    auto p = find_h_copies_pipeline(h, g, b);
    CHECK(p.branch == "dense-cycles");
    REQUIRE(p.cleanup);
    CHECK(p.cleanup->packings[1].size() > 0);
    std::vector<std::pair<Vertex, Vertex>> anchors;
    for (const auto & c : p.cleanup->packings[1].copies)
        anchors.emplace_back(c[0], c[1]);
    CHECK(p.copies.value == anchored_total(h, p.critical.u, p.critical.v, g, anchors));
    CHECK(!p.samples.empty());
    for (const auto & x : p.samples)
        CHECK(is_copy(h, g, x));
}

TEST_CASE("pipeline in the small-packing bipartite regime")
{
    Budget b;
    auto g = with_edges(complete_bipartite(90, 90), {{0, 1}});
    PipelineOptions opt;
    opt.alpha = 0.24;
    auto h = cycle_graph(5);
    auto p = find_h_copies_pipeline(h, g, b, opt);
    CHECK(p.branch == "bipartite");
    CHECK(p.violations.empty());
    REQUIRE(p.refined);
    CHECK(p.refined->type_one == 1);
    CHECK(p.anchors == 1);
    CHECK(p.triangle_recipe_anchors == 1);
    CHECK(p.copies.value > 0);
    for (const auto & x : p.samples)
        CHECK(is_copy(h, g, x));
}

TEST_CASE("pipeline finds nothing in a bipartite host")
{
    Budget b;
    auto p = find_h_copies_pipeline(cycle_graph(5), complete_bipartite(8, 8), b);
    CHECK(p.anchors == 0);
    CHECK(p.copies.value == 0);
    CHECK(p.samples.empty());
    auto t = find_h_copies_pipeline(complete_graph(3), complete_bipartite(8, 8), b);
    CHECK(t.copies.value == 0);
    CHECK(t.violations.empty());
}

TEST_CASE("pipeline preconditions")
{
    Budget b;
    CHECK_THROWS_AS(find_h_copies_pipeline(complete_graph(4), complete_graph(6), b), PreconditionFailed);
    CHECK_THROWS_AS(find_h_copies_pipeline(cycle_graph(4), complete_graph(6), b), PreconditionFailed);
    CHECK_THROWS_AS(find_h_copies_pipeline(cycle_graph(9), complete_graph(10), b), PreconditionFailed);
}
