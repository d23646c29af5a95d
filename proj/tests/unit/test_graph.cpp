#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "remlab/generators.hpp"
#include "remlab/graph.hpp"
#include "remlab/graph_io.hpp"
#include "remlab/partition.hpp"
#include "remlab/random.hpp"

#include <sstream>

using namespace remlab;

namespace {

void check_symmetric(const Graph & g)
{
    std::size_t total = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        total += g.degree(u);
        for (Vertex v = 0; v < g.order(); ++v)
            CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(total == 2 * g.size());
}

Graph random_graph(std::size_t n, double p, Rng & rng)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p)
                b.add_edge(u, v);
    return b.build();
}

} // namespace

TEST_CASE("build_graph examples")
{
    Edge tri[] = {{0, 1}, {1, 2}, {0, 2}};
    Graph k3(3, tri);
    CHECK(k3.size() == 3);
    CHECK(k3 == complete_graph(3));

    Graph e4(4, std::span<const Edge>{});
    CHECK(e4.size() == 0);

    Edge c5e[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    Graph c5(5, c5e);
    for (Vertex v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(c5 == cycle_graph(5));
}

TEST_CASE("build_graph rejects bad input")
{
    Edge out_of_range[] = {{0, 3}};
    CHECK_THROWS_AS(Graph(3, out_of_range), InvalidArgument);
    Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), InvalidArgument);
    Edge dup[] = {{0, 1}, {0, 1}};
    CHECK_THROWS_AS(Graph(3, dup), InvalidArgument);
    Edge reversed_dup[] = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(3, reversed_dup), InvalidArgument);
}

TEST_CASE("induced subgraphs")
{
    auto k4 = complete_graph(4);
    Vertex three[] = {0, 2, 3};
    CHECK(induced_subgraph(k4, three).graph == complete_graph(3));

    auto c5 = cycle_graph(5);
    Vertex pair[] = {1, 2};
    auto sub = induced_subgraph(c5, pair);
    CHECK(sub.graph.size() == 1);
    CHECK(sub.to_parent == std::vector<Vertex>{1, 2});

    // Outer ring of the Petersen graph.
    auto p = petersen_graph();
    Vertex ring[] = {0, 1, 2, 3, 4};
    CHECK(induced_subgraph(p, ring).graph == cycle_graph(5));
    Vertex inner[] = {5, 7, 9, 6, 8};
    CHECK(induced_subgraph(p, inner).graph == cycle_graph(5));

    Vertex bad[] = {0, 10};
    CHECK_THROWS_AS(induced_subgraph(p, bad), InvalidArgument);
}

TEST_CASE("induced subgraph preserves adjacency on random graphs")
{
    auto rng = make_rng(11, "test.induced");
    for (int trial = 0; trial < 50; ++trial) {
        auto n = 1 + uniform_below(rng, 64);
        auto g = random_graph(n, 0.3, rng);
        std::vector<Vertex> pick;
        for (Vertex v = 0; v < n; ++v)
            if (uniform_below(rng, 2))
                pick.push_back(v);
        shuffle(std::span(pick), rng);
        auto sub = induced_subgraph(g, pick);
        REQUIRE(sub.graph.order() == pick.size());
        for (Vertex i = 0; i < pick.size(); ++i)
            for (Vertex j = 0; j < pick.size(); ++j)
                CHECK(sub.graph.adjacent(i, j) == g.adjacent(pick[i], pick[j]));
    }
}

TEST_CASE("degrees and codegrees")
{
    CHECK(min_degree(cycle_graph(5)) == 2);
    auto k4 = complete_graph(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v)
            CHECK(codegree(k4, u, v) == 2);
    CHECK_THROWS_AS(codegree(k4, 1, 1), InvalidArgument);

    std::size_t sizes[] = {4, 4, 4};
    auto t = complete_multipartite(sizes);
    CHECK(min_degree(t) == 8);
    CHECK(min_degree(empty_graph(0)) == 0);
}

TEST_CASE("named generators are symmetric and loop-free")
{
    check_symmetric(petersen_graph());
    check_symmetric(complete_bipartite(3, 5));
    check_symmetric(path_graph(7));
    CHECK(petersen_graph().size() == 15);
    CHECK(path_graph(7).size() == 6);
    CHECK(complete_bipartite(3, 5).size() == 15);
}

TEST_CASE("blowup")
{
    std::size_t s[] = {2, 1, 1, 1, 1};
    auto b = blowup(cycle_graph(5), s);
    CHECK(b.graph.order() == 6);
    CHECK(b.graph.size() == 7);
    CHECK(b.class_of == std::vector<Vertex>{0, 0, 1, 2, 3, 4});
    CHECK_FALSE(b.graph.adjacent(0, 1));
    std::size_t zero[] = {0, 1, 1, 1, 1};
    CHECK_THROWS_AS(blowup(cycle_graph(5), zero), InvalidArgument);
}

TEST_CASE("random_regular_bipartite examples")
{
    CHECK(random_regular_bipartite(5, 5, 5, 1) == complete_bipartite(5, 5));

    auto matching = random_regular_bipartite(6, 6, 1, 2);
    CHECK(matching.size() == 6);
    for (Vertex v = 0; v < 12; ++v)
        CHECK(matching.degree(v) == 1);

    auto g = random_regular_bipartite(8, 8, 3, 3);
    for (Vertex v = 0; v < 16; ++v)
        CHECK(g.degree(v) == 3);

    CHECK_THROWS_AS(random_regular_bipartite(4, 4, 5, 1), InvalidArgument);
    CHECK_THROWS_AS(random_regular_bipartite(4, 5, 2, 1), InvalidArgument);
}

TEST_CASE("random_regular_bipartite is regular, bipartite and seeded")
{
    for (std::size_t a = 1; a <= 64; a += 7)
        for (std::size_t d = 0; d <= a; d += 1 + a / 5) {
            auto g = random_regular_bipartite(a, a, d, a * 100 + d);
            check_symmetric(g);
            for (Vertex v = 0; v < 2 * a; ++v)
                REQUIRE(g.degree(v) == d);
            for (const auto & e : g.edges())
                REQUIRE((e.u < a) != (e.v < a));
        }
    CHECK(random_regular_bipartite(20, 20, 6, 9) == random_regular_bipartite(20, 20, 6, 9));
    CHECK_FALSE(random_regular_bipartite(20, 20, 6, 9) == random_regular_bipartite(20, 20, 6, 10));
}

TEST_CASE("random_regular")
{
    for (std::size_t m : {5, 10, 17, 40})
        for (std::size_t d = 0; d < m; ++d) {
            if ((d * m) % 2)
                continue;
            auto g = random_regular(m, d, m + d);
            check_symmetric(g);
            for (Vertex v = 0; v < m; ++v)
                REQUIRE(g.degree(v) == d);
        }
    CHECK_THROWS_AS(random_regular(5, 3, 1), InvalidArgument);
    CHECK_THROWS_AS(random_regular(5, 5, 1), InvalidArgument);
}

TEST_CASE("apportion")
{
    double w[] = {1, 1, 1};
    CHECK(apportion(10, w) == std::vector<std::size_t>{4, 3, 3});
    double w2[] = {1, 1, 1, 1, 3};
    CHECK(apportion(70, w2) == std::vector<std::size_t>{10, 10, 10, 10, 30});
    CHECK(apportion(71, w2) == std::vector<std::size_t>{10, 10, 10, 10, 31});
}

TEST_CASE("edge list round trip")
{
    auto rng = make_rng(5, "test.io");
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_graph(1 + uniform_below(rng, 40), 0.2, rng);
        std::stringstream s;
        write_edge_list(s, g);
        CHECK(read_edge_list(s) == g);
    }
    std::istringstream crlf("3 2\r\n0 1\r\n1 2\r\n");
    CHECK(read_edge_list(crlf) == path_graph(3));
    std::istringstream bad("3 1\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(bad), IoError);
    std::istringstream dup("3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_edge_list(dup), IoError);
    std::istringstream short_input("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_input), IoError);
}

TEST_CASE("partition validity and sidecar round trip")
{
    auto g = complete_bipartite(2, 2);
    VertexPartition p(4);
    auto l = p.add_part("L");
    auto r = p.add_part("R");
    Vertex left[] = {0, 1};
    Vertex right[] = {2, 3};
    p.assign(left, l);
    CHECK_FALSE(p.complete());
    p.assign(right, r);
    CHECK_FALSE(p.valid_for(g));
    p.allow(r, l);
    CHECK(p.valid_for(g));
    CHECK_THROWS_AS(p.add_part("L"), InvalidArgument);

    std::stringstream s;
    write_partition(s, p);
    CHECK(s.str() == "0 L\n1 L\n2 R\n3 R\n");
    auto back = read_partition(s, 4);
    CHECK(back.part_count() == 2);
    CHECK(back.members(back.part_id("R")) == std::vector<Vertex>{2, 3});

    std::stringstream partial("# header\n0 A\n1 -\n3 A\n");
    auto q = read_partition(partial, 4);
    CHECK(q.part_count() == 1);
    CHECK(q.part_of(1) == VertexPartition::kUnassigned);
    CHECK(q.part_of(2) == VertexPartition::kUnassigned);
    std::stringstream again;
    write_partition(again, q);
    CHECK(again.str() == "0 A\n1 -\n2 -\n3 A\n");
}
