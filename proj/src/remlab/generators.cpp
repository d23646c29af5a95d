#include "remlab/generators.hpp"
#include "remlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace remlab {

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

Graph complete_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw InvalidArgument("cycle_graph: need at least 3 vertices");
    GraphBuilder b(n);
    for (Vertex i = 0; i < n; ++i)
        b.add_edge(i, static_cast<Vertex>((i + 1) % n));
    return b.build();
}

Graph path_graph(std::size_t n)
{
    GraphBuilder b(n);
    for (Vertex i = 0; i + 1 < n; ++i)
        b.add_edge(i, i + 1);
    return b.build();
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::size_t sizes[] = {a, b};
    return complete_multipartite(sizes);
}

Graph complete_multipartite(std::span<const std::size_t> sizes)
{
    std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    GraphBuilder b(n);
    std::vector<std::size_t> start(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i)
        start[i + 1] = start[i] + sizes[i];
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
            for (auto u = start[i]; u < start[i + 1]; ++u)
                for (auto v = start[j]; v < start[j + 1]; ++v)
                    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return b.build();
}

Graph petersen_graph()
{
    GraphBuilder b(10);
    for (Vertex i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return b.build();
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    GraphBuilder out(a.order() + b.order());
    for (const auto & e : a.edges())
        out.add_edge(e.u, e.v);
    auto shift = static_cast<Vertex>(a.order());
    for (const auto & e : b.edges())
        out.add_edge(e.u + shift, e.v + shift);
    return out.build();
}

Blowup blowup(const Graph & h, std::span<const std::size_t> multiplicities)
{
    if (multiplicities.size() != h.order())
        throw InvalidArgument("blowup: need one multiplicity per vertex");
    std::vector<std::size_t> start(h.order() + 1, 0);
    for (std::size_t i = 0; i < h.order(); ++i) {
        if (multiplicities[i] == 0)
            throw InvalidArgument("blowup: multiplicities must be positive");
        start[i + 1] = start[i] + multiplicities[i];
    }
    Blowup out{GraphBuilder(start.back()).build(), std::vector<Vertex>(start.back())};
    GraphBuilder b(start.back());
    for (std::size_t i = 0; i < h.order(); ++i)
        for (auto v = start[i]; v < start[i + 1]; ++v)
            out.class_of[v] = static_cast<Vertex>(i);
    for (const auto & e : h.edges())
        for (auto u = start[e.u]; u < start[e.u + 1]; ++u)
            for (auto v = start[e.v]; v < start[e.v + 1]; ++v)
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    out.graph = b.build();
    return out;
}

namespace {

/// Degree-preserving double-edge switches. In bipartite mode every edge is
/// stored as (left, right) and only side-preserving switches occur.
void randomise_by_switches(GraphBuilder & builder, std::vector<Edge> & edges, Rng & rng, bool bipartite)
{
    if (edges.size() < 2)
        return;
    const std::size_t attempts = 10 * edges.size();
    for (std::size_t t = 0; t < attempts; ++t) {
        auto i = static_cast<std::size_t>(uniform_below(rng, edges.size()));
        auto j = static_cast<std::size_t>(uniform_below(rng, edges.size()));
        if (i == j)
            continue;
        auto [a, b] = edges[i];
        auto [c, d] = edges[j];
        if (!bipartite && uniform_below(rng, 2) == 1)
            std::swap(c, d);
        // a-b, c-d  ->  a-d, c-b
        if (a == c || a == d || b == c || b == d)
            continue;
        if (builder.has_edge(a, d) || builder.has_edge(c, b))
            continue;
        builder.remove_edge(a, b);
        builder.remove_edge(c, d);
        builder.add_edge(a, d);
        builder.add_edge(c, b);
        edges[i] = bipartite ? Edge{a, d} : make_edge(a, d);
        edges[j] = bipartite ? Edge{c, b} : make_edge(c, b);
    }
}

} // namespace

Graph random_regular_bipartite(std::size_t a, std::size_t b, std::size_t d, std::uint64_t seed)
{
    if (a != b)
        throw InvalidArgument("random_regular_bipartite: only equal sides are supported (got " + std::to_string(a) +
                              " and " + std::to_string(b) + ")");
    if (d > a)
        throw InvalidArgument("random_regular_bipartite: degree " + std::to_string(d) + " infeasible for side size " +
                              std::to_string(a));
    auto rng = make_rng(seed, "random_regular_bipartite");
    std::vector<Vertex> left(a), right(a), shifts(a);
    std::iota(left.begin(), left.end(), Vertex{0});
    std::iota(right.begin(), right.end(), static_cast<Vertex>(a));
    std::iota(shifts.begin(), shifts.end(), Vertex{0});
    shuffle(std::span(left), rng);
    shuffle(std::span(right), rng);
    shuffle(std::span(shifts), rng);

    // Union of d edge-disjoint perfect matchings i -> i + s (mod a).
    GraphBuilder builder(2 * a);
    std::vector<Edge> edges;
    edges.reserve(a * d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < a; ++i) {
            Vertex l = left[i];
            Vertex r = right[(i + shifts[k]) % a];
            builder.add_edge(l, r);
            edges.push_back({l, r});
        }
    randomise_by_switches(builder, edges, rng, true);
    return builder.build();
}

Graph random_regular(std::size_t m, std::size_t d, std::uint64_t seed)
{
    if (d == 0)
        return empty_graph(m);
    if (d >= m)
        throw InvalidArgument("random_regular: degree " + std::to_string(d) + " infeasible on " + std::to_string(m) +
                              " vertices");
    if ((d * m) % 2 != 0)
        throw InvalidArgument("random_regular: degree times order must be even");
    auto rng = make_rng(seed, "random_regular");
    std::vector<Vertex> label(m);
    std::iota(label.begin(), label.end(), Vertex{0});
    shuffle(std::span(label), rng);

    // Circulant start: shifts 1..d/2, plus the antipodal shift when d is odd.
    GraphBuilder builder(m);
    std::vector<Edge> edges;
    auto add = [&](std::size_t i, std::size_t j) {
        auto e = make_edge(label[i], label[j]);
        builder.add_edge(e.u, e.v);
        edges.push_back(e);
    };
    for (std::size_t s = 1; s <= d / 2; ++s)
        for (std::size_t i = 0; i < m; ++i)
            add(i, (i + s) % m);
    if (d % 2 == 1)
        for (std::size_t i = 0; i < m / 2; ++i)
            add(i, i + m / 2);
    randomise_by_switches(builder, edges, rng, false);
    return builder.build();
}

std::vector<std::size_t> apportion(std::size_t total, std::span<const double> weights)
{
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (weights.empty() || !(sum > 0))
        throw InvalidArgument("apportion: weights must have a positive sum");
    std::vector<std::size_t> out(weights.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0)
            throw InvalidArgument("apportion: negative weight");
        double exact = static_cast<double>(total) * weights[i] / sum;
        // Guard against 29.999999 style representation error.
        double floored = std::floor(exact + 1e-9);
        out[i] = static_cast<std::size_t>(floored);
        assigned += out[i];
        remainders.emplace_back(exact - floored, i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
        [](const auto & x, const auto & y) { return x.first > y.first + 1e-12; });
    for (std::size_t k = 0; assigned < total; ++k, ++assigned)
        ++out[remainders[k % remainders.size()].second];
    return out;
}

} // namespace remlab
