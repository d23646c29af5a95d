#include "remlab/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace remlab {

namespace {

std::string edge_text(Vertex u, Vertex v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

void check_order(std::size_t n)
{
    if (n > kMaxVertices)
        throw InvalidArgument("graph order " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxVertices));
}

} // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder builder(n);
    for (const auto & e : edges)
        builder.add_edge(e.u, e.v);
    *this = builder.build();
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        bits::for_each(row(u), [&](Vertex v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), wpr_(bits::words_for(n))
{
    check_order(n);
    adjacency_.assign(n_ * wpr_, 0);
}

GraphBuilder::GraphBuilder(const Graph & g) : n_(g.n_), m_(g.m_), wpr_(g.wpr_), adjacency_(g.adjacency_) {}

void GraphBuilder::check(Vertex u, Vertex v) const
{
    if (u >= n_ || v >= n_)
        throw InvalidArgument("edge " + edge_text(u, v) + " has an endpoint outside [0, " + std::to_string(n_) + ")");
    if (u == v)
        throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const noexcept
{
    if (u >= n_ || v >= n_)
        return false;
    return (adjacency_[u * wpr_ + (v >> 6)] >> (v & 63)) & 1U;
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check(u, v);
    if (has_edge(u, v))
        throw InvalidArgument("duplicate edge " + edge_text(std::min(u, v), std::max(u, v)));
    try_add_edge(u, v);
}

bool GraphBuilder::try_add_edge(Vertex u, Vertex v)
{
    check(u, v);
    if (has_edge(u, v))
        return false;
    adjacency_[u * wpr_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adjacency_[v * wpr_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
    return true;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    if (!has_edge(u, v))
        return;
    adjacency_[u * wpr_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    adjacency_[v * wpr_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
}

void GraphBuilder::connect_all(std::span<const Vertex> a, std::span<const Vertex> b)
{
    for (auto u : a)
        for (auto v : b)
            if (u != v)
                try_add_edge(u, v);
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.n_ = n_;
    g.m_ = m_;
    g.wpr_ = wpr_;
    g.adjacency_ = adjacency_;
    return g;
}

InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices)
{
    std::vector<std::uint32_t> position(g.order(), std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto v = vertices[i];
        if (v >= g.order())
            throw InvalidArgument("vertex " + std::to_string(v) + " is outside the graph");
        if (position[v] != std::numeric_limits<std::uint32_t>::max())
            throw InvalidArgument("vertex " + std::to_string(v) + " listed twice");
        position[v] = static_cast<std::uint32_t>(i);
    }
    GraphBuilder builder(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        bits::for_each(g.row(vertices[i]), [&](Vertex w) {
            auto j = position[w];
            if (j != std::numeric_limits<std::uint32_t>::max() && i < j)
                builder.add_edge(static_cast<Vertex>(i), j);
        });
    return {builder.build(), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & vertices)
{
    auto list = vertices.to_vector();
    return induced_subgraph(g, list);
}

std::size_t min_degree(const Graph & g)
{
    if (g.order() == 0)
        return 0;
    std::size_t best = g.order();
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

std::size_t max_degree(const Graph & g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::size_t codegree(const Graph & g, Vertex u, Vertex v)
{
    if (u >= g.order() || v >= g.order())
        throw InvalidArgument("codegree: vertex out of range");
    if (u == v)
        throw InvalidArgument("codegree: vertices must be distinct");
    return bits::popcount_and(g.row(u), g.row(v));
}

Graph remove_edges(const Graph & g, std::span<const Edge> edges)
{
    GraphBuilder builder(g);
    for (const auto & e : edges)
        builder.remove_edge(e.u, e.v);
    return builder.build();
}

Graph isolate_vertices(const Graph & g, const VertexSet & removed)
{
    GraphBuilder builder(g);
    removed.for_each([&](Vertex v) {
        for (auto w : g.neighbour_list(v))
            builder.remove_edge(v, w);
    });
    return builder.build();
}

} // namespace remlab
