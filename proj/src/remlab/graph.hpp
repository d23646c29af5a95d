#pragma once

#include "remlab/bitset.hpp"
#include "remlab/common.hpp"

#include <compare>
#include <span>
#include <vector>

namespace remlab {

/// Undirected edge, normalised so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Immutable simple undirected graph with one packed bitset row per vertex.
/// Safe for concurrent reads.
class Graph {
  public:
    Graph() = default;

    /// Throws InvalidArgument on an out-of-range endpoint, a self-loop, or a
    /// duplicate edge (in either orientation).
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    std::size_t words_per_row() const noexcept { return wpr_; }

    std::span<const std::uint64_t> row(Vertex v) const noexcept
    {
        return {adjacency_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }
    bool adjacent(Vertex u, Vertex v) const noexcept { return u < n_ && v < n_ && bits::test(row(u), v); }
    std::size_t degree(Vertex v) const noexcept { return bits::popcount(row(v)); }
    VertexSet neighbours(Vertex v) const { return VertexSet::from_words(n_, row(v)); }
    std::vector<Vertex> neighbour_list(Vertex v) const { return neighbours(v).to_vector(); }

    /// All edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph & other) const noexcept
    {
        return n_ == other.n_ && m_ == other.m_ && adjacency_ == other.adjacency_;
    }

  private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> adjacency_;
};

/// Mutable staging area for generators.
class GraphBuilder {
  public:
    explicit GraphBuilder(std::size_t n);
    explicit GraphBuilder(const Graph & g);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    /// Strict: throws InvalidArgument on loops, duplicates and range errors.
    void add_edge(Vertex u, Vertex v);
    /// Returns false (and changes nothing) when the edge already exists.
    bool try_add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const noexcept;

    /// Adds every pair between a and b not already present.
    void connect_all(std::span<const Vertex> a, std::span<const Vertex> b);

    Graph build() const;

  private:
    void check(Vertex u, Vertex v) const;

    std::size_t n_;
    std::size_t m_ = 0;
    std::size_t wpr_;
    std::vector<std::uint64_t> adjacency_;
};

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph that became vertex i.
    std::vector<Vertex> to_parent;
};

/// Subgraph induced on the listed vertices; vertex i of the result is vertices[i].
InducedSubgraph induced_subgraph(const Graph & g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph & g, const VertexSet & vertices);

/// Minimum degree; 0 for the empty graph.
std::size_t min_degree(const Graph & g);
std::size_t max_degree(const Graph & g);

/// |N(u) ∩ N(v)|; u ≠ v required.
std::size_t codegree(const Graph & g, Vertex u, Vertex v);

/// G with the listed edges removed (edges not present are ignored).
Graph remove_edges(const Graph & g, std::span<const Edge> edges);

/// G with every edge incident to a vertex of `removed` deleted; vertex ids are kept.
Graph isolate_vertices(const Graph & g, const VertexSet & removed);

} // namespace remlab
