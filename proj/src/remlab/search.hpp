#pragma once

#include "remlab/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace remlab {

using BigInt = boost::multiprecision::cpp_int;

BigInt to_bigint(unsigned __int128 x);

/// Largest pattern the copy search accepts.
inline constexpr std::size_t kMaxSearchPattern = 16;

/// Read-only adjacency rows, borrowed from a Graph or a ResidualGraph.
struct AdjacencyView {
    std::size_t n = 0;
    std::size_t wpr = 0;
    const std::uint64_t * data = nullptr;

    static AdjacencyView of(const Graph & g) noexcept
    {
        return {g.order(), g.words_per_row(), g.order() ? g.row(0).data() : nullptr};
    }
    std::span<const std::uint64_t> row(Vertex v) const noexcept { return {data + static_cast<std::size_t>(v) * wpr, wpr}; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return u < n && v < n && bits::test(row(u), v); }
    std::size_t degree(Vertex v) const noexcept { return bits::popcount(row(v)); }
};

/// A graph that only ever loses edges: the host minus a growing set of used edges.
class ResidualGraph {
  public:
    explicit ResidualGraph(const Graph & g);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }
    bool adjacent(Vertex u, Vertex v) const noexcept { return view().adjacent(u, v); }
    /// Throws InvalidArgument when the edge is not present.
    void remove_edge(Vertex u, Vertex v);
    AdjacencyView view() const noexcept { return {n_, wpr_, rows_.data()}; }
    Graph to_graph() const;

  private:
    std::size_t n_;
    std::size_t m_;
    std::size_t wpr_;
    std::vector<std::uint64_t> rows_;
};

/// Injective edge-preserving maps of a fixed pattern into host graphs, with
/// optional per-pattern-vertex domains.
///
/// Pattern vertices are visited in a connected greedy order (most already
/// placed neighbours, then higher degree, then lower id), with any vertices
/// listed in `first` placed before all others. Candidate images at each level
/// are bitset intersections; the last level of a count is a popcount.
class CopySearch {
  public:
    using Visitor = std::function<bool(std::span<const Vertex>)>;

    explicit CopySearch(const Graph & pattern, std::span<const Vertex> first = {});

    const Graph & pattern() const noexcept { return pattern_; }
    const std::vector<Vertex> & order() const noexcept { return order_; }

    /// Number of copies. `domains` is empty (no constraint) or has one set per
    /// pattern vertex over the host's vertex universe.
    BigInt count(AdjacencyView host, std::span<const VertexSet> domains, Budget & budget) const;

    /// Calls visit(map) for each copy in lexicographic order of the images
    /// along order(); map[i] is the image of pattern vertex i. Stops when visit
    /// returns false. Returns false iff stopped early.
    bool enumerate(AdjacencyView host, std::span<const VertexSet> domains, Budget & budget, const Visitor & visit) const;

    std::optional<std::vector<Vertex>> find_one(AdjacencyView host, std::span<const VertexSet> domains,
                                                Budget & budget) const;

  private:
    Graph pattern_;
    std::vector<Vertex> order_;
    /// back_[i]: positions j < i in order_ whose pattern vertex is adjacent to order_[i].
    std::vector<std::vector<std::size_t>> back_;
};

/// True when map is an injective edge-preserving map of pattern into host.
bool is_copy(const Graph & pattern, AdjacencyView host, std::span<const Vertex> map);
inline bool is_copy(const Graph & pattern, const Graph & host, std::span<const Vertex> map)
{
    return is_copy(pattern, AdjacencyView::of(host), map);
}

} // namespace remlab
