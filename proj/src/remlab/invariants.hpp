#pragma once

#include "remlab/graph.hpp"

#include <optional>
#include <vector>

namespace remlab {

/// Largest order accepted by the exact colouring search.
inline constexpr std::size_t kMaxColouringOrder = 64;

/// Exact chromatic number. Graphs with at most 2 colours are answered for any
/// order; otherwise the order must not exceed kMaxColouringOrder.
std::size_t chromatic_number(const Graph & g, Budget & budget);
std::size_t chromatic_number(const Graph & g);

/// A proper colouring with colours 0..k-1, or nullopt when none exists.
std::optional<std::vector<std::size_t>> find_colouring(const Graph & g, std::size_t k, Budget & budget);

struct OddGirth {
    /// Length of a shortest odd cycle; nullopt means infinite (bipartite).
    std::optional<std::size_t> value;
    /// A shortest odd cycle in cyclic order, empty when infinite.
    std::vector<Vertex> witness;

    bool infinite() const noexcept { return !value.has_value(); }
};

/// BFS layer parity from every vertex. The witness comes from the smallest
/// source and then the lexicographically first edge closing a shortest cycle.
OddGirth odd_girth(const Graph & g);

struct CriticalEdgeSet {
    std::size_t chi = 0;
    std::vector<Edge> edges;
};

CriticalEdgeSet critical_edges(const Graph & h, Budget & budget);
CriticalEdgeSet critical_edges(const Graph & h);

struct Bipartition {
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};

/// BFS 2-colouring; the lowest vertex of each component goes to the left.
std::optional<Bipartition> is_bipartite(const Graph & g);

struct AesReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t min_degree = 0;
    std::optional<std::size_t> odd_girth;
    /// δ(G) > 2n/(2k+1), evaluated in integers.
    bool degree_condition = false;
    /// oddgirth(G) >= 2k+1.
    bool odd_girth_condition = false;
    bool bipartite = false;
    bool hypotheses_hold() const noexcept { return degree_condition && odd_girth_condition; }
    /// Both hypotheses hold yet G is not bipartite. Must never happen.
    bool counterexample() const noexcept { return hypotheses_hold() && !bipartite; }
};

/// Requires k >= 2; for k = 1 the implication is false (K_3).
AesReport check_aes_hypothesis(const Graph & g, std::size_t k);

} // namespace remlab
