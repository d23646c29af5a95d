#pragma once

#include "remlab/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace remlab {

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// C_n on 0..n-1 in cyclic order; n >= 3.
Graph cycle_graph(std::size_t n);
/// Path with n vertices.
Graph path_graph(std::size_t n);
/// K_{a,b} with sides [0,a) and [a,a+b).
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Complete multipartite graph, parts laid out consecutively.
Graph complete_multipartite(std::span<const std::size_t> sizes);
/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
Graph petersen_graph();
/// Vertex-disjoint union; b's vertices are shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

struct Blowup {
    Graph graph;
    /// class_of[v] = vertex of the base graph whose class contains v.
    std::vector<Vertex> class_of;
};

/// H[s_1,...,s_h]: vertex i replaced by an independent set of size s_i (laid
/// out consecutively), edges by complete bipartite graphs. All s_i > 0.
Blowup blowup(const Graph & h, std::span<const std::size_t> multiplicities);

/// Bipartite graph with sides [0,a) and [a,a+b), every vertex of degree d.
/// Requires a == b and d <= a. Deterministic for a fixed seed.
Graph random_regular_bipartite(std::size_t a, std::size_t b, std::size_t d, std::uint64_t seed);

/// d-regular simple graph on m vertices; requires d < m (or d == 0) and d*m even.
Graph random_regular(std::size_t m, std::size_t d, std::uint64_t seed);

/// Largest-remainder apportionment of `total` into parts proportional to
/// `weights`; ties go to the lower index.
std::vector<std::size_t> apportion(std::size_t total, std::span<const double> weights);

} // namespace remlab
