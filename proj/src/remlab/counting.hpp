#pragma once

#include "remlab/graph.hpp"
#include "remlab/search.hpp"

#include <span>
#include <string>

namespace remlab {

/// Largest pattern (or blow-up) order the counting operations accept.
inline constexpr std::size_t kMaxCountPattern = 8;

/// Exact number of labelled copies, plus value / n^h.
struct CopyCount {
    BigInt value;
    double normalized = 0.0;

    std::string decimal() const { return value.str(); }
};

CopyCount make_count(BigInt value, std::size_t n, std::size_t h);

/// Injective edge-preserving maps H -> G.
CopyCount count_labeled_copies(const Graph & h, const Graph & g, Budget & budget);

/// As above with the image of pattern vertex i restricted to parts[i]. Parts
/// may overlap.
CopyCount count_constrained_copies(const Graph & h, const Graph & g, std::span<const VertexSet> parts, Budget & budget);

/// Labelled copies of H[s_1..s_h] with every vertex of class i mapped into
/// parts[i] (empty parts = unconstrained). Normalised by n^(s_1+...+s_h).
CopyCount count_blowup_copies(const Graph & h, std::span<const std::size_t> s, const Graph & g,
                              std::span<const VertexSet> parts, Budget & budget);

/// Labelled copies with x -> a and y -> b (one orientation). xy must be an edge
/// of H and ab an edge of G.
CopyCount count_anchored_copies(const Graph & h, Vertex x, Vertex y, const Graph & g, Vertex a, Vertex b,
                                Budget & budget);

/// Labelled copies of K_r (r <= 8): increasing chains times r!.
CopyCount count_cliques(std::size_t r, const Graph & g, Budget & budget);

/// Labelled copies of C_length for odd length in [3, 9].
CopyCount count_odd_cycles(std::size_t length, const Graph & g, Budget & budget);

} // namespace remlab
