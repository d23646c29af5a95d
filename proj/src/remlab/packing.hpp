#pragma once

#include "remlab/graph.hpp"
#include "remlab/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace remlab {

/// Edge-disjoint labelled copies of one pattern; copies[c][i] is the image of
/// pattern vertex i in copy c.
struct Packing {
    Graph pattern;
    std::vector<std::vector<Vertex>> copies;

    std::size_t size() const noexcept { return copies.size(); }
};

/// Union of the edges used by the copies, sorted. Shared edges appear once.
std::vector<Edge> used_edges(const Packing & p);

/// Description of the first problem found, or nullopt when every copy is a
/// valid copy in g and the copies are pairwise edge-disjoint.
std::optional<std::string> audit_packing(const Packing & p, const Graph & g);

struct GreedyOptions {
    /// Shuffle the root order with `seed`; otherwise roots go 0..n-1.
    bool shuffle = false;
    std::uint64_t seed = 0;
};

/// Maximal edge-disjoint packing: for each root in turn, repeatedly take the
/// lexicographically first copy whose leading pattern vertex maps to the root
/// and whose edges are all unused. When it returns, no copy of the pattern
/// survives in g minus the used edges.
Packing greedy_packing(const Graph & pattern, const Graph & g, Budget & budget, const GreedyOptions & options = {});

/// Greedy packing continued on a residual host (edges already used elsewhere
/// are absent from `residual`); the copies' edges are removed from it.
Packing greedy_packing_on(const Graph & pattern, ResidualGraph & residual, Budget & budget,
                          const GreedyOptions & options = {});

struct CleanReport {
    Packing surviving;
    /// Vertices lying in at least one (hence at least t) surviving copies.
    VertexSet core;
    std::size_t rounds = 0;
    std::size_t threshold = 1;
};

/// Repeatedly deletes every copy through the lowest-id vertex that lies in
/// between 1 and t-1 copies. The graph is untouched.
CleanReport clean_packing(const Graph & g, const Packing & p, std::size_t t);

/// Number of copies through each vertex.
std::vector<std::size_t> copies_per_vertex(const Packing & p, std::size_t n);

struct BoostOptions {
    /// Independent random partitions tried per root; the best is kept.
    std::size_t draws = 8;
    /// Stop after this many distinct cycles (0 = unlimited).
    std::size_t max_cycles = 100000;
};

struct BoostReport {
    std::size_t ell = 0;
    std::size_t k = 0;
    std::size_t input_copies = 0;
    std::size_t threshold = 0;
    std::size_t cleaned_copies = 0;
    std::size_t core_size = 0;
    std::size_t roots = 0;
    /// Roots whose best partition produced at least one good cycle.
    std::size_t roots_with_good = 0;
    std::size_t good_cycles = 0;
    /// Distinct cycles up to rotation and reflection.
    std::size_t distinct_cycles = 0;
    bool truncated = false;
};

struct BoostResult {
    /// Each cycle starts at its root v0; consecutive entries (cyclically) are adjacent.
    std::vector<std::vector<Vertex>> cycles;
    BoostReport report;
};

/// Turns a packing of C_{2l+1} into copies of C_{2k+1} (1 <= l < k) following
/// the constructive argument: clean, split V minus v0 into l+1 random layers,
/// keep good cycles, clean again, then grow a path inside the last layer and
/// close it through the layers into the neighbourhood of v0.
BoostResult boost_cycles(const Graph & g, const Packing & p, std::size_t k, std::uint64_t seed, Budget & budget,
                         const BoostOptions & options = {});

/// Rotates a cycle to start at its minimum and orients it towards the smaller
/// neighbour.
std::vector<Vertex> normalise_cycle(std::vector<Vertex> cycle);

} // namespace remlab
