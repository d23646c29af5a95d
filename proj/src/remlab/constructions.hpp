#pragma once

#include "remlab/arith_sets.hpp"
#include "remlab/graph.hpp"
#include "remlab/packing.hpp"
#include "remlab/partition.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace remlab {

/// Inputs echoed back with every construction, plus the realised values
/// after rounding.
struct ConstructionParams {
    std::string kind;
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    /// Gadget starts per part (rs_gadget, lemma7).
    std::size_t m = 0;
    /// Gadget modulus, i.e. the size of each gadget part.
    std::size_t modulus = 0;
    double alpha = 0;
    double eps = 0;
    std::uint64_t seed = 0;
    /// Degree of the planted regular graphs, round(eps * n).
    std::size_t degree = 0;
    /// degree / n.
    double eps_realized = 0;
    /// Range bound and size of the solution-free set used by a gadget.
    std::uint64_t set_bound = 0;
    std::size_t set_size = 0;
};

struct ConstructionOutput {
    Graph graph;
    VertexPartition partition;
    std::optional<Packing> designed_packing;
    ConstructionParams params;
    /// The minimum degree the construction promises, and the rounding slack
    /// the audit allows below it.
    std::size_t declared_min_degree = 0;
    std::size_t degree_slack = 0;
};

/// Every failed audit: partition validity, the declared minimum degree
/// within slack, and designed packing validity. Empty means pass.
std::vector<std::string> audit_construction(const ConstructionOutput & c);

/// Part sizes of T(n, parts): the first n mod parts parts get one extra vertex.
std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t parts);
Graph turan_graph(std::size_t n, std::size_t parts);
ConstructionOutput turan_construction(std::size_t n, std::size_t parts);

/// (2k+1)-partite cycle gadget on parts V_1..V_{2k+1}, each a copy of Z_M
/// (M = modulus, default max(m, 2k max B + 1)). For each start x in [0, m) and
/// b in B the designated cycle is x, x+b, ..., x+2kb (mod M), vertex i in part
/// i. When B is solution-free for k these are the only (2k+1)-cycles, and they
/// are pairwise edge-disjoint.
ConstructionOutput rs_gadget(std::size_t k, std::size_t m, const SolutionFreeSet & B, std::size_t modulus = 0);

/// Gadget parts V_i of size M = round(alpha n / (2k+1)) plus U_1..U_{2k+1}
/// sharing the remaining vertices, with U_i complete to V_i and to U_{i+1}.
/// m defaults to ceil(M/2); B defaults to solution_free_set((M-1)/(2k), k).
ConstructionOutput lemma7_construction(std::size_t k, std::size_t n, double alpha, std::size_t m = 0,
                                       std::optional<SolutionFreeSet> B = std::nullopt);

/// T(n, r-1) plus a random round(eps n)-regular graph inside V_1.
ConstructionOutput thm9_no_critical_edge(std::size_t r, std::size_t n, double eps, std::uint64_t seed);

/// Parts V_0..V_r with |V_1| = |V_2| = |V_3| = floor(n/(3r-5)) and the rest
/// apportioned 1 : 3 : ... : 3 over V_0, V_4..V_r. Complete bipartite
/// (V_0,V_1), (V_0 ∪ V_1, V_4 ∪ ... ∪ V_r) and (V_i,V_j) for 2 <= i < j <= r;
/// round(eps n)-regular bipartite (V_1,V_2) and (V_1,V_3).
ConstructionOutput thm9_general(std::size_t r, std::size_t n, double eps, std::uint64_t seed);

} // namespace remlab
