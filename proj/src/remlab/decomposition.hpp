#pragma once

#include "remlab/graph.hpp"
#include "remlab/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace remlab {

enum class Chi3Mode { triangle_case, cycle_case };

const char * to_string(Chi3Mode m) noexcept;

/// Partition of a 3-chromatic H around a critical edge xy with A_1 = {x} and
/// A_2 = {y}.
///  triangle_case: parts A1, A2, A3, B; edges lie inside the triangle A1 A2 A3
///  or between A3 and B.
///  cycle_case: parts A1..A{2k+1}; edges join cyclically consecutive parts, so
///  part index is a homomorphism to C_{2k+1}.
struct Chi3Decomposition {
    Chi3Mode mode = Chi3Mode::triangle_case;
    Vertex x = 0;
    Vertex y = 0;
    /// 1 in triangle_case.
    std::size_t k = 1;
    VertexPartition parts;
    /// part[v]: index of v's part (0-based: A_1 is 0; B is 3 in triangle_case).
    std::vector<Vertex> part;
};

/// First item: bipartition (L, R) of H - xy with x, y in L; A3 = R, B = L minus {x, y}.
/// Throws PreconditionFailed unless chi(H) = 3 and xy is a critical edge.
Chi3Decomposition chi3_triangle_case(const Graph & h, Vertex x, Vertex y);

/// Second item: BFS layers X_i, Y_i (distance i-1 from x, y in H - xy) for
/// i <= k, leftovers L', R', assembled as X_1, Y_1..Y_{k-1}, Y_k ∪ R', L',
/// X_k..X_2 for even k (L' and R' swapped for odd k). k = 0 means
/// (odd girth - 1) / 2. Requires k >= 2 and odd girth >= 2k+1. The lemma's
/// disjointness and no-edge claims are checked; a failure throws InternalError.
Chi3Decomposition chi3_cycle_case(const Graph & h, Vertex x, Vertex y, std::size_t k = 0);

Chi3Decomposition chi3_decompose(const Graph & h, Vertex x, Vertex y, Chi3Mode mode, std::size_t k = 0);

/// Full edge scan against the mode's containment rule, plus A_1 = {x}, A_2 = {y}.
std::optional<std::string> audit_chi3(const Graph & h, const Chi3Decomposition & d);

} // namespace remlab
