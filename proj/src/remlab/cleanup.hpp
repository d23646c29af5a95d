#pragma once

#include "remlab/counting.hpp"
#include "remlab/graph.hpp"
#include "remlab/invariants.hpp"
#include "remlab/packing.hpp"
#include "remlab/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace remlab {

/// One audited inequality. `applicable` is false when the hypotheses under
/// which it is promised do not hold on this instance; it is still evaluated.
struct ClaimCheck {
    std::string id;
    std::string statement;
    bool applicable = true;
    bool holds = false;
    double lhs = 0;
    double rhs = 0;
};

/// First applicable check that fails, if any.
const ClaimCheck * first_failure(const std::vector<ClaimCheck> & checks);

struct CleanupResult {
    std::size_t n = 0;
    std::size_t k = 0;
    double alpha = 0;
    /// packings[l-1] packs C_{2l+1}, each maximal in G minus earlier edges.
    std::vector<Packing> packings;
    /// Union of the packed cycles' edges, sorted.
    std::vector<Edge> ec;
    /// Vertices incident with at least s_threshold = ceil(alpha n / 10) edges of E_c.
    VertexSet s;
    std::size_t s_threshold = 0;
    /// G' on the original vertex ids: E_c removed and S isolated.
    Graph g_prime;
    /// V(G') = V(G) minus S.
    VertexSet kept;
    std::size_t min_degree_g = 0;
    /// Minimum over kept vertices of their degree in G'.
    std::size_t min_degree_g_prime = 0;
    OddGirth odd_girth_g_prime;
    /// max_l |packings[l-1]| / n^2, the measured stand-in for eps^c.
    double eps_c = 0;
    /// delta(G) >= (1/4 + alpha) n.
    bool degree_hypothesis = false;
    /// eps_c < alpha^2 / (200 k (k+2)): the small-packing regime in which the
    /// bounds on |S| and delta(G') are promised.
    bool small_packings = false;
    std::vector<ClaimCheck> checks;
};

/// Greedy maximal packings of C_3, C_5, ..., C_{2k+1} in that order, each on
/// G minus the edges used before it; then E_c, S and G'.
CleanupResult cleanup_short_cycles(const Graph & g, std::size_t k, double alpha, Budget & budget,
                                   const GreedyOptions & options = {});

enum class RefinedKind { bipartite, c7 };

const char * to_string(RefinedKind k) noexcept;

struct RefinedPartition {
    RefinedKind kind = RefinedKind::bipartite;
    /// bipartite: L'', R'', S''. c7: V''1..V''7, S''. Allowed pairs describe G''.
    VertexPartition parts;
    /// part[v] indexes parts; the last part is S''.
    std::vector<Vertex> part;
    /// G'': the edges of G between allowed parts.
    Graph g_dd;
    VertexSet s_dd;
    /// Edges of G outside G'' with both ends in V(G''), and touching S''.
    std::size_t type_one = 0;
    std::size_t type_two = 0;
    std::vector<ClaimCheck> checks;
};

/// Requires G' bipartite. S vertices with at most alpha n / 5 neighbours in L'
/// join L'' (checked first), else with at most alpha n / 5 in R' join R''.
RefinedPartition refine_bipartite(const Graph & g, const CleanupResult & clean);

/// Requires G' non-bipartite; V'_1..V'_7 come from a homomorphism G' -> C_7.
/// S_i: S vertices with at most 2 alpha n / 5 neighbours in V(G') minus
/// (V'_{i-1} ∪ V'_{i+1}), lowest i first. Throws PreconditionFailed when no
/// homomorphism exists and BudgetExceeded when the search runs out.
RefinedPartition refine_c7(const Graph & g, const CleanupResult & clean, Budget & budget);

struct PipelineOptions {
    double alpha = 0.1;
    GreedyOptions greedy;
    /// Anchor edges processed at most; the rest are reported as skipped.
    std::size_t max_anchors = 256;
    /// Copies per anchor kept as audited samples.
    std::size_t samples_per_anchor = 2;
};

struct PipelineResult {
    /// Distinct labelled copies found: copies with different anchors differ
    /// on xy, and each anchor is counted once.
    CopyCount copies;
    Edge critical{};
    /// triangle, bipartite, c7 or dense-cycles.
    std::string branch;
    std::vector<std::string> trace;
    /// Hypotheses of the argument that fail on this input.
    std::vector<std::string> violations;
    std::size_t anchors = 0;
    std::size_t triangle_recipe_anchors = 0;
    std::size_t cycle_recipe_anchors = 0;
    std::size_t skipped_anchors = 0;
    /// Copies enumerated along the way, each checked against the original G.
    std::vector<std::vector<Vertex>> samples;
    std::optional<CleanupResult> cleanup;
    std::optional<RefinedPartition> refined;
};

/// Runs the constructive argument as an algorithm and counts what it finds.
/// H must be 3-chromatic with a critical edge and at most kMaxCountPattern
/// vertices (PreconditionFailed otherwise); degree hypotheses on G are
/// reported in `violations`.
PipelineResult find_h_copies_pipeline(const Graph & h, const Graph & g, Budget & budget,
                                      const PipelineOptions & options = {});

} // namespace remlab
