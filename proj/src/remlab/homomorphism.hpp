#pragma once

#include "remlab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace remlab {

/// Largest homomorphism target (one machine word of domain per variable).
inline constexpr std::size_t kMaxHomTarget = 64;
/// Largest graph minimal_images accepts.
inline constexpr std::size_t kMaxImagesOrder = 10;
/// Largest graph core_of accepts.
inline constexpr std::size_t kMaxCoreOrder = 12;

enum class HomStatus { found, none, budget_exhausted };

const char * to_string(HomStatus s) noexcept;

struct HomResult {
    HomStatus status = HomStatus::none;
    /// map[v] is the image of v; filled only when status == found.
    std::vector<Vertex> map;

    bool found() const noexcept { return status == HomStatus::found; }
};

/// Backtracking CSP with forward checking and smallest-domain-first variable
/// choice (ties to the lower id); values are tried in increasing order.
/// Connected components are solved independently. Exhausting the budget is
/// reported as budget_exhausted, never as none.
HomResult find_homomorphism(const Graph & h, const Graph & f, Budget & budget);
HomResult find_homomorphism(const Graph & h, const Graph & f);

bool is_homomorphism(const Graph & h, const Graph & f, std::span<const Vertex> map);

/// Smallest induced subgraph hom-equivalent to g (order <= kMaxCoreOrder).
/// Vertices are peeled greedily in increasing id order.
InducedSubgraph core_of(const Graph & g, Budget & budget);
InducedSubgraph core_of(const Graph & g);

struct CanonicalForm {
    /// The graph relabelled canonically; isomorphic inputs give equal graphs.
    Graph graph;
    /// labeling[i] = input vertex placed at canonical position i.
    std::vector<Vertex> labeling;
    /// Compact key: order, then the canonical upper-triangle bit string.
    std::string key;
};

/// Exhaustive canonical labelling (order <= 16): the lexicographically largest
/// adjacency string over labellings that list vertices by non-increasing degree.
CanonicalForm canonical_form(const Graph & g, Budget & budget);
CanonicalForm canonical_form(const Graph & g);

bool isomorphic(const Graph & a, const Graph & b);

struct ImageMember {
    Graph graph;
    /// A homomorphism from the input graph onto this member.
    std::vector<Vertex> witness;
};

struct MinimalImageFamily {
    std::vector<ImageMember> members;
    /// Number of independent-class partitions that were examined.
    std::size_t quotients = 0;
};

/// Inclusion-minimal graphs H' with H -> H', up to isomorphism, ordered by
/// (order, size, canonical key).
MinimalImageFamily minimal_images(const Graph & h, Budget & budget);
MinimalImageFamily minimal_images(const Graph & h);

struct FamilyWitness {
    std::size_t member = 0;
    /// Labelled copy of the member: map[i] is the image of member vertex i.
    std::vector<Vertex> map;
};

/// nullopt when g contains no subgraph copy of any member; otherwise the
/// first copy of the first member (in family order) that occurs.
std::optional<FamilyWitness> find_family_copy(const Graph & g, std::span<const Graph> family, Budget & budget);
bool is_family_free(const Graph & g, std::span<const Graph> family, Budget & budget);

} // namespace remlab
