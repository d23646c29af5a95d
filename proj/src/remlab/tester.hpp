#pragma once

#include "remlab/constructions.hpp"
#include "remlab/counting.hpp"
#include "remlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace remlab {

struct TesterReport {
    std::size_t q = 0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t rejects = 0;
    /// Trials whose homomorphism search ran out of budget; neither accept nor reject.
    std::size_t undecided = 0;
    /// rejects / trials.
    double reject_freq = 0;
    /// Fraction of trials in which the q draws were pairwise distinct.
    double distinct_fraction = 0;
    /// Per trial: delta(G[X]) / |X| for the sampled set X.
    std::vector<double> degree_stats;
};

/// Per trial: draw q vertices uniformly with repetition, take G[X] on the set
/// X of distinct draws, and reject when G[X] has no homomorphism to F. Trial t
/// uses the stream ("sample_test", t) of `seed`. Each trial's search gets its
/// own budget of `trial_budget` nodes (0: the default limit).
TesterReport sample_test(const Graph & g, const Graph & f, std::size_t q, std::size_t trials, std::uint64_t seed,
                         std::uint64_t trial_budget = 0);

/// Probability that q uniform draws with repetition from n items hit every
/// item of a fixed set of size s (inclusion-exclusion).
double probability_all_hit(std::size_t n, std::size_t s, std::size_t q);

/// Fraction of degree_stats entries below `threshold`.
double fraction_below(const std::vector<double> & values, double threshold);

struct FarCertificate {
    /// Edges that must be deleted before G maps to F ...
    std::size_t lower_bound = 0;
    /// ... and a deletion set size that suffices.
    std::size_t upper_bound = 0;
    bool exact = false;
    /// Edge-disjoint obstructions found, by cycle length (3, 5, ...), or the
    /// edge count when F has no edges.
    std::vector<std::pair<std::size_t, std::size_t>> obstructions;
    std::string family;
};

/// Lower bound on the edit distance from G to the property "maps to F" via
/// an edge-disjoint packing of obstructions. Supported when F has no edges
/// (obstructions: edges) or chi(F) = 2 (obstructions: odd cycles up to the
/// search limit); nullopt otherwise. The upper bound is the best of a local
/// search max-cut and, for n <= 20, the exact optimum.
std::optional<FarCertificate> certify_far(const Graph & g, const Graph & f, Budget & budget);

struct EstimatorReport {
    std::string instance;
    std::size_t n = 0;
    double gamma = 0;
    /// delta(G) / n.
    double gamma_realized = 0;
    /// The instance's own parameter: realised degree / n for the thm9
    /// families, alpha for lemma7.
    double eps = 0;
    std::size_t packing_size = 0;
    /// |P| / n^2 for the audited H-packing.
    double eps_realized = 0;
    BigInt copies = 0;
    /// copies / n^h.
    double copy_density = 0;
    /// "designed" or "greedy".
    std::string packing_source;
};

/// Exact copy density of H in each instance, with the instance's H-packing.
/// The designed packing is used when its pattern equals H, otherwise a greedy
/// one. Throws PreconditionFailed when an instance fails its construction
/// audit, delta(G) < gamma n, or the packing audit.
std::vector<EstimatorReport> estimate_delta(const Graph & h, double gamma,
                                            const std::vector<ConstructionOutput> & instances, Budget & budget);

enum class SweepFamily { lemma7, thm9, thm9_general };

const char * to_string(SweepFamily f) noexcept;
SweepFamily parse_sweep_family(const std::string & name);

/// One construction per sweep value: eps for the thm9 families, the gadget
/// fraction alpha for lemma7.
std::vector<ConstructionOutput> sweep_instances(SweepFamily family, std::size_t n, const std::vector<double> & values,
                                                std::size_t k, std::size_t r, std::uint64_t seed);

struct PowerFit {
    double exponent = 0;
    double log_coefficient = 0;
    /// Root mean square of the log-space residuals.
    double residual = 0;
    std::size_t points = 0;
};

/// Least squares fit of log y = log c + e log x. Needs two distinct positive x
/// and positive y.
PowerFit fit_power_law(const std::vector<double> & x, const std::vector<double> & y);

} // namespace remlab
