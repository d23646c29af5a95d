#include "remlab/tester.hpp"
#include "remlab/generators.hpp"
#include "remlab/homomorphism.hpp"
#include "remlab/invariants.hpp"
#include "remlab/packing.hpp"
#include "remlab/random.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace remlab {

TesterReport sample_test(const Graph & g, const Graph & f, std::size_t q, std::size_t trials, std::uint64_t seed,
                         std::uint64_t trial_budget)
{
    if (q == 0)
        throw InvalidArgument("sample_test: q must be at least 1");
    if (trials == 0)
        throw InvalidArgument("sample_test: trials must be at least 1");
    if (g.order() == 0)
        throw InvalidArgument("sample_test: G has no vertices");
    if (f.order() > kMaxHomTarget)
        throw InvalidArgument("sample_test: F has more than " + std::to_string(kMaxHomTarget) + " vertices");
    const auto n = g.order();
    TesterReport out;
    out.q = q;
    out.trials = trials;
    out.seed = seed;
    std::size_t distinct = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = make_rng(seed, "sample_test", t);
        VertexSet x(n);
        for (std::size_t i = 0; i < q; ++i)
            x.set(static_cast<Vertex>(uniform_below(rng, n)));
        if (x.count() == q)
            ++distinct;
        auto sub = induced_subgraph(g, x);
        out.degree_stats.push_back(static_cast<double>(min_degree(sub.graph)) / static_cast<double>(x.count()));
        Budget budget = trial_budget ? Budget(trial_budget) : Budget();
        auto r = find_homomorphism(sub.graph, f, budget);
        if (r.status == HomStatus::budget_exhausted)
            ++out.undecided;
        else if (r.status == HomStatus::none)
            ++out.rejects;
    }
    out.reject_freq = static_cast<double>(out.rejects) / static_cast<double>(trials);
    out.distinct_fraction = static_cast<double>(distinct) / static_cast<double>(trials);
    return out;
}

double probability_all_hit(std::size_t n, std::size_t s, std::size_t q)
{
    if (s > n)
        return 0;
    double total = 0;
    double binom = 1;
    for (std::size_t j = 0; j <= s; ++j) {
        double miss = std::pow(static_cast<double>(n - j) / static_cast<double>(n), static_cast<double>(q));
        total += (j % 2 ? -1 : 1) * binom * miss;
        binom = binom * static_cast<double>(s - j) / static_cast<double>(j + 1);
    }
    return std::clamp(total, 0.0, 1.0);
}

double fraction_below(const std::vector<double> & values, double threshold)
{
    if (values.empty())
        return 0;
    auto below = std::count_if(values.begin(), values.end(), [&](double v) { return v < threshold; });
    return static_cast<double>(below) / static_cast<double>(values.size());
}

namespace {

/// Edges inside the sides of a 2-colouring.
std::size_t uncut(const Graph & g, const std::vector<bool> & side)
{
    std::size_t total = 0;
    for (const auto & e : g.edges())
        total += side[e.u] == side[e.v] ? 1 : 0;
    return total;
}

/// Fewest edges whose deletion leaves g bipartite: exact for small n, else
/// single-vertex-flip local search from a BFS colouring.
std::size_t bipartization_upper(const Graph & g)
{
    const auto n = g.order();
    if (n <= 20) {
        std::vector<std::uint32_t> adj(n, 0);
        for (const auto & e : g.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
        std::size_t best = g.size();
        const std::uint32_t limit = n ? (1u << (n - 1)) : 1;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            std::size_t same = 0;
            for (Vertex v = 0; v < n; ++v) {
                bool in = (mask >> v) & 1u;
                same += static_cast<std::size_t>(std::popcount(adj[v] & (in ? mask : ~mask)));
            }
            best = std::min(best, same / 2);
        }
        return best;
    }
    std::vector<bool> side(n, false);
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> queue{s};
        seen[s] = true;
        for (std::size_t i = 0; i < queue.size(); ++i)
            g.neighbours(queue[i]).for_each([&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = true;
                    side[w] = !side[queue[i]];
                    queue.push_back(w);
                }
            });
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (Vertex v = 0; v < n; ++v) {
            std::size_t same = 0;
            g.neighbours(v).for_each([&](Vertex w) { same += side[w] == side[v] ? 1 : 0; });
            if (2 * same > g.degree(v)) {
                side[v] = !side[v];
                improved = true;
            }
        }
    }
    return uncut(g, side);
}

} // namespace

std::optional<FarCertificate> certify_far(const Graph & g, const Graph & f, Budget & budget)
{
    if (f.order() == 0)
        throw InvalidArgument("certify_far: F has no vertices");
    FarCertificate out;
    if (f.size() == 0) {
        out.lower_bound = out.upper_bound = g.size();
        out.exact = true;
        out.family = "edges";
        out.obstructions.emplace_back(2, g.size());
        return out;
    }
    if (!is_bipartite(f))
        return std::nullopt;
    out.family = "odd cycles";
    ResidualGraph residual(g);
    for (std::size_t len = 3; len <= kMaxSearchPattern; len += 2) {
        auto p = greedy_packing_on(cycle_graph(len), residual, budget);
        out.obstructions.emplace_back(len, p.size());
        out.lower_bound += p.size();
    }
    out.upper_bound = bipartization_upper(g);
    out.exact = out.lower_bound == out.upper_bound;
    return out;
}

std::vector<EstimatorReport> estimate_delta(const Graph & h, double gamma,
                                            const std::vector<ConstructionOutput> & instances, Budget & budget)
{
    if (h.order() == 0 || h.order() > kMaxCountPattern)
        throw InvalidArgument("estimate_delta: H must have 1 to " + std::to_string(kMaxCountPattern) + " vertices");
    std::vector<EstimatorReport> out;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const auto & inst = instances[i];
        const auto & g = inst.graph;
        const auto n = g.order();
        EstimatorReport row;
        row.instance = inst.params.kind + "/" + std::to_string(i);
        row.n = n;
        row.gamma = gamma;
        if (auto problems = audit_construction(inst); !problems.empty())
            throw PreconditionFailed("estimate_delta: " + row.instance + ": " + problems.front());
        const auto delta = min_degree(g);
        row.gamma_realized = n ? static_cast<double>(delta) / static_cast<double>(n) : 0;
        if (static_cast<double>(delta) < gamma * static_cast<double>(n) - 1e-9)
            throw PreconditionFailed("estimate_delta: " + row.instance + ": delta(G) = " + std::to_string(delta) +
                                     " is below gamma n");
        Packing packing;
        if (inst.designed_packing && inst.designed_packing->pattern == h) {
            packing = *inst.designed_packing;
            row.packing_source = "designed";
        } else {
            packing = greedy_packing(h, g, budget);
            row.packing_source = "greedy";
        }
        if (auto problem = audit_packing(packing, g))
            throw PreconditionFailed("estimate_delta: " + row.instance + ": " + *problem);
        row.eps = inst.params.kind == "lemma7" ? inst.params.alpha : inst.params.eps_realized;
        row.packing_size = packing.size();
        row.eps_realized = n ? static_cast<double>(packing.size()) / (static_cast<double>(n) * static_cast<double>(n)) : 0;
        auto count = count_labeled_copies(h, g, budget);
        row.copies = count.value;
        row.copy_density = count.normalized;
        out.push_back(std::move(row));
    }
    return out;
}

const char * to_string(SweepFamily f) noexcept
{
    switch (f) {
    case SweepFamily::lemma7:
        return "lemma7";
    case SweepFamily::thm9:
        return "thm9";
    case SweepFamily::thm9_general:
        return "thm9-general";
    }
    return "?";
}

SweepFamily parse_sweep_family(const std::string & name)
{
    for (auto f : {SweepFamily::lemma7, SweepFamily::thm9, SweepFamily::thm9_general})
        if (name == to_string(f))
            return f;
    throw InvalidArgument("unknown sweep family '" + name + "' (expected lemma7, thm9 or thm9-general)");
}

std::vector<ConstructionOutput> sweep_instances(SweepFamily family, std::size_t n, const std::vector<double> & values,
                                                std::size_t k, std::size_t r, std::uint64_t seed)
{
    std::vector<ConstructionOutput> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        auto s = derive_seed(seed, "sweep_instances", i);
        switch (family) {
        case SweepFamily::lemma7:
            out.push_back(lemma7_construction(k, n, values[i]));
            break;
        case SweepFamily::thm9:
            out.push_back(thm9_no_critical_edge(r, n, values[i], s));
            break;
        case SweepFamily::thm9_general:
            out.push_back(thm9_general(r, n, values[i], s));
            break;
        }
    }
    return out;
}

PowerFit fit_power_law(const std::vector<double> & x, const std::vector<double> & y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidArgument("fit_power_law: need at least two paired points");
    const auto m = static_cast<double>(x.size());
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0 && y[i] > 0))
            throw InvalidArgument("fit_power_law: values must be positive");
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(y[i]));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i] / m;
        my += ly[i] / m;
    }
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx <= 0)
        throw InvalidArgument("fit_power_law: x values must not all be equal");
    PowerFit fit;
    fit.points = x.size();
    fit.exponent = sxy / sxx;
    fit.log_coefficient = my - fit.exponent * mx;
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        double r = ly[i] - (fit.log_coefficient + fit.exponent * lx[i]);
        ss += r * r;
    }
    fit.residual = std::sqrt(ss / m);
    return fit;
}

} // namespace remlab
