#include "remlab/cleanup.hpp"
#include "remlab/decomposition.hpp"
#include "remlab/generators.hpp"
#include "remlab/homomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace remlab {

const ClaimCheck * first_failure(const std::vector<ClaimCheck> & checks)
{
    for (const auto & c : checks)
        if (c.applicable && !c.holds)
            return &c;
    return nullptr;
}

const char * to_string(RefinedKind k) noexcept { return k == RefinedKind::bipartite ? "bipartite" : "c7"; }

namespace {

double dn(std::size_t x) { return static_cast<double>(x); }

ClaimCheck check(std::string id, std::string statement, bool applicable, bool holds, double lhs, double rhs)
{
    return ClaimCheck{std::move(id), std::move(statement), applicable, holds, lhs, rhs};
}

std::size_t min_degree_on(const Graph & g, const VertexSet & vertices)
{
    std::size_t best = std::numeric_limits<std::size_t>::max();
    vertices.for_each([&](Vertex v) { best = std::min(best, g.degree(v)); });
    return vertices.empty() ? 0 : best;
}

std::size_t count_in(const Graph & g, Vertex v, const VertexSet & s)
{
    return bits::popcount_and(g.row(v), s.words());
}

/// Edges of g whose endpoints lie in parts that `allowed(p, q)` accepts.
template <class Allowed>
Graph keep_edges(const Graph & g, const std::vector<Vertex> & part, Allowed allowed)
{
    GraphBuilder b(g.order());
    for (const auto & e : g.edges())
        if (allowed(part[e.u], part[e.v]))
            b.add_edge(e.u, e.v);
    return b.build();
}

bool contains_edges(const Graph & big, const Graph & small)
{
    for (const auto & e : small.edges())
        if (!big.adjacent(e.u, e.v))
            return false;
    return true;
}

struct GPrimeView {
    InducedSubgraph sub;
    std::vector<VertexSet> lifted(const std::vector<std::vector<Vertex>> & local, std::size_t n) const
    {
        std::vector<VertexSet> out;
        for (const auto & list : local) {
            VertexSet s(n);
            for (auto v : list)
                s.set(sub.to_parent[v]);
            out.push_back(std::move(s));
        }
        return out;
    }
};

void classify(const Graph & g, RefinedPartition & r)
{
    for (const auto & e : g.edges()) {
        if (r.g_dd.adjacent(e.u, e.v))
            continue;
        if (r.s_dd.test(e.u) || r.s_dd.test(e.v))
            ++r.type_two;
        else
            ++r.type_one;
    }
}

} // namespace

CleanupResult cleanup_short_cycles(const Graph & g, std::size_t k, double alpha, Budget & budget,
                                   const GreedyOptions & options)
{
    if (k == 0 || 2 * k + 1 > kMaxSearchPattern)
        throw InvalidArgument("cleanup_short_cycles: k must lie in [1, " + std::to_string((kMaxSearchPattern - 1) / 2) +
                              "]");
    if (!(alpha > 0 && alpha < 1))
        throw InvalidArgument("cleanup_short_cycles: alpha must lie in (0, 1)");
    const auto n = g.order();
    CleanupResult out;
    out.n = n;
    out.k = k;
    out.alpha = alpha;

    ResidualGraph residual(g);
    std::size_t weighted = 0;
    std::size_t largest = 0;
    for (std::size_t l = 1; l <= k; ++l) {
        out.packings.push_back(greedy_packing_on(cycle_graph(2 * l + 1), residual, budget, options));
        weighted += (2 * l + 1) * out.packings.back().size();
        largest = std::max(largest, out.packings.back().size());
        for (const auto & e : used_edges(out.packings.back()))
            out.ec.push_back(e);
    }
    std::sort(out.ec.begin(), out.ec.end());

    std::vector<std::size_t> incidence(n, 0);
    for (const auto & e : out.ec) {
        ++incidence[e.u];
        ++incidence[e.v];
    }
    const double an = alpha * dn(n);
    out.s_threshold = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(an / 10 - 1e-9)));
    out.s = VertexSet(n);
    for (Vertex v = 0; v < n; ++v)
        if (incidence[v] >= out.s_threshold)
            out.s.set(v);
    out.kept = VertexSet::full(n) - out.s;
    out.g_prime = isolate_vertices(remove_edges(g, out.ec), out.s);
    out.min_degree_g = min_degree(g);
    out.min_degree_g_prime = min_degree_on(out.g_prime, out.kept);
    out.odd_girth_g_prime = odd_girth(out.g_prime);
    out.eps_c = n ? dn(largest) / (dn(n) * dn(n)) : 0;
    out.degree_hypothesis = dn(out.min_degree_g) >= (0.25 + alpha) * dn(n);
    out.small_packings = out.eps_c < alpha * alpha / (200.0 * dn(k) * dn(k + 2));

    const auto og = out.odd_girth_g_prime.value;
    const double bound = dn(k) * dn(k + 2) * out.eps_c * dn(n) * dn(n);
    const bool promised = out.small_packings;
    auto & c = out.checks;
    c.push_back(check("cleanup.odd_girth", "odd girth of G' exceeds 2k+1", true, !og || *og > 2 * k + 1,
                      og ? dn(*og) : std::numeric_limits<double>::infinity(), dn(2 * k + 1)));
    c.push_back(check("cleanup.ec_exact", "|E_c| equals the sum of (2l+1)|C_l|", true, out.ec.size() == weighted,
                      dn(out.ec.size()), dn(weighted)));
    c.push_back(check("cleanup.ec_bound", "|E_c| <= k(k+2) eps_c n^2", true, dn(out.ec.size()) <= bound + 1e-9,
                      dn(out.ec.size()), bound));
    c.push_back(check("cleanup.s_bound", "|S| < alpha n / 10", promised, dn(out.s.count()) < an / 10, dn(out.s.count()),
                      an / 10));
    c.push_back(check("cleanup.order", "|V(G')| > (1 - alpha/10) n", promised,
                      dn(out.kept.count()) > (1 - alpha / 10) * dn(n), dn(out.kept.count()), (1 - alpha / 10) * dn(n)));
    c.push_back(check("cleanup.degree", "delta(G') > (1/4 + 4 alpha/5) n", promised && out.degree_hypothesis,
                      dn(out.min_degree_g_prime) > (0.25 + 0.8 * alpha) * dn(n), dn(out.min_degree_g_prime),
                      (0.25 + 0.8 * alpha) * dn(n)));
    return out;
}

RefinedPartition refine_bipartite(const Graph & g, const CleanupResult & clean)
{
    const auto n = g.order();
    GPrimeView view{induced_subgraph(clean.g_prime, clean.kept)};
    auto sides = is_bipartite(view.sub.graph);
    if (!sides)
        throw PreconditionFailed("refine_bipartite: G' is not bipartite");
    auto lifted = view.lifted({sides->left, sides->right}, n);
    const auto & lp = lifted[0];
    const auto & rp = lifted[1];
    const double limit = clean.alpha * dn(n) / 5;

    RefinedPartition r;
    r.kind = RefinedKind::bipartite;
    r.part.assign(n, 2);
    lp.for_each([&](Vertex v) { r.part[v] = 0; });
    rp.for_each([&](Vertex v) { r.part[v] = 1; });
    clean.s.for_each([&](Vertex v) {
        if (dn(count_in(g, v, lp)) <= limit)
            r.part[v] = 0;
        else if (dn(count_in(g, v, rp)) <= limit)
            r.part[v] = 1;
    });
    r.parts = VertexPartition(n);
    for (const char * name : {"L''", "R''", "S''"})
        r.parts.add_part(name);
    r.parts.allow(0, 1);
    r.s_dd = VertexSet(n);
    for (Vertex v = 0; v < n; ++v) {
        r.parts.assign(v, r.part[v]);
        if (r.part[v] == 2)
            r.s_dd.set(v);
    }
    r.g_dd = keep_edges(g, r.part, [](Vertex a, Vertex b) { return a + b == 1; });
    classify(g, r);

    const bool promised = clean.small_packings && clean.degree_hypothesis;
    auto inside = VertexSet::full(n) - r.s_dd;
    auto delta = min_degree_on(r.g_dd, inside);
    const double want = (0.25 + clean.alpha / 2) * dn(n);
    r.checks.push_back(check("refine.contains_g_prime", "G' is a subgraph of G''", true,
                             contains_edges(r.g_dd, clean.g_prime), 0, 0));
    r.checks.push_back(check("refine.edge_types", "every edge of G outside G'' is of type I or II", true,
                             r.type_one + r.type_two + r.g_dd.size() == g.size(), dn(r.type_one + r.type_two),
                             dn(g.size() - r.g_dd.size())));
    r.checks.push_back(check("refine.bipartite_degree", "delta(G'') >= (1/4 + alpha/2) n", promised, dn(delta) >= want,
                             dn(delta), want));
    return r;
}

RefinedPartition refine_c7(const Graph & g, const CleanupResult & clean, Budget & budget)
{
    const auto n = g.order();
    GPrimeView view{induced_subgraph(clean.g_prime, clean.kept)};
    if (is_bipartite(view.sub.graph))
        throw PreconditionFailed("refine_c7: G' is bipartite");
    auto hom = find_homomorphism(view.sub.graph, cycle_graph(7), budget);
    if (hom.status == HomStatus::budget_exhausted)
        throw BudgetExceeded("refine_c7: homomorphism search to C7 ran out of budget");
    if (!hom.found())
        throw PreconditionFailed("refine_c7: G' has no homomorphism to C7");
    std::vector<std::vector<Vertex>> local(7);
    for (Vertex v = 0; v < hom.map.size(); ++v)
        local[hom.map[v]].push_back(v);
    auto vp = view.lifted(local, n);

    RefinedPartition r;
    r.kind = RefinedKind::c7;
    r.part.assign(n, 7);
    for (Vertex i = 0; i < 7; ++i)
        vp[i].for_each([&](Vertex v) { r.part[v] = i; });
    const double limit = 2 * clean.alpha * dn(n) / 5;
    clean.s.for_each([&](Vertex v) {
        for (Vertex i = 0; i < 7; ++i) {
            auto far = clean.kept - vp[(i + 6) % 7] - vp[(i + 1) % 7];
            if (dn(count_in(g, v, far)) <= limit) {
                r.part[v] = i;
                return;
            }
        }
    });
    r.parts = VertexPartition(n);
    for (int i = 1; i <= 7; ++i)
        r.parts.add_part("V''" + std::to_string(i));
    r.parts.add_part("S''");
    for (VertexPartition::PartId i = 0; i < 7; ++i)
        r.parts.allow(i, (i + 1) % 7);
    r.s_dd = VertexSet(n);
    std::vector<VertexSet> vdd(7, VertexSet(n));
    for (Vertex v = 0; v < n; ++v) {
        r.parts.assign(v, r.part[v]);
        (r.part[v] == 7 ? r.s_dd : vdd[r.part[v]]).set(v);
    }
    r.g_dd = keep_edges(g, r.part, [](Vertex a, Vertex b) {
        return a < 7 && b < 7 && ((a + 1) % 7 == b || (b + 1) % 7 == a);
    });
    classify(g, r);

    const bool promised = clean.small_packings && clean.degree_hypothesis;
    const double an = clean.alpha * dn(n);
    bool nonempty = std::all_of(vp.begin(), vp.end(), [](const VertexSet & s) { return !s.empty(); });
    auto inside = VertexSet::full(n) - r.s_dd;
    auto delta = min_degree_on(r.g_dd, inside);

    // (ii): same part, or two apart.
    std::size_t min_codeg = std::numeric_limits<std::size_t>::max();
    for (Vertex i = 0; i < 7; ++i) {
        auto same = vdd[i].to_vector();
        auto skip = vdd[(i + 2) % 7].to_vector();
        for (std::size_t a = 0; a < same.size(); ++a) {
            for (std::size_t b = a + 1; b < same.size(); ++b)
                min_codeg = std::min(min_codeg, codegree(r.g_dd, same[a], same[b]));
            for (auto w : skip)
                min_codeg = std::min(min_codeg, codegree(r.g_dd, same[a], w));
        }
    }
    // (iii): neighbours on both sides.
    std::size_t min_side = std::numeric_limits<std::size_t>::max();
    for (Vertex i = 0; i < 7; ++i)
        vdd[i].for_each([&](Vertex v) {
            min_side = std::min({min_side, count_in(r.g_dd, v, vdd[(i + 6) % 7]), count_in(r.g_dd, v, vdd[(i + 1) % 7])});
        });
    // (iv): every S'' vertex sees two parts at distance 1 or 3.
    std::size_t lonely = 0;
    r.s_dd.for_each([&](Vertex a) {
        bool found = false;
        for (Vertex i = 0; i < 7 && !found; ++i)
            for (Vertex step : {1u, 3u}) {
                auto j = (i + step) % 7;
                if (dn(count_in(g, a, vdd[i])) > 2 * an / 25 && dn(count_in(g, a, vdd[j])) > 2 * an / 25)
                    found = true;
            }
        lonely += found ? 0 : 1;
    });
    auto finite = [](std::size_t x) {
        return x == std::numeric_limits<std::size_t>::max() ? std::numeric_limits<double>::infinity() : dn(x);
    };

    r.checks.push_back(check("refine.contains_g_prime", "G' is a subgraph of G''", true,
                             contains_edges(r.g_dd, clean.g_prime), 0, 0));
    r.checks.push_back(check("refine.edge_types", "every edge of G outside G'' is of type I or II", true,
                             r.type_one + r.type_two + r.g_dd.size() == g.size(), dn(r.type_one + r.type_two),
                             dn(g.size() - r.g_dd.size())));
    r.checks.push_back(check("refine.c7_nonempty", "every V'_i is non-empty", true, nonempty, 0, 0));
    r.checks.push_back(check("refine.c7_degree", "delta(G'') >= (1/4 + alpha/2) n", promised,
                             dn(delta) >= (0.25 + clean.alpha / 2) * dn(n), dn(delta),
                             (0.25 + clean.alpha / 2) * dn(n)));
    r.checks.push_back(check("refine.c7_codegree", "deg_G''(u,v) >= alpha n within a part and two parts apart", promised,
                             finite(min_codeg) >= an, finite(min_codeg), an));
    r.checks.push_back(check("refine.c7_two_sided", "every vertex has alpha n neighbours in both adjacent parts", promised,
                             finite(min_side) >= an, finite(min_side), an));
    r.checks.push_back(check("refine.c7_exceptional", "every S'' vertex sees two parts at distance 1 or 3", promised, lonely == 0,
                             dn(lonely), 0));
    return r;
}

namespace {

/// Which recipe counts the copies through one anchor.
enum class Recipe { triangle_parts, cycle_parts, any };

struct Anchors {
    std::set<std::pair<Vertex, Vertex>> seen;
    struct Item {
        Vertex a, b;
        Recipe recipe;
        VertexSet A, B;
    };
    std::vector<Item> items;

    void add(Vertex a, Vertex b, Recipe recipe, VertexSet A = {}, VertexSet B = {})
    {
        if (seen.insert({a, b}).second)
            items.push_back({a, b, recipe, std::move(A), std::move(B)});
    }
};

struct Counter {
    const Graph & h;
    const Graph & g;
    Vertex x, y;
    std::optional<Chi3Decomposition> triangle_parts;
    std::optional<Chi3Decomposition> cycle_parts;
    Budget & budget;

    std::vector<VertexSet> domains(const Anchors::Item & it) const
    {
        const auto n = g.order();
        VertexSet rest = VertexSet::full(n);
        rest.reset(it.a);
        rest.reset(it.b);
        VertexSet only_a(n), only_b(n);
        only_a.set(it.a);
        only_b.set(it.b);
        std::vector<VertexSet> out(h.order(), rest);
        if (it.recipe == Recipe::triangle_parts) {
            // A3 -> N(a, b), B -> V minus {a, b}.
            auto common = (g.neighbours(it.a) & g.neighbours(it.b)) & rest;
            for (Vertex v = 0; v < h.order(); ++v)
                if (triangle_parts->part[v] == 2)
                    out[v] = common;
        } else if (it.recipe == Recipe::cycle_parts) {
            // A5 -> A, A3 -> B, A4 -> V minus {a, b}.
            for (Vertex v = 0; v < h.order(); ++v) {
                if (cycle_parts->part[v] == 4)
                    out[v] = it.A & rest;
                else if (cycle_parts->part[v] == 2)
                    out[v] = it.B & rest;
            }
        }
        out[x] = only_a;
        out[y] = only_b;
        return out;
    }
};

} // namespace

PipelineResult find_h_copies_pipeline(const Graph & h, const Graph & g, Budget & budget, const PipelineOptions & options)
{
    const double alpha = options.alpha;
    if (!(alpha > 0 && alpha < 1))
        throw InvalidArgument("pipeline: alpha must lie in (0, 1)");
    if (h.order() > kMaxCountPattern)
        throw PreconditionFailed("pipeline: H has more than " + std::to_string(kMaxCountPattern) + " vertices");
    if (chromatic_number(h, budget) != 3)
        throw PreconditionFailed("pipeline: chi(H) must be 3");
    auto critical = critical_edges(h, budget);
    if (critical.edges.empty())
        throw PreconditionFailed("pipeline: H has no critical edge");

    const auto n = g.order();
    const double dn_n = dn(n);
    PipelineResult out;
    out.critical = critical.edges.front();
    const Vertex x = out.critical.u;
    const Vertex y = out.critical.v;
    const std::size_t og = *odd_girth(h).value;
    Counter counter{h, g, x, y, chi3_triangle_case(h, x, y), std::nullopt, budget};
    if (og >= 5)
        counter.cycle_parts = chi3_cycle_case(h, x, y, 2);
    out.trace.push_back("critical edge " + std::to_string(x) + "-" + std::to_string(y) + ", odd girth " +
                        std::to_string(og));

    Anchors anchors;
    const auto delta = min_degree(g);
    if (og == 3) {
        out.branch = "triangle";
        if (dn(delta) < (1.0 / 3 + alpha) * dn_n)
            out.violations.push_back("delta(G) = " + std::to_string(delta) + " < (1/3 + alpha) n");
        auto packing = greedy_packing(h, g, budget, options.greedy);
        out.trace.push_back("packed " + std::to_string(packing.size()) + " edge-disjoint copies of H");
        // A triangle p q r of H.
        std::array<Vertex, 3> tri{};
        for (const auto & e : h.edges()) {
            auto common = h.neighbours(e.u) & h.neighbours(e.v);
            if (!common.empty()) {
                tri = {e.u, e.v, common.to_vector().front()};
                break;
            }
        }
        std::size_t missing = 0;
        for (const auto & copy : packing.copies) {
            Vertex u = copy[tri[0]], v = copy[tri[1]], w = copy[tri[2]];
            std::pair<Vertex, Vertex> pairs[] = {{u, v}, {u, w}, {v, w}};
            bool found = false;
            for (auto [a, b] : pairs)
                if (dn(codegree(g, a, b)) >= alpha * dn_n) {
                    anchors.add(a, b, Recipe::triangle_parts);
                    found = true;
                    break;
                }
            missing += found ? 0 : 1;
        }
        if (missing)
            out.violations.push_back(std::to_string(missing) + " packed copies have no pair with alpha n common neighbours");
    } else {
        const std::size_t k = (og - 1) / 2;
        if (dn(delta) < (0.25 + alpha) * dn_n)
            out.violations.push_back("delta(G) = " + std::to_string(delta) + " < (1/4 + alpha) n");
        out.cleanup = cleanup_short_cycles(g, k, alpha, budget, options.greedy);
        const auto & clean = *out.cleanup;
        for (std::size_t l = 1; l <= k; ++l)
            out.trace.push_back("C" + std::to_string(2 * l + 1) + " packing: " +
                                std::to_string(clean.packings[l - 1].size()));
        out.trace.push_back("|E_c| = " + std::to_string(clean.ec.size()) + ", |S| = " + std::to_string(clean.s.count()) +
                            ", eps_c = " + std::to_string(clean.eps_c));

        if (!clean.small_packings) {
            // Many short odd cycles: anchor on (2k+1)-cycles, packed directly
            // or boosted from the largest shorter packing.
            out.branch = "dense-cycles";
            std::size_t best = 0;
            for (std::size_t l = 1; l <= k; ++l)
                if (clean.packings[l - 1].size() > clean.packings[best].size())
                    best = l - 1;
            std::vector<std::vector<Vertex>> cycles;
            if (best + 1 == k) {
                cycles = clean.packings[best].copies;
            } else {
                BoostOptions boost;
                boost.max_cycles = options.max_anchors + 1;
                cycles = boost_cycles(g, clean.packings[best], k, options.greedy.seed, budget, boost).cycles;
            }
            out.trace.push_back("anchoring on " + std::to_string(cycles.size()) + " cycles of length " +
                                std::to_string(2 * k + 1));
            for (const auto & c : cycles)
                anchors.add(c[0], c[1], Recipe::any);
        } else {
            GPrimeView view{induced_subgraph(clean.g_prime, clean.kept)};
            if (is_bipartite(view.sub.graph)) {
                out.branch = "bipartite";
                out.refined = refine_bipartite(g, clean);
            } else {
                out.branch = "c7";
                out.refined = refine_c7(g, clean, budget);
            }
            const auto & r = *out.refined;
            out.trace.push_back("type I edges " + std::to_string(r.type_one) + ", type II edges " +
                                std::to_string(r.type_two));
            if (auto bad = first_failure(r.checks))
                out.violations.push_back("refinement check " + bad->id + " fails");
            auto part_set = [&](Vertex p) { return r.parts.member_set(p); };
            if (r.kind == RefinedKind::bipartite) {
                auto L = part_set(0), R = part_set(1);
                for (const auto & e : g.edges()) {
                    if (r.g_dd.adjacent(e.u, e.v) || r.s_dd.test(e.u) || r.s_dd.test(e.v))
                        continue;
                    if (dn(codegree(g, e.u, e.v)) >= alpha * dn_n / 2)
                        anchors.add(e.u, e.v, Recipe::triangle_parts);
                    else
                        anchors.add(e.u, e.v, Recipe::cycle_parts, r.g_dd.neighbours(e.u), r.g_dd.neighbours(e.v));
                }
                const auto & small = L.count() <= R.count() ? L : R;
                const auto & big = L.count() <= R.count() ? R : L;
                r.s_dd.for_each([&](Vertex a) {
                    (g.neighbours(a) & small).for_each([&](Vertex b) {
                        anchors.add(a, b, Recipe::cycle_parts, g.neighbours(a) & big, r.g_dd.neighbours(b));
                    });
                });
            } else {
                std::vector<VertexSet> V;
                for (Vertex i = 0; i < 7; ++i)
                    V.push_back(part_set(i));
                for (const auto & e : g.edges()) {
                    if (r.g_dd.adjacent(e.u, e.v) || r.s_dd.test(e.u) || r.s_dd.test(e.v))
                        continue;
                    Vertex a = e.u, b = e.v;
                    auto i = r.part[a], j = r.part[b];
                    auto diff = (j + 7 - i) % 7;
                    if (diff == 0 || diff == 2 || diff == 5) {
                        anchors.add(a, b, Recipe::triangle_parts);
                        continue;
                    }
                    if (diff == 4) {
                        std::swap(a, b);
                        std::swap(i, j);
                    }
                    anchors.add(a, b, Recipe::cycle_parts, g.neighbours(a) & V[(i + 6) % 7],
                                g.neighbours(b) & V[(j + 1) % 7]);
                }
                const double floor = 2 * alpha * dn_n / 25;
                r.s_dd.for_each([&](Vertex a) {
                    for (Vertex i = 0; i < 7; ++i)
                        for (Vertex step : {1u, 3u}) {
                            auto j = (i + step) % 7;
                            auto Ni = g.neighbours(a) & V[i];
                            auto Nj = g.neighbours(a) & V[j];
                            if (dn(Ni.count()) > floor && dn(Nj.count()) > floor) {
                                Ni.for_each([&](Vertex b) {
                                    anchors.add(a, b, Recipe::cycle_parts, Nj, g.neighbours(b) & V[(i + 1) % 7]);
                                });
                                return;
                            }
                        }
                });
            }
        }
    }

    BigInt total = 0;
    CopySearch search(h, std::array<Vertex, 2>{x, y});
    const auto host = AdjacencyView::of(g);
    for (const auto & item : anchors.items) {
        if (out.anchors == options.max_anchors) {
            ++out.skipped_anchors;
            continue;
        }
        ++out.anchors;
        if (item.recipe == Recipe::triangle_parts)
            ++out.triangle_recipe_anchors;
        else if (item.recipe == Recipe::cycle_parts)
            ++out.cycle_recipe_anchors;
        auto domains = counter.domains(item);
        total += search.count(host, domains, budget);
        std::size_t kept = 0;
        search.enumerate(host, domains, budget, [&](std::span<const Vertex> map) {
            std::vector<Vertex> copy(map.begin(), map.end());
            if (!is_copy(h, g, copy))
                throw InternalError("pipeline: enumerated map is not a copy of H");
            out.samples.push_back(std::move(copy));
            return ++kept < options.samples_per_anchor;
        });
    }
    if (out.skipped_anchors)
        out.trace.push_back(std::to_string(out.skipped_anchors) + " anchors skipped (limit " +
                            std::to_string(options.max_anchors) + ")");
    out.trace.push_back(std::to_string(out.anchors) + " anchors, " + total.str() + " copies");
    out.copies = make_count(std::move(total), n, h.order());
    return out;
}

} // namespace remlab
