#include "remlab/packing.hpp"
#include "remlab/generators.hpp"
#include "remlab/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace remlab {

std::vector<Edge> used_edges(const Packing & p)
{
    std::vector<Edge> out;
    auto pattern_edges = p.pattern.edges();
    for (const auto & copy : p.copies)
        for (const auto & e : pattern_edges)
            out.push_back(make_edge(copy[e.u], copy[e.v]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::string> audit_packing(const Packing & p, const Graph & g)
{
    std::set<Edge> seen;
    auto pattern_edges = p.pattern.edges();
    for (std::size_t c = 0; c < p.copies.size(); ++c) {
        if (!is_copy(p.pattern, g, p.copies[c]))
            return "copy " + std::to_string(c) + " is not a copy of the pattern";
        for (const auto & e : pattern_edges) {
            auto edge = make_edge(p.copies[c][e.u], p.copies[c][e.v]);
            if (!seen.insert(edge).second)
                return "copy " + std::to_string(c) + " reuses edge " + std::to_string(edge.u) + "-" +
                       std::to_string(edge.v);
        }
    }
    return std::nullopt;
}

Packing greedy_packing_on(const Graph & pattern, ResidualGraph & residual, Budget & budget,
                          const GreedyOptions & options)
{
    Packing out{pattern, {}};
    const auto n = residual.order();
    if (pattern.order() == 0 || pattern.order() > n)
        return out;
    CopySearch search(pattern);
    const Vertex lead = search.order().front();
    auto pattern_edges = pattern.edges();

    std::vector<Vertex> roots(n);
    std::iota(roots.begin(), roots.end(), Vertex{0});
    if (options.shuffle) {
        auto rng = make_rng(options.seed, "greedy_packing");
        shuffle(std::span(roots), rng);
    }
    std::vector<VertexSet> domains(pattern.order(), VertexSet::full(n));
    for (auto root : roots) {
        domains[lead] = VertexSet(n);
        domains[lead].set(root);
        while (auto copy = search.find_one(residual.view(), domains, budget)) {
            for (const auto & e : pattern_edges)
                residual.remove_edge((*copy)[e.u], (*copy)[e.v]);
            out.copies.push_back(std::move(*copy));
        }
    }
    return out;
}

Packing greedy_packing(const Graph & pattern, const Graph & g, Budget & budget, const GreedyOptions & options)
{
    ResidualGraph residual(g);
    return greedy_packing_on(pattern, residual, budget, options);
}

std::vector<std::size_t> copies_per_vertex(const Packing & p, std::size_t n)
{
    std::vector<std::size_t> count(n, 0);
    for (const auto & copy : p.copies)
        for (auto v : copy)
            ++count.at(v);
    return count;
}

CleanReport clean_packing(const Graph & g, const Packing & p, std::size_t t)
{
    if (t == 0)
        throw InvalidArgument("clean_packing: threshold must be at least 1");
    const auto n = g.order();
    CleanReport out;
    out.threshold = t;
    out.surviving.pattern = p.pattern;
    auto count = copies_per_vertex(p, n);
    std::vector<bool> alive(p.copies.size(), true);
    std::vector<std::vector<std::size_t>> through(n);
    for (std::size_t c = 0; c < p.copies.size(); ++c)
        for (auto v : p.copies[c])
            through[v].push_back(c);

    while (true) {
        Vertex victim = 0;
        bool found = false;
        for (Vertex v = 0; v < n && !found; ++v)
            if (count[v] >= 1 && count[v] < t) {
                victim = v;
                found = true;
            }
        if (!found)
            break;
        ++out.rounds;
        for (auto c : through[victim]) {
            if (!alive[c])
                continue;
            alive[c] = false;
            for (auto v : p.copies[c])
                --count[v];
        }
    }
    out.core = VertexSet(n);
    for (std::size_t c = 0; c < p.copies.size(); ++c)
        if (alive[c])
            out.surviving.copies.push_back(p.copies[c]);
    for (Vertex v = 0; v < n; ++v)
        if (count[v] > 0)
            out.core.set(v);
    return out;
}

std::vector<Vertex> normalise_cycle(std::vector<Vertex> cycle)
{
    if (cycle.empty())
        return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1])
        std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace

BoostResult boost_cycles(const Graph & g, const Packing & p, std::size_t k, std::uint64_t seed, Budget & budget,
                         const BoostOptions & options)
{
    BoostResult result;
    auto & rep = result.report;
    const auto n = g.order();
    rep.k = k;
    rep.input_copies = p.size();
    if (p.copies.empty())
        return result;

    const auto len = p.pattern.order();
    if (len < 3 || len % 2 == 0 || !(p.pattern == cycle_graph(len)))
        throw InvalidArgument("boost_cycles: the packing must consist of odd cycles");
    const std::size_t ell = (len - 1) / 2;
    rep.ell = ell;
    if (k <= ell)
        throw InvalidArgument("boost_cycles: need l < k (got l = " + std::to_string(ell) + ", k = " + std::to_string(k) +
                              ")");
    if (k > kMaxSearchPattern / 2)
        throw InvalidArgument("boost_cycles: k too large");
    if (auto problem = audit_packing(p, g))
        throw InvalidArgument("boost_cycles: invalid packing: " + *problem);

    // Clean so every vertex lies in 0 or at least eps*n/2 cycles, eps = |P|/n^2.
    rep.threshold = std::max<std::size_t>(1, ceil_div(p.size(), 2 * n));
    auto cleaned = clean_packing(g, p, rep.threshold);
    rep.cleaned_copies = cleaned.surviving.size();
    rep.core_size = cleaned.core.count();
    const auto & core = cleaned.core;
    const auto & cycles = cleaned.surviving.copies;

    const auto target = cycle_graph(2 * k + 1);
    CopySearch search(target, std::array<Vertex, 1>{0});
    std::set<std::vector<Vertex>> distinct;

    core.for_each([&](Vertex v0) {
        if (rep.truncated)
            return;
        ++rep.roots;
        // C(v0): cycles meeting N(v0) and avoiding v0, rotated so that the
        // first stored vertex in N(v0) plays x_{l+1}.
        std::vector<std::vector<Vertex>> rotated;
        for (const auto & c : cycles) {
            if (std::find(c.begin(), c.end(), v0) != c.end())
                continue;
            auto hit = std::find_if(c.begin(), c.end(), [&](Vertex x) { return g.adjacent(v0, x); });
            if (hit == c.end())
                continue;
            auto j = static_cast<std::size_t>(hit - c.begin());
            // x[m] for m = 0..2l holds x_{m+1}; x_{l+1} = c[j].
            std::vector<Vertex> x(len);
            for (std::size_t m = 0; m < len; ++m)
                x[m] = c[(j + len + m - ell) % len];
            rotated.push_back(std::move(x));
        }
        if (rotated.empty())
            return;

        std::vector<std::uint8_t> best_layer;
        std::vector<std::size_t> best_good;
        for (std::size_t draw = 0; draw < options.draws; ++draw) {
            auto rng = make_rng(seed, "boost_cycles", static_cast<std::uint64_t>(v0) * options.draws + draw);
            std::vector<std::uint8_t> layer(n);
            for (auto & x : layer)
                x = static_cast<std::uint8_t>(uniform_below(rng, ell + 1));
            std::vector<std::size_t> good;
            for (std::size_t c = 0; c < rotated.size(); ++c) {
                const auto & x = rotated[c];
                bool ok = layer[x[ell]] == 0;
                for (std::size_t i = 1; i <= ell && ok; ++i)
                    ok = layer[x[ell - i]] == i && layer[x[ell + i]] == i;
                if (ok)
                    good.push_back(c);
            }
            if (best_layer.empty() || good.size() > best_good.size()) {
                best_layer = std::move(layer);
                best_good = std::move(good);
            }
        }
        if (best_good.empty())
            return;
        ++rep.roots_with_good;
        rep.good_cycles += best_good.size();

        Packing good{p.pattern, {}};
        for (auto c : best_good)
            good.copies.push_back(rotated[c]);
        auto reclean = clean_packing(g, good, std::max<std::size_t>(1, ceil_div(good.size(), 2 * n)));
        const auto & w = reclean.core;
        if (w.empty())
            return;

        // Pattern vertex 0 is v0; y_j (pattern vertex j, 1..2k) lives in
        // W ∩ V_{layer(j)} with layers l-1..0 towards v0 and l on the inner path.
        std::vector<VertexSet> domains(2 * k + 1, VertexSet(n));
        domains[0].set(v0);
        for (std::size_t j = 1; j <= 2 * k; ++j) {
            std::size_t from_edge = std::min(j, 2 * k + 1 - j);
            std::size_t want = std::min(from_edge - 1, ell);
            w.for_each([&](Vertex v) {
                if (v != v0 && best_layer[v] == want)
                    domains[j].set(v);
            });
        }
        search.enumerate(AdjacencyView::of(g), domains, budget, [&](std::span<const Vertex> map) {
            std::vector<Vertex> cyc(map.begin(), map.end());
            if (distinct.insert(normalise_cycle(cyc)).second)
                result.cycles.push_back(std::move(cyc));
            if (options.max_cycles && result.cycles.size() >= options.max_cycles) {
                rep.truncated = true;
                return false;
            }
            return true;
        });
    });
    rep.distinct_cycles = result.cycles.size();
    return result;
}

} // namespace remlab
