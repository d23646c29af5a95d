#include "remlab/invariants.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <string>

namespace remlab {

namespace {

constexpr std::size_t kUncoloured = std::numeric_limits<std::size_t>::max();

/// DSATUR-ordered backtracking for k-colourability.
class ColouringSearch {
  public:
    ColouringSearch(const Graph & g, std::size_t k, Budget & budget)
        : g_(g), k_(k), budget_(budget), colour_(g.order(), kUncoloured), blocked_(g.order())
    {
        for (auto & row : blocked_)
            row.fill(0);
    }

    bool run() { return assign(0, 0); }
    const std::vector<std::size_t> & colours() const noexcept { return colour_; }

  private:
    Vertex pick() const
    {
        Vertex best = 0;
        std::size_t best_sat = 0;
        std::size_t best_deg = 0;
        bool found = false;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (colour_[v] != kUncoloured)
                continue;
            std::size_t sat = 0;
            for (std::size_t c = 0; c < k_; ++c)
                sat += blocked_[v][c] > 0 ? 1 : 0;
            std::size_t deg = 0;
            for (auto w : g_.neighbour_list(v))
                deg += colour_[w] == kUncoloured ? 1 : 0;
            if (!found || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
                found = true;
            }
        }
        return best;
    }

    bool assign(std::size_t done, std::size_t used)
    {
        if (done == g_.order())
            return true;
        budget_.spend(1, "chromatic_number");
        Vertex v = pick();
        auto nbrs = g_.neighbour_list(v);
        // Colours above `used` are interchangeable, so only the first is tried.
        std::size_t limit = std::min(k_, used + 1);
        for (std::size_t c = 0; c < limit; ++c) {
            if (blocked_[v][c] > 0)
                continue;
            colour_[v] = c;
            for (auto w : nbrs)
                ++blocked_[w][c];
            if (assign(done + 1, std::max(used, c + 1)))
                return true;
            for (auto w : nbrs)
                --blocked_[w][c];
            colour_[v] = kUncoloured;
        }
        return false;
    }

    const Graph & g_;
    std::size_t k_;
    Budget & budget_;
    std::vector<std::size_t> colour_;
    std::vector<std::array<std::uint16_t, kMaxColouringOrder>> blocked_;
};

std::size_t greedy_clique_size(const Graph & g)
{
    std::size_t best = g.order() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        auto candidates = g.neighbours(s);
        std::size_t size = 1;
        while (!candidates.empty()) {
            Vertex pick = 0;
            std::size_t pick_deg = 0;
            bool first = true;
            candidates.for_each([&](Vertex v) {
                auto d = bits::popcount_and(g.row(v), candidates.words());
                if (first || d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                    first = false;
                }
            });
            ++size;
            candidates &= g.row(pick);
        }
        best = std::max(best, size);
    }
    return best;
}

std::size_t greedy_colour_count(const Graph & g)
{
    std::vector<std::size_t> colour(g.order(), kUncoloured);
    std::size_t used = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<bool> taken(used + 1, false);
        for (auto w : g.neighbour_list(v))
            if (colour[w] != kUncoloured)
                taken[colour[w]] = true;
        std::size_t c = 0;
        while (taken[c])
            ++c;
        colour[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

std::optional<std::vector<std::size_t>> find_colouring(const Graph & g, std::size_t k, Budget & budget)
{
    if (g.order() == 0)
        return std::vector<std::size_t>{};
    if (k == 0)
        return std::nullopt;
    if (k <= 2 || g.size() == 0) {
        if (g.size() == 0)
            return std::vector<std::size_t>(g.order(), 0);
        if (k == 1)
            return std::nullopt;
        auto parts = is_bipartite(g);
        if (!parts)
            return std::nullopt;
        std::vector<std::size_t> colour(g.order(), 0);
        for (auto v : parts->right)
            colour[v] = 1;
        return colour;
    }
    if (g.order() > kMaxColouringOrder)
        throw BudgetExceeded("chromatic_number: order " + std::to_string(g.order()) + " exceeds the exact limit of " +
                             std::to_string(kMaxColouringOrder));
    ColouringSearch search(g, std::min(k, g.order()), budget);
    if (!search.run())
        return std::nullopt;
    return search.colours();
}

std::size_t chromatic_number(const Graph & g, Budget & budget)
{
    if (g.order() == 0)
        return 0;
    if (g.size() == 0)
        return 1;
    if (is_bipartite(g))
        return 2;
    if (g.order() > kMaxColouringOrder)
        throw BudgetExceeded("chromatic_number: order " + std::to_string(g.order()) + " exceeds the exact limit of " +
                             std::to_string(kMaxColouringOrder));
    std::size_t lower = std::max<std::size_t>(3, greedy_clique_size(g));
    std::size_t upper = greedy_colour_count(g);
    for (std::size_t k = lower; k < upper; ++k)
        if (find_colouring(g, k, budget))
            return k;
    return std::max(lower, upper);
}

std::size_t chromatic_number(const Graph & g)
{
    Budget budget;
    return chromatic_number(g, budget);
}

OddGirth odd_girth(const Graph & g)
{
    const auto n = g.order();
    OddGirth best;
    std::vector<std::size_t> dist(n);
    std::vector<Vertex> parent(n);
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    const auto edges = g.edges();

    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::vector<Vertex> order{s};
        dist[s] = 0;
        for (std::size_t head = 0; head < order.size(); ++head) {
            Vertex u = order[head];
            bits::for_each(g.row(u), [&](Vertex w) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    order.push_back(w);
                }
            });
        }
        // Parent is the lowest-id neighbour one layer closer to s.
        for (auto v : order) {
            if (v == s)
                continue;
            for (auto w : g.neighbour_list(v))
                if (dist[w] + 1 == dist[v]) {
                    parent[v] = w;
                    break;
                }
        }
        for (const auto & e : edges) {
            if (dist[e.u] == unseen || dist[e.u] != dist[e.v])
                continue;
            std::size_t length = 2 * dist[e.u] + 1;
            if (best.value && *best.value <= length)
                continue;
            std::vector<Vertex> up;
            for (Vertex x = e.u; x != s; x = parent[x])
                up.push_back(x);
            std::vector<Vertex> cycle{s};
            cycle.insert(cycle.end(), up.rbegin(), up.rend());
            for (Vertex x = e.v; x != s; x = parent[x])
                cycle.push_back(x);
            best.value = length;
            best.witness = std::move(cycle);
        }
        if (best.value && *best.value == 3)
            break;
    }
    return best;
}

CriticalEdgeSet critical_edges(const Graph & h, Budget & budget)
{
    CriticalEdgeSet out;
    out.chi = chromatic_number(h, budget);
    for (const auto & e : h.edges()) {
        Edge one[] = {e};
        if (chromatic_number(remove_edges(h, one), budget) < out.chi)
            out.edges.push_back(e);
    }
    return out;
}

CriticalEdgeSet critical_edges(const Graph & h)
{
    Budget budget;
    return critical_edges(h, budget);
}

std::optional<Bipartition> is_bipartite(const Graph & g)
{
    const auto n = g.order();
    std::vector<int> side(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            bool clash = false;
            bits::for_each(g.row(u), [&](Vertex w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u]) {
                    clash = true;
                }
            });
            if (clash)
                return std::nullopt;
        }
    }
    Bipartition out;
    for (Vertex v = 0; v < n; ++v)
        (side[v] == 0 ? out.left : out.right).push_back(v);
    return out;
}

AesReport check_aes_hypothesis(const Graph & g, std::size_t k)
{
    if (k < 2)
        throw InvalidArgument("check_aes_hypothesis: k must be at least 2");
    AesReport r;
    r.n = g.order();
    r.k = k;
    r.min_degree = min_degree(g);
    r.odd_girth = odd_girth(g).value;
    r.degree_condition = r.min_degree * (2 * k + 1) > 2 * r.n;
    r.odd_girth_condition = !r.odd_girth || *r.odd_girth >= 2 * k + 1;
    r.bipartite = !r.odd_girth.has_value();
    return r;
}

} // namespace remlab
