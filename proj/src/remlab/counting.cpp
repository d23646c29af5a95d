#include "remlab/counting.hpp"
#include "remlab/generators.hpp"

#include <array>
#include <cmath>

namespace remlab {

namespace {

void check_pattern(const Graph & h, std::size_t limit, const char * what)
{
    if (h.order() > limit)
        throw InvalidArgument(std::string(what) + ": pattern has " + std::to_string(h.order()) +
                              " vertices; the limit is " + std::to_string(limit));
}

unsigned __int128 increasing_chains(const Graph & g, std::vector<std::uint64_t> & cand, std::size_t depth,
                                std::size_t left, Budget & budget)
{
    const auto wpr = g.words_per_row();
    std::span<const std::uint64_t> mine(cand.data() + depth * wpr, wpr);
    if (left == 1)
        return bits::popcount(mine);
    budget.spend(1, "count_cliques");
    unsigned __int128 total = 0;
    bits::for_each(mine, [&](Vertex v) {
        auto * next = cand.data() + (depth + 1) * wpr;
        auto row = g.row(v);
        for (std::size_t w = 0; w < wpr; ++w) {
            std::uint64_t above = w > (v >> 6) ? ~std::uint64_t{0}
                                  : w < (v >> 6) ? 0
                                                 : ((v & 63) == 63 ? 0 : ~std::uint64_t{0} << ((v & 63) + 1));
            next[w] = mine[w] & row[w] & above;
        }
        total += increasing_chains(g, cand, depth + 1, left - 1, budget);
    });
    return total;
}

} // namespace

CopyCount make_count(BigInt value, std::size_t n, std::size_t h)
{
    CopyCount c;
    c.value = std::move(value);
    double denom = std::pow(static_cast<double>(n), static_cast<double>(h));
    c.normalized = denom > 0 ? c.value.convert_to<double>() / denom : 0.0;
    return c;
}

CopyCount count_labeled_copies(const Graph & h, const Graph & g, Budget & budget)
{
    return count_constrained_copies(h, g, {}, budget);
}

CopyCount count_constrained_copies(const Graph & h, const Graph & g, std::span<const VertexSet> parts, Budget & budget)
{
    check_pattern(h, kMaxCountPattern, "count");
    CopySearch search(h);
    return make_count(search.count(AdjacencyView::of(g), parts, budget), g.order(), h.order());
}

CopyCount count_blowup_copies(const Graph & h, std::span<const std::size_t> s, const Graph & g,
                              std::span<const VertexSet> parts, Budget & budget)
{
    std::size_t total = 0;
    for (auto x : s)
        total += x;
    if (total > kMaxCountPattern)
        throw InvalidArgument("count_blowup_copies: blow-up has " + std::to_string(total) +
                              " vertices; the limit is " + std::to_string(kMaxCountPattern));
    auto b = blowup(h, s);
    std::vector<VertexSet> blown;
    if (!parts.empty()) {
        if (parts.size() != h.order())
            throw InvalidArgument("count_blowup_copies: need one part per pattern vertex");
        for (auto c : b.class_of)
            blown.push_back(parts[c]);
    }
    CopySearch search(b.graph);
    return make_count(search.count(AdjacencyView::of(g), blown, budget), g.order(), b.graph.order());
}

CopyCount count_anchored_copies(const Graph & h, Vertex x, Vertex y, const Graph & g, Vertex a, Vertex b,
                                Budget & budget)
{
    check_pattern(h, kMaxCountPattern, "count_anchored_copies");
    if (!h.adjacent(x, y))
        throw InvalidArgument("anchor xy is not an edge of the pattern");
    if (!g.adjacent(a, b))
        throw InvalidArgument("anchor not an edge");
    std::vector<VertexSet> domains(h.order(), VertexSet::full(g.order()));
    domains[x] = VertexSet::of(g.order(), std::array{a});
    domains[y] = VertexSet::of(g.order(), std::array{b});
    Vertex first[] = {x, y};
    CopySearch search(h, first);
    return make_count(search.count(AdjacencyView::of(g), domains, budget), g.order(), h.order());
}

CopyCount count_cliques(std::size_t r, const Graph & g, Budget & budget)
{
    if (r == 0 || r > kMaxCountPattern)
        throw InvalidArgument("count_cliques: r must be in [1, " + std::to_string(kMaxCountPattern) + "]");
    const auto wpr = g.words_per_row();
    std::vector<std::uint64_t> cand((r + 1) * wpr, 0);
    auto all = VertexSet::full(g.order());
    std::copy(all.words().begin(), all.words().end(), cand.begin());
    BigInt chains = to_bigint(increasing_chains(g, cand, 0, r, budget));
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= r; ++i)
        factorial *= i;
    return make_count(chains * factorial, g.order(), r);
}

CopyCount count_odd_cycles(std::size_t length, const Graph & g, Budget & budget)
{
    if (length < 3 || length > 9 || length % 2 == 0)
        throw InvalidArgument("count_odd_cycles: length must be odd and in [3, 9]");
    CopySearch search(cycle_graph(length));
    return make_count(search.count(AdjacencyView::of(g), {}, budget), g.order(), length);
}

} // namespace remlab
