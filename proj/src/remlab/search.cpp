#include "remlab/search.hpp"

#include <algorithm>
#include <string>

namespace remlab {

ResidualGraph::ResidualGraph(const Graph & g)
    : n_(g.order()), m_(g.size()), wpr_(g.words_per_row()), rows_(n_ * wpr_)
{
    for (Vertex v = 0; v < n_; ++v)
        std::copy_n(g.row(v).begin(), wpr_, rows_.begin() + static_cast<std::ptrdiff_t>(v * wpr_));
}

void ResidualGraph::remove_edge(Vertex u, Vertex v)
{
    if (!adjacent(u, v))
        throw InvalidArgument("residual graph has no edge " + std::to_string(u) + "-" + std::to_string(v));
    rows_[u * wpr_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    rows_[v * wpr_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    --m_;
}

Graph ResidualGraph::to_graph() const
{
    std::vector<Edge> edges;
    edges.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        bits::for_each(view().row(u), [&](Vertex v) {
            if (u < v)
                edges.push_back({u, v});
        });
    return Graph(n_, edges);
}

bool is_copy(const Graph & pattern, AdjacencyView host, std::span<const Vertex> map)
{
    if (map.size() != pattern.order())
        return false;
    for (std::size_t i = 0; i < map.size(); ++i) {
        if (map[i] >= host.n)
            return false;
        for (std::size_t j = 0; j < i; ++j)
            if (map[i] == map[j])
                return false;
    }
    for (const auto & e : pattern.edges())
        if (!host.adjacent(map[e.u], map[e.v]))
            return false;
    return true;
}

CopySearch::CopySearch(const Graph & pattern, std::span<const Vertex> first) : pattern_(pattern)
{
    const auto h = pattern.order();
    if (h > kMaxSearchPattern)
        throw InvalidArgument("pattern has " + std::to_string(h) + " vertices; the limit is " +
                              std::to_string(kMaxSearchPattern));
    std::vector<bool> placed(h, false);
    std::vector<std::size_t> placed_nbrs(h, 0);
    auto place = [&](Vertex v) {
        if (v >= h || placed[v])
            throw InvalidArgument("invalid or repeated leading pattern vertex " + std::to_string(v));
        placed[v] = true;
        order_.push_back(v);
        for (Vertex w = 0; w < h; ++w)
            if (pattern.adjacent(v, w))
                ++placed_nbrs[w];
    };
    for (auto v : first)
        place(v);
    while (order_.size() < h) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < h; ++v) {
            if (placed[v])
                continue;
            if (!found || placed_nbrs[v] > placed_nbrs[best] ||
                (placed_nbrs[v] == placed_nbrs[best] && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                found = true;
            }
        }
        place(best);
    }
    back_.resize(h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pattern.adjacent(order_[i], order_[j]))
                back_[i].push_back(j);
}

namespace {

/// One search over one host: filtered domains and the backtracking state.
class Run {
  public:
    Run(const Graph & pattern, const std::vector<Vertex> & order, const std::vector<std::vector<std::size_t>> & back,
        AdjacencyView host, std::span<const VertexSet> domains, Budget & budget)
        : pattern_(pattern), order_(order), back_(back), host_(host), budget_(budget), h_(pattern.order()),
          wpr_(host.wpr), image_(h_, 0), used_(wpr_, 0), cand_(h_ * wpr_, 0)
    {
        if (!domains.empty() && domains.size() != h_)
            throw InvalidArgument("expected " + std::to_string(h_) + " domains, got " + std::to_string(domains.size()));
        domain_.assign(h_, std::vector<std::uint64_t>(wpr_, 0));
        for (Vertex a = 0; a < h_; ++a) {
            if (domains.empty()) {
                for (Vertex v = 0; v < host.n; ++v)
                    domain_[a][v >> 6] |= std::uint64_t{1} << (v & 63);
            }
            else {
                if (domains[a].universe() != host.n)
                    throw InvalidArgument("domain universe does not match the host order");
                std::copy_n(domains[a].words().begin(), wpr_, domain_[a].begin());
            }
            // Injectivity: an image needs at least deg_H(a) distinct neighbours.
            auto need = pattern.degree(a);
            if (need > 0)
                for (std::size_t w = 0; w < wpr_; ++w) {
                    auto word = domain_[a][w];
                    while (word) {
                        auto bit = static_cast<std::size_t>(std::countr_zero(word));
                        word &= word - 1;
                        auto v = static_cast<Vertex>(w * 64 + bit);
                        if (host.degree(v) < need)
                            domain_[a][w] &= ~(std::uint64_t{1} << bit);
                    }
                }
        }
        feasible_ = arc_consistency();
    }

    bool feasible() const noexcept { return feasible_; }

    unsigned __int128 count()
    {
        if (!feasible_)
            return 0;
        if (h_ == 0)
            return 1;
        return count_level(0);
    }

    bool enumerate(const CopySearch::Visitor & visit)
    {
        if (!feasible_)
            return true;
        if (h_ == 0)
            return visit(image_);
        return enum_level(0, visit);
    }

  private:
    /// D_b <- D_b ∩ N(D_a) for every pattern edge, to a fixed point.
    bool arc_consistency()
    {
        std::vector<std::uint64_t> reach(wpr_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (Vertex a = 0; a < h_; ++a) {
                if (pattern_.degree(a) == 0)
                    continue;
                std::fill(reach.begin(), reach.end(), 0);
                bits::for_each(domain_[a], [&](Vertex v) {
                    auto r = host_.row(v);
                    for (std::size_t w = 0; w < wpr_; ++w)
                        reach[w] |= r[w];
                });
                for (Vertex b = 0; b < h_; ++b) {
                    if (!pattern_.adjacent(a, b))
                        continue;
                    for (std::size_t w = 0; w < wpr_; ++w) {
                        auto next = domain_[b][w] & reach[w];
                        if (next != domain_[b][w]) {
                            domain_[b][w] = next;
                            changed = true;
                        }
                    }
                }
            }
            for (Vertex a = 0; a < h_; ++a)
                if (!bits::any(domain_[a]))
                    return false;
        }
        return true;
    }

    std::uint64_t * candidates(std::size_t level)
    {
        budget_.spend(1, "copy search");
        std::uint64_t * c = cand_.data() + level * wpr_;
        const auto & dom = domain_[order_[level]];
        for (std::size_t w = 0; w < wpr_; ++w)
            c[w] = dom[w] & ~used_[w];
        for (auto j : back_[level]) {
            auto r = host_.row(image_[order_[j]]);
            for (std::size_t w = 0; w < wpr_; ++w)
                c[w] &= r[w];
        }
        return c;
    }

    unsigned __int128 count_level(std::size_t level)
    {
        std::uint64_t * c = candidates(level);
        if (level + 1 == h_)
            return bits::popcount({c, wpr_});
        // Counts are bounded by (budget nodes) x n, so 128 bits never overflow.
        unsigned __int128 total = 0;
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t word = c[w];
            while (word) {
                auto bit = static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                auto v = static_cast<Vertex>(w * 64 + bit);
                image_[order_[level]] = v;
                used_[w] |= std::uint64_t{1} << bit;
                total += count_level(level + 1);
                used_[w] &= ~(std::uint64_t{1} << bit);
            }
        }
        return total;
    }

    bool enum_level(std::size_t level, const CopySearch::Visitor & visit)
    {
        std::uint64_t * c = candidates(level);
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t word = c[w];
            while (word) {
                auto bit = static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                auto v = static_cast<Vertex>(w * 64 + bit);
                image_[order_[level]] = v;
                bool go_on;
                if (level + 1 == h_) {
                    go_on = visit(image_);
                }
                else {
                    used_[w] |= std::uint64_t{1} << bit;
                    go_on = enum_level(level + 1, visit);
                    used_[w] &= ~(std::uint64_t{1} << bit);
                }
                if (!go_on)
                    return false;
            }
        }
        return true;
    }

    const Graph & pattern_;
    const std::vector<Vertex> & order_;
    const std::vector<std::vector<std::size_t>> & back_;
    AdjacencyView host_;
    Budget & budget_;
    std::size_t h_;
    std::size_t wpr_;
    std::vector<std::vector<std::uint64_t>> domain_;
    std::vector<Vertex> image_;
    std::vector<std::uint64_t> used_;
    std::vector<std::uint64_t> cand_;
    bool feasible_ = true;
};

} // namespace

BigInt to_bigint(unsigned __int128 x)
{
    BigInt out = static_cast<std::uint64_t>(x >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(x);
    return out;
}

BigInt CopySearch::count(AdjacencyView host, std::span<const VertexSet> domains, Budget & budget) const
{
    Run run(pattern_, order_, back_, host, domains, budget);
    return to_bigint(run.count());
}

bool CopySearch::enumerate(AdjacencyView host, std::span<const VertexSet> domains, Budget & budget,
                           const Visitor & visit) const
{
    Run run(pattern_, order_, back_, host, domains, budget);
    return run.enumerate(visit);
}

std::optional<std::vector<Vertex>> CopySearch::find_one(AdjacencyView host, std::span<const VertexSet> domains,
                                                        Budget & budget) const
{
    std::optional<std::vector<Vertex>> found;
    enumerate(host, domains, budget, [&](std::span<const Vertex> map) {
        found.emplace(map.begin(), map.end());
        return false;
    });
    return found;
}

} // namespace remlab
