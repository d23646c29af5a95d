#include "remlab/decomposition.hpp"
#include "remlab/invariants.hpp"

#include <deque>
#include <limits>

namespace remlab {

const char * to_string(Chi3Mode m) noexcept
{
    return m == Chi3Mode::triangle_case ? "triangle-case" : "cycle-case";
}

namespace {

constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();

struct Split {
    Graph without;
    std::vector<bool> left;
};

/// H - xy and its bipartition with x on the left; checks the preconditions.
Split split_at_critical_edge(const Graph & h, Vertex x, Vertex y)
{
    if (x >= h.order() || y >= h.order() || x == y || !h.adjacent(x, y))
        throw PreconditionFailed("chi3 decomposition: xy must be an edge of H");
    if (h.order() > kMaxVertices)
        throw PreconditionFailed("chi3 decomposition: H too large");
    Edge e[] = {make_edge(x, y)};
    Split out{remove_edges(h, e), std::vector<bool>(h.order(), false)};
    if (is_bipartite(h))
        throw PreconditionFailed("chi3 decomposition: H is bipartite, so chi(H) != 3");
    auto parts = is_bipartite(out.without);
    if (!parts)
        throw PreconditionFailed("chi3 decomposition: H - xy is not bipartite, so xy is not critical or chi(H) > 3");
    for (auto v : parts->left)
        out.left[v] = true;
    if (!out.left[x])
        out.left.flip();
    // chi(H) = 3 forces x and y onto the same side.
    if (out.left[x] != out.left[y])
        throw InternalError("chi3 decomposition: x and y on different sides");
    return out;
}

std::vector<std::size_t> distances(const Graph & g, Vertex source)
{
    std::vector<std::size_t> dist(g.order(), kFar);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        g.neighbours(u).for_each([&](Vertex w) {
            if (dist[w] == kFar) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

Chi3Decomposition finish(Chi3Mode mode, Vertex x, Vertex y, std::size_t k, std::vector<Vertex> part,
                         std::size_t part_count)
{
    Chi3Decomposition d;
    d.mode = mode;
    d.x = x;
    d.y = y;
    d.k = k;
    d.parts = VertexPartition(part.size());
    using Id = VertexPartition::PartId;
    if (mode == Chi3Mode::triangle_case) {
        for (const char * name : {"A1", "A2", "A3", "B"})
            d.parts.add_part(name);
        d.parts.allow(0, 1);
        d.parts.allow(1, 2);
        d.parts.allow(0, 2);
        d.parts.allow(2, 3);
    } else {
        for (std::size_t i = 0; i < part_count; ++i)
            d.parts.add_part("A" + std::to_string(i + 1));
        for (std::size_t i = 0; i < part_count; ++i)
            d.parts.allow(static_cast<Id>(i), static_cast<Id>((i + 1) % part_count));
    }
    for (Vertex v = 0; v < part.size(); ++v)
        d.parts.assign(v, static_cast<Id>(part[v]));
    d.part = std::move(part);
    return d;
}

} // namespace

Chi3Decomposition chi3_triangle_case(const Graph & h, Vertex x, Vertex y)
{
    auto split = split_at_critical_edge(h, x, y);
    std::vector<Vertex> part(h.order());
    for (Vertex v = 0; v < h.order(); ++v)
        part[v] = v == x ? 0 : v == y ? 1 : split.left[v] ? 3 : 2;
    auto d = finish(Chi3Mode::triangle_case, x, y, 1, std::move(part), 4);
    if (auto why = audit_chi3(h, d))
        throw InternalError("chi3_triangle_case: " + *why);
    return d;
}

Chi3Decomposition chi3_cycle_case(const Graph & h, Vertex x, Vertex y, std::size_t k)
{
    auto split = split_at_critical_edge(h, x, y);
    auto girth = odd_girth(h);
    if (!girth.value)
        throw InternalError("chi3_cycle_case: non-bipartite graph without an odd cycle");
    const std::size_t og = *girth.value;
    if (k == 0)
        k = (og - 1) / 2;
    if (k < 2)
        throw PreconditionFailed("chi3_cycle_case: needs k >= 2 (odd girth " + std::to_string(og) + ")");
    if (og < 2 * k + 1)
        throw PreconditionFailed("chi3_cycle_case: odd girth " + std::to_string(og) + " is below 2k+1 = " +
                                 std::to_string(2 * k + 1));

    const auto n = h.order();
    auto dx = distances(split.without, x);
    auto dy = distances(split.without, y);
    // X_i = {dx = i-1}, Y_i = {dy = i-1} for i <= k.
    for (Vertex v = 0; v < n; ++v)
        if (dx[v] < k && dy[v] < k)
            throw InternalError("chi3_cycle_case: X_" + std::to_string(dx[v] + 1) + " meets Y_" +
                                std::to_string(dy[v] + 1) + " at vertex " + std::to_string(v));

    // Positions on the cycle (0-based): X_1 -> 0, Y_j -> j, X_j -> 2k+2-j for
    // j >= 2; the leftover side matching Y_k's side sits with Y_k, the other
    // at index k+1.
    const std::size_t parts = 2 * k + 1;
    const bool yk_left = (k % 2 == 1);
    std::vector<Vertex> part(n);
    for (Vertex v = 0; v < n; ++v) {
        if (dx[v] < k)
            part[v] = dx[v] == 0 ? 0 : parts + 1 - (dx[v] + 1);
        else if (dy[v] < k)
            part[v] = dy[v] + 1;
        else if (split.left[v] == yk_left)
            part[v] = k;
        else
            part[v] = k + 1;
    }
    auto d = finish(Chi3Mode::cycle_case, x, y, k, std::move(part), parts);
    if (auto why = audit_chi3(h, d))
        throw InternalError("chi3_cycle_case: " + *why);
    return d;
}

Chi3Decomposition chi3_decompose(const Graph & h, Vertex x, Vertex y, Chi3Mode mode, std::size_t k)
{
    return mode == Chi3Mode::triangle_case ? chi3_triangle_case(h, x, y) : chi3_cycle_case(h, x, y, k);
}

std::optional<std::string> audit_chi3(const Graph & h, const Chi3Decomposition & d)
{
    const auto n = h.order();
    if (d.part.size() != n)
        return "partition has the wrong order";
    const std::size_t parts = d.mode == Chi3Mode::triangle_case ? 4 : 2 * d.k + 1;
    for (Vertex v = 0; v < n; ++v) {
        if (d.part[v] >= parts)
            return "vertex " + std::to_string(v) + " has no valid part";
        if ((d.part[v] == 0) != (v == d.x))
            return "A1 is not {x}";
        if ((d.part[v] == 1) != (v == d.y))
            return "A2 is not {y}";
    }
    for (const auto & e : h.edges()) {
        auto a = d.part[e.u];
        auto b = d.part[e.v];
        bool ok;
        if (d.mode == Chi3Mode::triangle_case)
            ok = (a != b && a < 3 && b < 3) || (std::min(a, b) == 2 && std::max(a, b) == 3);
        else
            ok = (a + 1) % parts == b || (b + 1) % parts == a;
        if (!ok)
            return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins A" + std::to_string(a + 1) +
                   " and A" + std::to_string(b + 1);
    }
    return std::nullopt;
}

} // namespace remlab
