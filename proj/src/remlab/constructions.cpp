#include "remlab/constructions.hpp"
#include "remlab/generators.hpp"
#include "remlab/random.hpp"

#include <cmath>
#include <numeric>

namespace remlab {

namespace {

std::vector<Vertex> range(Vertex first, std::size_t count)
{
    std::vector<Vertex> out(count);
    std::iota(out.begin(), out.end(), first);
    return out;
}

std::size_t round_degree(double eps, std::size_t n)
{
    if (!(eps >= 0) || eps > 1)
        throw InvalidArgument("eps must lie in [0, 1]");
    return static_cast<std::size_t>(std::llround(eps * static_cast<double>(n)));
}

/// Adds the edges of `gadget` (on vertices 0..) to `b`, vertex v becoming map[v].
void plant(GraphBuilder & b, const Graph & gadget, std::span<const Vertex> map)
{
    for (const auto & e : gadget.edges())
        b.add_edge(map[e.u], map[e.v]);
}

} // namespace

std::vector<std::string> audit_construction(const ConstructionOutput & c)
{
    std::vector<std::string> out;
    if (c.partition.order() != c.graph.order())
        out.push_back("partition covers " + std::to_string(c.partition.order()) + " vertices, graph has " +
                      std::to_string(c.graph.order()));
    else if (!c.partition.complete())
        out.push_back("partition leaves a vertex unassigned");
    else if (auto e = c.partition.first_violation(c.graph))
        out.push_back("edge " + std::to_string(e->u) + "-" + std::to_string(e->v) + " joins parts " +
                      c.partition.name(c.partition.part_of(e->u)) + " and " +
                      c.partition.name(c.partition.part_of(e->v)) + ", which are not allowed");
    auto delta = min_degree(c.graph);
    if (delta + c.degree_slack < c.declared_min_degree)
        out.push_back("minimum degree " + std::to_string(delta) + " is below the declared " +
                      std::to_string(c.declared_min_degree) + " minus slack " + std::to_string(c.degree_slack));
    if (c.designed_packing)
        if (auto why = audit_packing(*c.designed_packing, c.graph))
            out.push_back("designed packing: " + *why);
    return out;
}

std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t parts)
{
    if (parts == 0)
        throw InvalidArgument("turan_graph: need at least one part");
    std::vector<std::size_t> sizes(parts, n / parts);
    for (std::size_t i = 0; i < n % parts; ++i)
        ++sizes[i];
    return sizes;
}

Graph turan_graph(std::size_t n, std::size_t parts)
{
    auto sizes = turan_part_sizes(n, parts);
    return complete_multipartite(sizes);
}

ConstructionOutput turan_construction(std::size_t n, std::size_t parts)
{
    auto sizes = turan_part_sizes(n, parts);
    ConstructionOutput out;
    out.graph = complete_multipartite(sizes);
    out.partition = VertexPartition(n);
    Vertex next = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        auto id = out.partition.add_part("V" + std::to_string(i + 1));
        out.partition.assign(range(next, sizes[i]), id);
        next += static_cast<Vertex>(sizes[i]);
        for (std::size_t j = 0; j < i; ++j)
            out.partition.allow(static_cast<VertexPartition::PartId>(j), id);
    }
    out.params.kind = "turan";
    out.params.n = n;
    out.params.r = parts + 1;
    out.declared_min_degree = n - sizes.front();
    return out;
}

ConstructionOutput rs_gadget(std::size_t k, std::size_t m, const SolutionFreeSet & B, std::size_t modulus)
{
    if (k == 0)
        throw InvalidArgument("rs_gadget: k must be at least 1");
    if (B.k != k)
        throw InvalidArgument("rs_gadget: set was built for k = " + std::to_string(B.k));
    if (auto why = audit_solution_free(B))
        throw InvalidArgument("rs_gadget: invalid set: " + *why);
    const std::size_t parts = 2 * k + 1;
    const std::uint64_t top = B.B.empty() ? 0 : B.B.back();
    std::size_t M = modulus ? modulus : std::max<std::size_t>(m, 2 * k * top + 1);
    if (m > M)
        throw InvalidArgument("rs_gadget: more starts than the modulus");
    if (2 * k * top >= M)
        throw InvalidArgument("rs_gadget: modulus " + std::to_string(M) + " must exceed 2k max(B) = " +
                              std::to_string(2 * k * top));
    if (parts * M > kMaxVertices)
        throw InvalidArgument("rs_gadget: too many vertices");

    ConstructionOutput out;
    const std::size_t n = parts * M;
    GraphBuilder b(n);
    Packing packing{cycle_graph(parts), {}};
    auto at = [&](std::size_t part, std::uint64_t value) { return static_cast<Vertex>(part * M + value % M); };
    for (std::size_t x = 0; x < m; ++x)
        for (auto d : B.B) {
            std::vector<Vertex> cycle(parts);
            for (std::size_t i = 0; i < parts; ++i)
                cycle[i] = at(i, x + i * d);
            for (std::size_t i = 0; i < parts; ++i)
                b.add_edge(cycle[i], cycle[(i + 1) % parts]);
            packing.copies.push_back(std::move(cycle));
        }
    out.graph = b.build();
    out.partition = VertexPartition(n);
    for (std::size_t i = 0; i < parts; ++i) {
        auto id = out.partition.add_part("V" + std::to_string(i + 1));
        out.partition.assign(range(static_cast<Vertex>(i * M), M), id);
    }
    for (std::size_t i = 0; i < parts; ++i)
        out.partition.allow(static_cast<VertexPartition::PartId>(i),
                            static_cast<VertexPartition::PartId>((i + 1) % parts));
    out.designed_packing = std::move(packing);
    out.params.kind = "rs_gadget";
    out.params.n = n;
    out.params.k = k;
    out.params.m = m;
    out.params.modulus = M;
    out.params.set_bound = B.N;
    out.params.set_size = B.B.size();
    return out;
}

ConstructionOutput lemma7_construction(std::size_t k, std::size_t n, double alpha, std::size_t m,
                                       std::optional<SolutionFreeSet> B)
{
    if (k == 0)
        throw InvalidArgument("lemma7_construction: k must be at least 1");
    if (!(alpha > 0 && alpha < 1))
        throw InvalidArgument("lemma7_construction: alpha must lie in (0, 1)");
    const std::size_t parts = 2 * k + 1;
    const auto M = static_cast<std::size_t>(std::llround(alpha * static_cast<double>(n) / static_cast<double>(parts)));
    if (M == 0 || parts * M >= n)
        throw InvalidArgument("lemma7_construction: infeasible sizes (gadget parts of size " + std::to_string(M) +
                              " for n = " + std::to_string(n) + ")");
    if (m == 0)
        m = (M + 1) / 2;
    if (m > M)
        throw InvalidArgument("lemma7_construction: m = " + std::to_string(m) + " exceeds the gadget part size " +
                              std::to_string(M));
    if (!B)
        B = solution_free_set((M - 1) / (2 * k), k);
    auto gadget = rs_gadget(k, m, *B, M);

    const std::size_t rest = n - parts * M;
    auto u_sizes = turan_part_sizes(rest, parts);
    if (u_sizes.back() == 0)
        throw InvalidArgument("lemma7_construction: infeasible sizes (empty U part)");

    // Gadget vertices keep their ids; U_i follows.
    GraphBuilder b(n);
    plant(b, gadget.graph, range(0, gadget.graph.order()));
    std::vector<std::vector<Vertex>> U(parts);
    Vertex next = static_cast<Vertex>(parts * M);
    for (std::size_t i = 0; i < parts; ++i) {
        U[i] = range(next, u_sizes[i]);
        next += static_cast<Vertex>(u_sizes[i]);
    }
    for (std::size_t i = 0; i < parts; ++i) {
        auto V = range(static_cast<Vertex>(i * M), M);
        b.connect_all(U[i], V);
        if (i + 1 < parts)
            b.connect_all(U[i], U[i + 1]);
    }

    ConstructionOutput out;
    out.graph = b.build();
    out.partition = VertexPartition(n);
    std::vector<VertexPartition::PartId> v_id(parts), u_id(parts);
    for (std::size_t i = 0; i < parts; ++i) {
        v_id[i] = out.partition.add_part("V" + std::to_string(i + 1));
        out.partition.assign(range(static_cast<Vertex>(i * M), M), v_id[i]);
    }
    for (std::size_t i = 0; i < parts; ++i) {
        u_id[i] = out.partition.add_part("U" + std::to_string(i + 1));
        out.partition.assign(U[i], u_id[i]);
    }
    for (std::size_t i = 0; i < parts; ++i) {
        out.partition.allow(v_id[i], v_id[(i + 1) % parts]);
        out.partition.allow(u_id[i], v_id[i]);
        if (i + 1 < parts)
            out.partition.allow(u_id[i], u_id[i + 1]);
    }
    out.designed_packing = std::move(gadget.designed_packing);
    out.params = gadget.params;
    out.params.kind = "lemma7";
    out.params.n = n;
    out.params.alpha = alpha;
    out.declared_min_degree = static_cast<std::size_t>(
        std::floor((1 - alpha) * static_cast<double>(n) / static_cast<double>(parts) + 1e-9));
    out.degree_slack = parts;
    return out;
}

ConstructionOutput thm9_no_critical_edge(std::size_t r, std::size_t n, double eps, std::uint64_t seed)
{
    if (r < 3)
        throw InvalidArgument("thm9_no_critical_edge: r must be at least 3");
    auto out = turan_construction(n, r - 1);
    const auto d = round_degree(eps, n);
    const auto v1 = out.partition.members(0);
    if (d > 0 && (d >= v1.size() || (d * v1.size()) % 2 != 0))
        throw InvalidArgument("thm9_no_critical_edge: infeasible regularity: degree " + std::to_string(d) +
                              " inside a part of size " + std::to_string(v1.size()));
    GraphBuilder b(out.graph);
    plant(b, random_regular(v1.size(), d, derive_seed(seed, "thm9_no_critical_edge")), v1);
    out.graph = b.build();
    out.partition.allow(0, 0);
    out.params.kind = "thm9_no_critical_edge";
    out.params.eps = eps;
    out.params.seed = seed;
    out.params.degree = d;
    out.params.eps_realized = n ? static_cast<double>(d) / static_cast<double>(n) : 0;
    return out;
}

ConstructionOutput thm9_general(std::size_t r, std::size_t n, double eps, std::uint64_t seed)
{
    if (r < 3)
        throw InvalidArgument("thm9_general: r must be at least 3");
    const std::size_t denom = 3 * r - 5;
    const std::size_t s = n / denom;
    if (s == 0)
        throw InvalidArgument("thm9_general: infeasible sizes: n = " + std::to_string(n) + " < 3r-5");
    // sizes[i] = |V_i|, i = 0..r.
    std::vector<double> weights{1.0};
    weights.insert(weights.end(), r - 3, 3.0);
    auto rest = apportion(n - 3 * s, weights);
    std::vector<std::size_t> sizes{rest[0], s, s, s};
    sizes.insert(sizes.end(), rest.begin() + 1, rest.end());

    const auto d = round_degree(eps, n);
    if (d > s)
        throw InvalidArgument("thm9_general: infeasible regularity: degree " + std::to_string(d) +
                              " between parts of size " + std::to_string(s));

    std::vector<std::vector<Vertex>> V(r + 1);
    Vertex next = 0;
    for (std::size_t i = 0; i <= r; ++i) {
        V[i] = range(next, sizes[i]);
        next += static_cast<Vertex>(sizes[i]);
    }
    std::vector<Vertex> high;
    for (std::size_t i = 4; i <= r; ++i)
        high.insert(high.end(), V[i].begin(), V[i].end());
    std::vector<Vertex> low = V[0];
    low.insert(low.end(), V[1].begin(), V[1].end());

    GraphBuilder b(n);
    b.connect_all(V[0], V[1]);
    b.connect_all(low, high);
    for (std::size_t i = 2; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j)
            b.connect_all(V[i], V[j]);
    for (std::size_t side = 2; side <= 3; ++side) {
        std::vector<Vertex> map = V[1];
        map.insert(map.end(), V[side].begin(), V[side].end());
        plant(b, random_regular_bipartite(s, s, d, derive_seed(seed, "thm9_general", side)), map);
    }

    ConstructionOutput out;
    out.graph = b.build();
    out.partition = VertexPartition(n);
    for (std::size_t i = 0; i <= r; ++i)
        out.partition.assign(V[i], out.partition.add_part("V" + std::to_string(i)));
    auto allow = [&](std::size_t i, std::size_t j) {
        out.partition.allow(static_cast<VertexPartition::PartId>(i), static_cast<VertexPartition::PartId>(j));
    };
    allow(0, 1);
    allow(1, 2);
    allow(1, 3);
    for (std::size_t i = 4; i <= r; ++i) {
        allow(0, i);
        allow(1, i);
    }
    for (std::size_t i = 2; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j)
            allow(i, j);
    out.params.kind = "thm9_general";
    out.params.n = n;
    out.params.r = r;
    out.params.eps = eps;
    out.params.seed = seed;
    out.params.degree = d;
    out.params.eps_realized = n ? static_cast<double>(d) / static_cast<double>(n) : 0;
    out.declared_min_degree = (3 * r - 8) * n / denom;
    out.degree_slack = r + 1;
    return out;
}

} // namespace remlab
