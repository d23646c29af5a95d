#include "remlab/homomorphism.hpp"
#include "remlab/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace remlab {

const char * to_string(HomStatus s) noexcept
{
    switch (s) {
    case HomStatus::found:
        return "found";
    case HomStatus::none:
        return "none";
    case HomStatus::budget_exhausted:
        return "budget_exhausted";
    }
    return "unknown";
}

namespace {

class HomSolver {
  public:
    HomSolver(const Graph & h, const Graph & f, Budget & budget)
        : h_(h), budget_(budget), assigned_(h.order(), kFree), dom_(h.order(), 0), nbr_f_(f.order(), 0),
          nbr_h_(h.order())
    {
        std::uint64_t active = 0;
        std::uint64_t all = 0;
        for (Vertex a = 0; a < f.order(); ++a) {
            all |= std::uint64_t{1} << a;
            for (Vertex b = 0; b < f.order(); ++b)
                if (f.adjacent(a, b))
                    nbr_f_[a] |= std::uint64_t{1} << b;
            if (nbr_f_[a])
                active |= std::uint64_t{1} << a;
        }
        for (Vertex v = 0; v < h.order(); ++v) {
            nbr_h_[v] = h.neighbour_list(v);
            dom_[v] = nbr_h_[v].empty() ? all : active;
        }
    }

    bool solve()
    {
        // Components are independent, so a failure in one never revisits another.
        std::vector<bool> seen(h_.order(), false);
        for (Vertex s = 0; s < h_.order(); ++s) {
            if (seen[s])
                continue;
            std::vector<Vertex> comp{s};
            seen[s] = true;
            for (std::size_t i = 0; i < comp.size(); ++i)
                for (auto w : nbr_h_[comp[i]])
                    if (!seen[w]) {
                        seen[w] = true;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            if (!search(comp, comp.size()))
                return false;
        }
        return true;
    }

    std::vector<Vertex> map() const
    {
        std::vector<Vertex> out(assigned_.size());
        for (std::size_t v = 0; v < out.size(); ++v)
            out[v] = static_cast<Vertex>(assigned_[v]);
        return out;
    }

  private:
    static constexpr std::uint32_t kFree = ~std::uint32_t{0};

    bool search(const std::vector<Vertex> & comp, std::size_t left)
    {
        if (left == 0)
            return true;
        budget_.spend(1, "find_homomorphism");
        Vertex var = 0;
        int best = 65;
        for (auto v : comp) {
            if (assigned_[v] != kFree)
                continue;
            int size = std::popcount(dom_[v]);
            if (size < best) {
                best = size;
                var = v;
            }
        }
        std::uint64_t values = dom_[var];
        while (values) {
            auto value = static_cast<std::uint32_t>(std::countr_zero(values));
            values &= values - 1;
            auto mark = trail_.size();
            assigned_[var] = value;
            bool ok = true;
            for (auto w : nbr_h_[var]) {
                if (assigned_[w] != kFree)
                    continue;
                auto next = dom_[w] & nbr_f_[value];
                if (next != dom_[w]) {
                    trail_.emplace_back(w, dom_[w]);
                    dom_[w] = next;
                }
                if (!next) {
                    ok = false;
                    break;
                }
            }
            if (ok && search(comp, left - 1))
                return true;
            while (trail_.size() > mark) {
                dom_[trail_.back().first] = trail_.back().second;
                trail_.pop_back();
            }
            assigned_[var] = kFree;
        }
        return false;
    }

    const Graph & h_;
    Budget & budget_;
    std::vector<std::uint32_t> assigned_;
    std::vector<std::uint64_t> dom_;
    std::vector<std::uint64_t> nbr_f_;
    std::vector<std::vector<Vertex>> nbr_h_;
    std::vector<std::pair<Vertex, std::uint64_t>> trail_;
};

Graph without_vertex(const Graph & g, Vertex v)
{
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, keep).graph;
}

Graph quotient(const Graph & h, const std::vector<std::size_t> & class_of, std::size_t classes)
{
    GraphBuilder b(classes);
    for (const auto & e : h.edges())
        b.try_add_edge(static_cast<Vertex>(class_of[e.u]), static_cast<Vertex>(class_of[e.v]));
    return b.build();
}

} // namespace

HomResult find_homomorphism(const Graph & h, const Graph & f, Budget & budget)
{
    if (f.order() > kMaxHomTarget)
        throw InvalidArgument("find_homomorphism: target order " + std::to_string(f.order()) + " exceeds " +
                              std::to_string(kMaxHomTarget));
    HomResult result;
    if (h.order() == 0) {
        result.status = HomStatus::found;
        return result;
    }
    HomSolver solver(h, f, budget);
    try {
        if (solver.solve()) {
            result.status = HomStatus::found;
            result.map = solver.map();
        }
    }
    catch (const BudgetExceeded &) {
        result.status = HomStatus::budget_exhausted;
    }
    return result;
}

HomResult find_homomorphism(const Graph & h, const Graph & f)
{
    Budget budget;
    return find_homomorphism(h, f, budget);
}

bool is_homomorphism(const Graph & h, const Graph & f, std::span<const Vertex> map)
{
    if (map.size() != h.order())
        return false;
    for (auto v : map)
        if (v >= f.order())
            return false;
    for (const auto & e : h.edges())
        if (!f.adjacent(map[e.u], map[e.v]))
            return false;
    return true;
}

InducedSubgraph core_of(const Graph & g, Budget & budget)
{
    if (g.order() > kMaxCoreOrder)
        throw BudgetExceeded("core_of: order " + std::to_string(g.order()) + " exceeds the limit of " +
                             std::to_string(kMaxCoreOrder));
    std::vector<Vertex> keep(g.order());
    std::iota(keep.begin(), keep.end(), Vertex{0});
    auto current = induced_subgraph(g, keep);
    bool shrunk = true;
    while (shrunk && current.graph.order() > 1) {
        shrunk = false;
        for (Vertex v = 0; v < current.graph.order(); ++v) {
            auto smaller = without_vertex(current.graph, v);
            auto r = find_homomorphism(current.graph, smaller, budget);
            if (r.status == HomStatus::budget_exhausted)
                throw BudgetExceeded("core_of: homomorphism budget exhausted");
            if (r.found()) {
                keep.erase(keep.begin() + v);
                current = induced_subgraph(g, keep);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

InducedSubgraph core_of(const Graph & g)
{
    Budget budget;
    return core_of(g, budget);
}

CanonicalForm canonical_form(const Graph & g, Budget & budget)
{
    const auto n = g.order();
    if (n > 16)
        throw InvalidArgument("canonical_form: order " + std::to_string(n) + " exceeds 16");
    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), Vertex{0});
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::vector<Vertex> slot(n);
    std::vector<bool> placed(n, false);
    std::string current;
    std::string best;
    std::vector<Vertex> best_labeling;

    // Slot i contributes adj(slot[i], slot[j]) for j < i.
    auto dfs = [&](auto && self, std::size_t i) -> void {
        if (i == n) {
            if (best_labeling.empty() || current > best) {
                best = current;
                best_labeling = slot;
            }
            return;
        }
        budget.spend(1, "canonical_form");
        auto want = g.degree(by_degree[i]);
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v] || g.degree(v) != want)
                continue;
            auto mark = current.size();
            for (std::size_t j = 0; j < i; ++j)
                current.push_back(g.adjacent(v, slot[j]) ? '1' : '0');
            if (!best_labeling.empty() && current.compare(0, current.size(), best, 0, current.size()) < 0) {
                current.resize(mark);
                continue;
            }
            placed[v] = true;
            slot[i] = v;
            self(self, i + 1);
            placed[v] = false;
            current.resize(mark);
        }
    };
    dfs(dfs, 0);

    CanonicalForm out;
    out.labeling = best_labeling;
    out.key = std::to_string(n) + ":" + best;
    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[best_labeling[i]] = static_cast<Vertex>(i);
    GraphBuilder b(n);
    for (const auto & e : g.edges())
        b.add_edge(position[e.u], position[e.v]);
    out.graph = b.build();
    return out;
}

CanonicalForm canonical_form(const Graph & g)
{
    Budget budget;
    return canonical_form(g, budget);
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a).key == canonical_form(b).key;
}

MinimalImageFamily minimal_images(const Graph & h, Budget & budget)
{
    const auto n = h.order();
    if (n > kMaxImagesOrder)
        throw BudgetExceeded("minimal_images: order " + std::to_string(n) + " exceeds the limit of " +
                             std::to_string(kMaxImagesOrder));
    MinimalImageFamily family;
    std::map<std::string, bool> seen_quotients;
    std::map<std::string, Graph> cores;

    std::vector<std::size_t> class_of(n, 0);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> nbr_mask(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (auto w : h.neighbour_list(v))
            nbr_mask[v] |= 1u << w;

    // Restricted-growth enumeration of partitions into independent classes.
    auto assign = [&](auto && self, Vertex v) -> void {
        if (v == n) {
            ++family.quotients;
            auto q = quotient(h, class_of, members.size());
            auto qkey = canonical_form(q, budget).key;
            if (!seen_quotients.emplace(qkey, true).second)
                return;
            auto core = core_of(q, budget).graph;
            auto canon = canonical_form(core, budget);
            cores.emplace(canon.key, canon.graph);
            return;
        }
        for (std::size_t c = 0; c < members.size(); ++c) {
            if (members[c] & nbr_mask[v])
                continue;
            members[c] |= 1u << v;
            class_of[v] = c;
            self(self, v + 1);
            members[c] &= ~(1u << v);
        }
        members.push_back(1u << v);
        class_of[v] = members.size() - 1;
        self(self, v + 1);
        members.pop_back();
    };
    assign(assign, 0);

    auto maps_into = [&](const Graph & target) {
        auto r = find_homomorphism(h, target, budget);
        if (r.status == HomStatus::budget_exhausted)
            throw BudgetExceeded("minimal_images: homomorphism budget exhausted");
        return r.found();
    };

    std::vector<std::pair<std::string, Graph>> sorted(cores.begin(), cores.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto & a, const auto & b) {
        if (a.second.order() != b.second.order())
            return a.second.order() < b.second.order();
        if (a.second.size() != b.second.size())
            return a.second.size() < b.second.size();
        return a.first < b.first;
    });
    for (const auto & [key, m] : sorted) {
        bool minimal = true;
        for (const auto & e : m.edges()) {
            Edge one[] = {e};
            if (maps_into(remove_edges(m, one))) {
                minimal = false;
                break;
            }
        }
        for (Vertex v = 0; minimal && v < m.order() && m.order() > 1; ++v)
            if (maps_into(without_vertex(m, v)))
                minimal = false;
        if (!minimal)
            continue;
        auto w = find_homomorphism(h, m, budget);
        if (!w.found())
            throw InternalError("minimal_images: lost the homomorphism onto a quotient core");
        family.members.push_back({m, w.map});
    }
    return family;
}

MinimalImageFamily minimal_images(const Graph & h)
{
    Budget budget;
    return minimal_images(h, budget);
}

std::optional<FamilyWitness> find_family_copy(const Graph & g, std::span<const Graph> family, Budget & budget)
{
    for (std::size_t i = 0; i < family.size(); ++i) {
        CopySearch search(family[i]);
        if (auto copy = search.find_one(AdjacencyView::of(g), {}, budget))
            return FamilyWitness{i, *copy};
    }
    return std::nullopt;
}

bool is_family_free(const Graph & g, std::span<const Graph> family, Budget & budget)
{
    return !find_family_copy(g, family, budget).has_value();
}

} // namespace remlab
