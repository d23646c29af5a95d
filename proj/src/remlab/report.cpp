#include "remlab/report.hpp"
#include "remlab/invariants.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace remlab {

double round_sig(double x)
{
    if (!std::isfinite(x) || x == 0)
        return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format_number(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

Json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return round_sig(x);
}

Json optional_size(const std::optional<std::size_t> & v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json string_list(const std::vector<std::string> & xs)
{
    Json out = Json::array();
    for (const auto & x : xs)
        out.push_back(x);
    return out;
}

} // namespace

Json to_json(const Edge & e) { return Json::array({e.u, e.v}); }

Json to_json(const std::vector<Edge> & edges)
{
    Json out = Json::array();
    for (const auto & e : edges)
        out.push_back(to_json(e));
    return out;
}

Json to_json(const VertexPartition & p)
{
    Json names = Json::array();
    for (VertexPartition::PartId i = 0; i < p.part_count(); ++i)
        names.push_back(p.name(i));
    Json part_of = Json::array();
    for (Vertex v = 0; v < p.order(); ++v) {
        auto id = p.part_of(v);
        part_of.push_back(id == VertexPartition::kUnassigned ? Json(nullptr) : Json(id));
    }
    Json allowed = Json::array();
    for (const auto & [a, b] : p.allowed_pairs())
        allowed.push_back(Json::array({a, b}));
    return Json{{"parts", names}, {"part_of", part_of}, {"allowed", allowed}};
}

Json to_json(const Packing & p)
{
    return Json{{"pattern_order", p.pattern.order()},
                {"pattern_edges", to_json(p.pattern.edges())},
                {"size", p.size()},
                {"copies", p.copies}};
}

Json to_json(const CopyCount & c) { return Json{{"value", c.value.str()}, {"normalized", number(c.normalized)}}; }

Json to_json(const ConstructionParams & p)
{
    return Json{{"kind", p.kind},         {"n", p.n},
                {"r", p.r},               {"k", p.k},
                {"m", p.m},               {"modulus", p.modulus},
                {"alpha", number(p.alpha)}, {"eps", number(p.eps)},
                {"seed", p.seed},         {"degree", p.degree},
                {"eps_realized", number(p.eps_realized)}, {"set_bound", p.set_bound},
                {"set_size", p.set_size}};
}

Json to_json(const ClaimCheck & c)
{
    return Json{{"id", c.id},          {"statement", c.statement}, {"applicable", c.applicable},
                {"holds", c.holds},    {"lhs", number(c.lhs)},     {"rhs", number(c.rhs)}};
}

Json to_json(const std::vector<ClaimCheck> & checks)
{
    Json out = Json::array();
    for (const auto & c : checks)
        out.push_back(to_json(c));
    return out;
}

Json to_json(const CleanupResult & c)
{
    Json sizes = Json::array();
    for (const auto & p : c.packings)
        sizes.push_back(p.size());
    Json out{{"n", c.n},
             {"k", c.k},
             {"alpha", number(c.alpha)},
             {"packing_sizes", sizes},
             {"ec_size", c.ec.size()},
             {"s_threshold", c.s_threshold},
             {"s", c.s.to_vector()},
             {"kept", c.kept.count()},
             {"g_prime_edges", c.g_prime.size()},
             {"min_degree_g", c.min_degree_g},
             {"min_degree_g_prime", c.min_degree_g_prime},
             {"odd_girth_g_prime", optional_size(c.odd_girth_g_prime.value)},
             {"eps_c", number(c.eps_c)},
             {"degree_hypothesis", c.degree_hypothesis},
             {"small_packings", c.small_packings},
             {"checks", to_json(c.checks)}};
    return out;
}

Json to_json(const RefinedPartition & r)
{
    return Json{{"kind", to_string(r.kind)},
                {"partition", to_json(r.parts)},
                {"g_dd_edges", r.g_dd.size()},
                {"s_dd", r.s_dd.to_vector()},
                {"type_one", r.type_one},
                {"type_two", r.type_two},
                {"checks", to_json(r.checks)}};
}

Json to_json(const PipelineResult & p)
{
    Json out{{"copies", to_json(p.copies)},
             {"critical_edge", to_json(p.critical)},
             {"branch", p.branch},
             {"trace", string_list(p.trace)},
             {"violations", string_list(p.violations)},
             {"anchors", p.anchors},
             {"triangle_recipe_anchors", p.triangle_recipe_anchors},
             {"cycle_recipe_anchors", p.cycle_recipe_anchors},
             {"skipped_anchors", p.skipped_anchors},
             {"samples", p.samples}};
    out["cleanup"] = p.cleanup ? to_json(*p.cleanup) : Json(nullptr);
    out["refined"] = p.refined ? to_json(*p.refined) : Json(nullptr);
    return out;
}

Json to_json(const BoostReport & r)
{
    return Json{{"ell", r.ell},
                {"k", r.k},
                {"input_copies", r.input_copies},
                {"threshold", r.threshold},
                {"cleaned_copies", r.cleaned_copies},
                {"core_size", r.core_size},
                {"roots", r.roots},
                {"roots_with_good", r.roots_with_good},
                {"good_cycles", r.good_cycles},
                {"distinct_cycles", r.distinct_cycles},
                {"truncated", r.truncated}};
}

Json to_json(const Chi3Decomposition & d)
{
    return Json{{"mode", to_string(d.mode)},
                {"x", d.x},
                {"y", d.y},
                {"k", d.k},
                {"part", d.part},
                {"partition", to_json(d.parts)}};
}

Json to_json(const TesterReport & r)
{
    double lo = 1, hi = 0, mean = 0;
    for (auto x : r.degree_stats) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        mean += x / static_cast<double>(r.degree_stats.size());
    }
    Json stats = Json::array();
    for (auto x : r.degree_stats)
        stats.push_back(number(x));
    return Json{{"q", r.q},
                {"trials", r.trials},
                {"seed", r.seed},
                {"rejects", r.rejects},
                {"undecided", r.undecided},
                {"reject_freq", number(r.reject_freq)},
                {"distinct_fraction", number(r.distinct_fraction)},
                {"degree_min", number(r.degree_stats.empty() ? 0 : lo)},
                {"degree_mean", number(mean)},
                {"degree_max", number(hi)},
                {"degree_stats", stats}};
}

Json to_json(const EstimatorReport & r)
{
    return Json{{"instance", r.instance},
                {"n", r.n},
                {"gamma", number(r.gamma)},
                {"gamma_realized", number(r.gamma_realized)},
                {"eps", number(r.eps)},
                {"packing_size", r.packing_size},
                {"packing_source", r.packing_source},
                {"eps_realized", number(r.eps_realized)},
                {"copies", r.copies.str()},
                {"copy_density", number(r.copy_density)}};
}

Json to_json(const PowerFit & f)
{
    return Json{{"exponent", number(f.exponent)},
                {"log_coefficient", number(f.log_coefficient)},
                {"residual", number(f.residual)},
                {"points", f.points}};
}

Json to_json(const FarCertificate & f)
{
    Json obs = Json::array();
    for (const auto & [len, count] : f.obstructions)
        obs.push_back(Json{{"length", len}, {"count", count}});
    return Json{{"family", f.family},
                {"lower_bound", f.lower_bound},
                {"upper_bound", f.upper_bound},
                {"exact", f.exact},
                {"obstructions", obs}};
}

Json to_json(const MinimalImageFamily & f)
{
    Json members = Json::array();
    for (const auto & m : f.members)
        members.push_back(Json{{"n", m.graph.order()}, {"edges", to_json(m.graph.edges())}, {"witness", m.witness}});
    return Json{{"members", members}, {"quotients", f.quotients}};
}

Json analyze_graph(const Graph & g, Budget & budget)
{
    auto og = odd_girth(g);
    auto bip = is_bipartite(g);
    Json out{{"n", g.order()},
             {"m", g.size()},
             {"min_degree", min_degree(g)},
             {"odd_girth", optional_size(og.value)},
             {"odd_cycle", og.witness},
             {"bipartite", bip.has_value()}};
    try {
        out["chi"] = chromatic_number(g, budget);
    } catch (const Error & e) {
        out["chi"] = nullptr;
        out["chi_note"] = e.what();
    }
    try {
        Budget own(budget.limit());
        out["critical_edges"] = critical_edges(g, own).edges.size();
    } catch (const Error & e) {
        out["critical_edges"] = nullptr;
        out["critical_edges_note"] = e.what();
    }
    return out;
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != columns_.size())
        throw InvalidArgument("CsvTable: row has " + std::to_string(cells.size()) + " cells, expected " +
                              std::to_string(columns_.size()));
    rows_.push_back(std::move(cells));
}

namespace {

std::string escape(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void write_line(std::ostringstream & out, const std::vector<std::string> & cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << escape(cells[i]);
    out << '\n';
}

} // namespace

std::string CsvTable::str() const
{
    std::ostringstream out;
    write_line(out, columns_);
    for (const auto & r : rows_)
        write_line(out, r);
    return out.str();
}

CsvTable estimator_table(const std::vector<EstimatorReport> & rows)
{
    CsvTable t({"instance", "n", "gamma_realized", "eps", "eps_realized", "packing_size", "copies", "copy_density"});
    for (const auto & r : rows)
        t.add_row({r.instance, std::to_string(r.n), format_number(r.gamma_realized), format_number(r.eps),
                   format_number(r.eps_realized), std::to_string(r.packing_size), r.copies.str(),
                   format_number(r.copy_density)});
    return t;
}

} // namespace remlab
