#include "remlab/remlab.h"

#include "remlab/corpus.hpp"
#include "remlab/generators.hpp"
#include "remlab/graph_io.hpp"
#include "remlab/report.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

using namespace remlab;

struct rl_graph {
    Graph g;
};

struct rl_text {
    std::string s;
};

namespace {

thread_local std::string last_error;

rl_status fail(rl_status status, const char * what)
{
    last_error = what;
    return status;
}

template <class F>
rl_status guard(F && body)
{
    try {
        body();
        last_error.clear();
        return RL_OK;
    } catch (const InvalidArgument & e) {
        return fail(RL_INVALID_ARGUMENT, e.what());
    } catch (const PreconditionFailed & e) {
        return fail(RL_PRECONDITION_FAILED, e.what());
    } catch (const BudgetExceeded & e) {
        return fail(RL_BUDGET_EXCEEDED, e.what());
    } catch (const IoError & e) {
        return fail(RL_IO_ERROR, e.what());
    } catch (const nlohmann::json::exception & e) {
        return fail(RL_INVALID_ARGUMENT, (std::string("bad JSON: ") + e.what()).c_str());
    } catch (const std::exception & e) {
        return fail(RL_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(RL_INTERNAL_ERROR, "unknown failure");
    }
}

template <class T>
T & require(T * p, const char * name)
{
    if (!p)
        throw InvalidArgument(std::string(name) + " must not be NULL");
    return *p;
}

const char * text_arg(const char * p, const char * name)
{
    if (!p)
        throw InvalidArgument(std::string(name) + " must not be NULL");
    return p;
}

void emit(rl_text ** out, const Json & j)
{
    require(out, "out");
    *out = new rl_text{j.dump(2)};
}

/// Parsed options with a fixed set of accepted keys.
class Options {
  public:
    Options(const char * text, std::initializer_list<const char *> keys)
    {
        if (text && *text)
            j_ = Json::parse(text);
        if (j_.is_null())
            j_ = Json::object();
        if (!j_.is_object())
            throw InvalidArgument("options must be a JSON object");
        for (const auto & [key, value] : j_.items()) {
            bool known = key == "budget";
            for (auto k : keys)
                known = known || key == k;
            if (!known)
                throw InvalidArgument("unknown option '" + key + "'");
        }
    }

    bool has(const char * key) const { return j_.contains(key) && !j_[key].is_null(); }

    template <class T>
    T get(const char * key, T fallback) const
    {
        if (!has(key))
            return fallback;
        try {
            return j_[key].get<T>();
        } catch (const nlohmann::json::exception &) {
            throw InvalidArgument(std::string("option '") + key + "' has the wrong type");
        }
    }

    template <class T>
    T need(const char * key) const
    {
        if (!has(key))
            throw InvalidArgument(std::string("option '") + key + "' is required");
        return get<T>(key, T{});
    }

    const Json & raw(const char * key) const
    {
        if (!has(key))
            throw InvalidArgument(std::string("option '") + key + "' is required");
        return j_.at(key);
    }

    Budget budget() const { return has("budget") ? Budget(get<std::uint64_t>("budget", 0)) : Budget(); }

  private:
    Json j_;
};

Json audit(const std::vector<std::string> & failures)
{
    return Json{{"passed", failures.empty()}, {"failures", failures}};
}

void add_check_failures(std::vector<std::string> & out, const std::vector<ClaimCheck> & checks)
{
    for (const auto & c : checks)
        if (c.applicable && !c.holds)
            out.push_back(c.id + ": " + c.statement + " (lhs " + format_number(c.lhs) + ", rhs " +
                          format_number(c.rhs) + ")");
}

std::vector<VertexSet> vertex_sets(const Json & arrays, std::size_t n)
{
    std::vector<VertexSet> out;
    for (const auto & list : arrays) {
        VertexSet s(n);
        for (const auto & v : list) {
            auto x = v.get<std::size_t>();
            if (x >= n)
                throw InvalidArgument("vertex " + std::to_string(x) + " out of range");
            s.set(static_cast<Vertex>(x));
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Vertex>> copies_from(const Json & j)
{
    if (!j.is_array())
        throw InvalidArgument("copies must be an array of arrays");
    return j.get<std::vector<std::vector<Vertex>>>();
}

VertexPartition partition_from(const Json & j)
{
    auto names = j.at("parts").get<std::vector<std::string>>();
    auto part_of = j.at("part_of");
    VertexPartition p(part_of.size());
    for (const auto & name : names)
        p.add_part(name);
    for (Vertex v = 0; v < part_of.size(); ++v) {
        if (part_of[v].is_null())
            continue;
        auto id = part_of[v].get<std::size_t>();
        if (id >= names.size())
            throw InvalidArgument("part index " + std::to_string(id) + " out of range");
        p.assign(v, static_cast<VertexPartition::PartId>(id));
    }
    if (j.contains("allowed"))
        for (const auto & pair : j["allowed"])
            p.allow(pair.at(0).get<VertexPartition::PartId>(), pair.at(1).get<VertexPartition::PartId>());
    return p;
}

ConstructionOutput construct(const Options & o)
{
    auto kind = o.need<std::string>("kind");
    if (kind == "turan")
        return turan_construction(o.need<std::size_t>("n"), o.get<std::size_t>("parts", 2));
    if (kind == "rs_gadget") {
        auto k = o.get<std::size_t>("k", 1);
        auto m = o.need<std::size_t>("m");
        if (k == 0)
            throw InvalidArgument("rs_gadget: k must be at least 1");
        auto bound = o.get<std::uint64_t>("set_bound", m > 0 ? (m - 1) / (2 * k) : 0);
        if (bound == 0)
            throw InvalidArgument("rs_gadget: m too small for a nonempty set");
        return rs_gadget(k, m, solution_free_set(bound, k));
    }
    if (kind == "lemma7")
        return lemma7_construction(o.get<std::size_t>("k", 1), o.need<std::size_t>("n"), o.need<double>("alpha"),
                                   o.get<std::size_t>("m", 0));
    if (kind == "thm9") {
        auto r = o.get<std::size_t>("r", 3);
        auto n = o.need<std::size_t>("n");
        auto eps = o.need<double>("eps");
        auto seed = o.get<std::uint64_t>("seed", 0);
        return o.get<bool>("no_critical_edge", false) ? thm9_no_critical_edge(r, n, eps, seed)
                                                      : thm9_general(r, n, eps, seed);
    }
    throw InvalidArgument("unknown construction kind '" + kind + "'");
}

} // namespace

extern "C" {

const char * rl_version(void) { return "1.0.0"; }

const char * rl_status_name(rl_status status)
{
    switch (status) {
    case RL_OK:
        return "ok";
    case RL_INVALID_ARGUMENT:
        return "invalid_argument";
    case RL_PRECONDITION_FAILED:
        return "precondition_failed";
    case RL_BUDGET_EXCEEDED:
        return "budget_exceeded";
    case RL_IO_ERROR:
        return "io_error";
    case RL_INTERNAL_ERROR:
        return "internal_error";
    }
    return "unknown";
}

const char * rl_last_error(void) { return last_error.c_str(); }

rl_status rl_graph_new(size_t n, const uint32_t * edges, size_t m, rl_graph ** out)
{
    return guard([&] {
        require(out, "out");
        if (m && !edges)
            throw InvalidArgument("edges must not be NULL");
        GraphBuilder b(n);
        for (size_t i = 0; i < m; ++i)
            b.add_edge(edges[2 * i], edges[2 * i + 1]);
        *out = new rl_graph{b.build()};
    });
}

rl_status rl_graph_parse(const char * text, rl_graph ** out)
{
    return guard([&] {
        require(out, "out");
        std::istringstream in(text_arg(text, "text"));
        *out = new rl_graph{read_edge_list(in)};
    });
}

rl_status rl_graph_read(const char * path, rl_graph ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new rl_graph{read_edge_list_file(text_arg(path, "path"))};
    });
}

rl_status rl_graph_write(const rl_graph * g, const char * path)
{
    return guard([&] { write_edge_list_file(text_arg(path, "path"), require(g, "g").g); });
}

rl_status rl_graph_text(const rl_graph * g, rl_text ** out)
{
    return guard([&] {
        require(out, "out");
        *out = new rl_text{to_edge_list_text(require(g, "g").g)};
    });
}

size_t rl_graph_order(const rl_graph * g) { return g ? g->g.order() : 0; }
size_t rl_graph_size(const rl_graph * g) { return g ? g->g.size() : 0; }
void rl_graph_free(rl_graph * g) { delete g; }

const char * rl_text_data(const rl_text * t) { return t ? t->s.c_str() : ""; }
size_t rl_text_size(const rl_text * t) { return t ? t->s.size() : 0; }
void rl_text_free(rl_text * t) { delete t; }

rl_status rl_copies_read(const char * path, rl_text ** out)
{
    return guard([&] {
        std::ifstream in(text_arg(path, "path"));
        if (!in)
            throw IoError(std::string("cannot open ") + path);
        emit(out, Json(read_copies(in)));
    });
}

rl_status rl_copies_write(const char * path, const char * copies_json)
{
    return guard([&] {
        auto copies = copies_from(Json::parse(text_arg(copies_json, "copies_json")));
        std::ofstream o(text_arg(path, "path"), std::ios::binary);
        if (!o)
            throw IoError(std::string("cannot write ") + path);
        write_copies(o, copies);
        if (!o)
            throw IoError(std::string("write failed: ") + path);
    });
}

rl_status rl_partition_read(const char * path, size_t n, rl_text ** out)
{
    return guard([&] { emit(out, to_json(read_partition_file(text_arg(path, "path"), n))); });
}

rl_status rl_partition_write(const char * path, const char * partition_json_text)
{
    return guard([&] {
        auto p = partition_from(Json::parse(text_arg(partition_json_text, "partition_json")));
        write_partition_file(text_arg(path, "path"), p);
    });
}

rl_status rl_analyze(const rl_graph * g, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {});
        auto budget = o.budget();
        emit(out, analyze_graph(require(g, "g").g, budget));
    });
}

rl_status rl_hom(const rl_graph * h, const rl_graph * f, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {});
        auto budget = o.budget();
        const auto & hg = require(h, "h").g;
        const auto & fg = require(f, "f").g;
        auto r = find_homomorphism(hg, fg, budget);
        if (r.status == HomStatus::budget_exhausted)
            throw BudgetExceeded("homomorphism search ran out of budget");
        std::vector<std::string> failures;
        if (r.found() && !is_homomorphism(hg, fg, r.map))
            failures.push_back("returned map is not a homomorphism");
        emit(out, Json{{"status", to_string(r.status)}, {"map", r.map}, {"audit", audit(failures)}});
    });
}

rl_status rl_images(const rl_graph * h, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {});
        auto budget = o.budget();
        const auto & hg = require(h, "h").g;
        auto fam = minimal_images(hg, budget);
        std::vector<std::string> failures;
        for (std::size_t i = 0; i < fam.members.size(); ++i)
            if (!is_homomorphism(hg, fam.members[i].graph, fam.members[i].witness))
                failures.push_back("member " + std::to_string(i) + " has an invalid witness");
        auto j = to_json(fam);
        j["audit"] = audit(failures);
        emit(out, j);
    });
}

rl_status rl_count(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"parts", "anchor", "blowup"});
        auto budget = o.budget();
        const auto & hg = require(h, "h").g;
        const auto & gg = require(g, "g").g;
        std::vector<VertexSet> parts;
        if (o.has("parts"))
            parts = vertex_sets(o.raw("parts"), gg.order());
        Json j;
        CopyCount c;
        if (o.has("blowup")) {
            auto s = o.get<std::vector<std::size_t>>("blowup", {});
            c = count_blowup_copies(hg, s, gg, parts, budget);
            j["mode"] = "blowup";
        } else if (o.has("anchor")) {
            auto a = o.get<std::vector<Vertex>>("anchor", {});
            if (a.size() != 4)
                throw InvalidArgument("anchor needs four vertices: x y a b");
            c = count_anchored_copies(hg, a[0], a[1], gg, a[2], a[3], budget);
            j["mode"] = "anchored";
        } else if (!parts.empty()) {
            c = count_constrained_copies(hg, gg, parts, budget);
            j["mode"] = "constrained";
        } else {
            c = count_labeled_copies(hg, gg, budget);
            j["mode"] = "labeled";
        }
        j["value"] = c.value.str();
        j["normalized"] = round_sig(c.normalized);
        j["nodes"] = budget.used();
        emit(out, j);
    });
}

rl_status rl_pack(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"seed"});
        auto budget = o.budget();
        GreedyOptions go;
        go.shuffle = o.has("seed");
        go.seed = o.get<std::uint64_t>("seed", 0);
        const auto & gg = require(g, "g").g;
        auto p = greedy_packing(require(h, "h").g, gg, budget, go);
        std::vector<std::string> failures;
        if (auto problem = audit_packing(p, gg))
            failures.push_back(*problem);
        auto j = to_json(p);
        j["eps_realized"] = gg.order() ? round_sig(static_cast<double>(p.size()) /
                                                   (static_cast<double>(gg.order()) * static_cast<double>(gg.order())))
                                       : 0.0;
        j["audit"] = audit(failures);
        emit(out, j);
    });
}

rl_status rl_boost(const rl_graph * g, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"copies", "k", "seed", "draws", "max_cycles"});
        auto budget = o.budget();
        const auto & gg = require(g, "g").g;
        auto copies = copies_from(o.raw("copies"));
        if (copies.empty())
            throw InvalidArgument("boost: no copies given");
        Packing p{cycle_graph(copies.front().size()), std::move(copies)};
        BoostOptions bo;
        bo.draws = o.get<std::size_t>("draws", bo.draws);
        bo.max_cycles = o.get<std::size_t>("max_cycles", bo.max_cycles);
        auto k = o.need<std::size_t>("k");
        auto r = boost_cycles(gg, p, k, o.get<std::uint64_t>("seed", 0), budget, bo);
        std::vector<std::string> failures;
        auto target = cycle_graph(2 * k + 1);
        for (std::size_t i = 0; i < r.cycles.size(); ++i)
            if (!is_copy(target, gg, r.cycles[i]))
                failures.push_back("cycle " + std::to_string(i) + " is not a C" + std::to_string(2 * k + 1) + " of G");
        emit(out, Json{{"report", to_json(r.report)}, {"cycles", r.cycles}, {"audit", audit(failures)}});
    });
}

rl_status rl_construct(const char * options, rl_graph ** graph, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"kind", "n", "k", "r", "m", "parts", "set_bound", "alpha", "eps", "seed",
                            "no_critical_edge"});
        require(graph, "graph");
        auto c = construct(o);
        Json j{{"params", to_json(c.params)},
               {"n", c.graph.order()},
               {"m", c.graph.size()},
               {"min_degree", min_degree(c.graph)},
               {"declared_min_degree", c.declared_min_degree},
               {"degree_slack", c.degree_slack},
               {"partition", to_json(c.partition)},
               {"packing", c.designed_packing ? to_json(*c.designed_packing) : Json(nullptr)},
               {"audit", audit(audit_construction(c))}};
        emit(out, j);
        *graph = new rl_graph{std::move(c.graph)};
    });
}

rl_status rl_decompose(const rl_graph * h, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"edge", "mode", "k"});
        auto budget = o.budget();
        const auto & hg = require(h, "h").g;
        Edge e{};
        if (o.has("edge")) {
            auto xy = o.get<std::vector<Vertex>>("edge", {});
            if (xy.size() != 2)
                throw InvalidArgument("edge needs two vertices");
            e = Edge{xy[0], xy[1]};
        } else {
            auto crit = critical_edges(hg, budget);
            if (crit.edges.empty())
                throw PreconditionFailed("H has no critical edge");
            e = crit.edges.front();
        }
        auto mode = o.get<std::string>("mode", "auto");
        Chi3Mode m;
        if (mode == "auto") {
            auto og = odd_girth(hg).value;
            m = og && *og == 3 ? Chi3Mode::triangle_case : Chi3Mode::cycle_case;
        } else if (mode == "triangle") {
            m = Chi3Mode::triangle_case;
        } else if (mode == "cycle") {
            m = Chi3Mode::cycle_case;
        } else {
            throw InvalidArgument("mode must be auto, triangle or cycle");
        }
        auto d = chi3_decompose(hg, e.u, e.v, m, o.get<std::size_t>("k", 0));
        std::vector<std::string> failures;
        if (auto why = audit_chi3(hg, d))
            failures.push_back(*why);
        if (d.mode == Chi3Mode::cycle_case && !is_homomorphism(hg, cycle_graph(2 * d.k + 1), d.part))
            failures.push_back("part map is not a homomorphism to C" + std::to_string(2 * d.k + 1));
        auto j = to_json(d);
        j["audit"] = audit(failures);
        emit(out, j);
    });
}

rl_status rl_cleanup(const rl_graph * g, const char * options, rl_graph ** g_prime, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"k", "alpha", "seed", "refine"});
        auto budget = o.budget();
        const auto & gg = require(g, "g").g;
        GreedyOptions go;
        go.shuffle = o.has("seed");
        go.seed = o.get<std::uint64_t>("seed", 0);
        auto c = cleanup_short_cycles(gg, o.need<std::size_t>("k"), o.get<double>("alpha", 0.1), budget, go);
        std::vector<std::string> failures;
        add_check_failures(failures, c.checks);
        auto j = to_json(c);
        if (o.get<bool>("refine", false)) {
            try {
                auto sub = induced_subgraph(c.g_prime, c.kept);
                auto r = is_bipartite(sub.graph) ? refine_bipartite(gg, c) : refine_c7(gg, c, budget);
                add_check_failures(failures, r.checks);
                j["refined"] = to_json(r);
            } catch (const PreconditionFailed & e) {
                j["refined"] = nullptr;
                j["refine_note"] = e.what();
            }
        }
        j["audit"] = audit(failures);
        emit(out, j);
        if (g_prime)
            *g_prime = new rl_graph{std::move(c.g_prime)};
    });
}

rl_status rl_pipeline(const rl_graph * h, const rl_graph * g, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"alpha", "seed", "max_anchors", "samples_per_anchor"});
        auto budget = o.budget();
        PipelineOptions po;
        po.alpha = o.get<double>("alpha", po.alpha);
        po.greedy.shuffle = o.has("seed");
        po.greedy.seed = o.get<std::uint64_t>("seed", 0);
        po.max_anchors = o.get<std::size_t>("max_anchors", po.max_anchors);
        po.samples_per_anchor = o.get<std::size_t>("samples_per_anchor", po.samples_per_anchor);
        const auto & hg = require(h, "h").g;
        const auto & gg = require(g, "g").g;
        auto p = find_h_copies_pipeline(hg, gg, budget, po);
        std::vector<std::string> failures;
        if (p.cleanup)
            add_check_failures(failures, p.cleanup->checks);
        if (p.refined)
            add_check_failures(failures, p.refined->checks);
        for (std::size_t i = 0; i < p.samples.size(); ++i)
            if (!is_copy(hg, gg, p.samples[i]))
                failures.push_back("sample " + std::to_string(i) + " is not a copy of H");
        auto j = to_json(p);
        j["audit"] = audit(failures);
        emit(out, j);
    });
}

rl_status rl_test_hom(const rl_graph * g, const rl_graph * f, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"q", "trials", "seed", "trial_budget"});
        auto r = sample_test(require(g, "g").g, require(f, "f").g, o.need<std::size_t>("q"),
                             o.get<std::size_t>("trials", 400), o.get<std::uint64_t>("seed", 0),
                             o.get<std::uint64_t>("trial_budget", 0));
        auto j = to_json(r);
        j["audit"] = audit({});
        emit(out, j);
    });
}

rl_status rl_certify_far(const rl_graph * g, const rl_graph * f, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {});
        auto budget = o.budget();
        auto c = certify_far(require(g, "g").g, require(f, "f").g, budget);
        Json j = c ? to_json(*c) : Json::object();
        j["supported"] = c.has_value();
        emit(out, j);
    });
}

rl_status rl_estimate(const rl_graph * h, const char * options, rl_text ** out)
{
    return guard([&] {
        Options o(options, {"family", "gamma", "sweep", "n", "k", "r", "seed"});
        auto budget = o.budget();
        auto family = parse_sweep_family(o.get<std::string>("family", "thm9"));
        auto sweep = o.need<std::vector<double>>("sweep");
        auto seed = o.get<std::uint64_t>("seed", 0);
        auto instances = sweep_instances(family, o.need<std::size_t>("n"), sweep, o.get<std::size_t>("k", 1),
                                         o.get<std::size_t>("r", 3), seed);
        auto rows = estimate_delta(require(h, "h").g, o.get<double>("gamma", 0.0), instances, budget);
        Json list = Json::array();
        std::vector<double> eps, eps_realized, density;
        bool positive = true;
        for (const auto & r : rows) {
            list.push_back(to_json(r));
            eps.push_back(r.eps);
            eps_realized.push_back(r.eps_realized);
            density.push_back(r.copy_density);
            positive = positive && r.eps > 0 && r.eps_realized > 0 && r.copy_density > 0;
        }
        Json fit_eps = nullptr, fit_realized = nullptr;
        if (positive && rows.size() >= 2) {
            try {
                fit_eps = to_json(fit_power_law(eps, density));
            } catch (const InvalidArgument &) {
            }
            try {
                fit_realized = to_json(fit_power_law(eps_realized, density));
            } catch (const InvalidArgument &) {
            }
        }
        emit(out, Json{{"family", to_string(family)},
                       {"seed", seed},
                       {"rows", list},
                       {"fit_eps", fit_eps},
                       {"fit_eps_realized", fit_realized},
                       {"note", "each row is one explicit instance; together they bound delta(eps, H; gamma) from "
                                "above and say nothing about other graphs"},
                       {"csv", estimator_table(rows).str()},
                       {"audit", audit({})}});
    });
}

rl_status rl_corpus_generate(const char * dir, uint64_t seed, rl_text ** out)
{
    return guard([&] { emit(out, write_corpus(text_arg(dir, "dir"), seed)); });
}

} // extern "C"
