// Command-line front end over the C interface.

#include "remlab/remlab.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// A failed library call, carrying the status for the exit code.
struct CallError {
    rl_status status;
    std::string message;
};

void check(rl_status s)
{
    if (s != RL_OK)
        throw CallError{s, rl_last_error()};
}

using GraphPtr = std::unique_ptr<rl_graph, decltype(&rl_graph_free)>;

GraphPtr graph_ptr(rl_graph * g) { return GraphPtr(g, &rl_graph_free); }

GraphPtr load(const std::string & path)
{
    rl_graph * g = nullptr;
    check(rl_graph_read(path.c_str(), &g));
    return graph_ptr(g);
}

Json take(rl_text * t)
{
    std::unique_ptr<rl_text, decltype(&rl_text_free)> owned(t, &rl_text_free);
    return Json::parse(rl_text_data(t));
}

void write_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw CallError{RL_IO_ERROR, "cannot write " + path};
    out << text;
}

std::vector<std::size_t> parse_list(const std::string & text)
{
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stoul(item));
    return out;
}

std::vector<double> parse_doubles(const std::string & text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stod(item));
    return out;
}

struct Global {
    bool json = false;
    std::string out_dir;
    std::optional<std::uint64_t> budget;
    unsigned threads = 1;
};

/// Options object with the global budget folded in.
Json options(const Global & g, Json o = Json::object())
{
    if (g.budget)
        o["budget"] = *g.budget;
    return o;
}

void print_scalars(const Json & j, const std::string & prefix = "")
{
    for (const auto & [key, value] : j.items()) {
        if (value.is_object() && key != "audit")
            continue;
        if (value.is_array() && (value.empty() || value.front().is_structured() || value.size() > 16))
            continue;
        if (key == "audit" || key == "csv")
            continue;
        std::cout << prefix << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
}

std::string csv_field(const std::string & v)
{
    if (v.find_first_of(",\"\n") == std::string::npos)
        return v;
    std::string out = "\"";
    for (char c : v)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string scalar(const Json & v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// One row per audited inequality, plus a row for the overall audit.
std::string check_rows(const std::string & command, const Json & config, const Json & result)
{
    std::string out = "experiment,params,check,applicable,holds,lhs,rhs\n";
    auto row = [&](const Json & c) {
        out += command + "," + csv_field(config.dump()) + "," + csv_field(scalar(c["id"])) + "," +
               scalar(c["applicable"]) + "," + scalar(c["holds"]) + "," + scalar(c["lhs"]) + "," + scalar(c["rhs"]) +
               "\n";
    };
    if (result.contains("checks"))
        for (const auto & c : result["checks"])
            row(c);
    if (result.contains("refined") && result["refined"].is_object())
        for (const auto & c : result["refined"]["checks"])
            row(c);
    if (result.contains("audit"))
        row(Json{{"id", "audit"},
                 {"applicable", true},
                 {"holds", result["audit"]["passed"]},
                 {"lhs", result["audit"]["failures"].size()},
                 {"rhs", 0}});
    return out;
}

/// Prints the result, writes the report files, and turns the audit into an exit code.
int finish(const Global & g, const std::string & command, const Json & config, Json result,
           const std::function<void(const Json &)> & text = {})
{
    if (g.json)
        std::cout << result.dump(2) << '\n';
    else if (text)
        text(result);
    else
        print_scalars(result);
    bool passed = !result.contains("audit") || result["audit"]["passed"].get<bool>();
    if (!passed)
        for (const auto & f : result["audit"]["failures"])
            std::cerr << "audit failure: " << f.get<std::string>() << '\n';
    if (!g.out_dir.empty()) {
        std::filesystem::create_directories(g.out_dir);
        auto base = (std::filesystem::path(g.out_dir) / command).string();
        Json out{{"command", command}, {"config", config},
                 {"seed", config.contains("seed") ? config["seed"] : Json(nullptr)}, {"threads", g.threads},
                 {"budget", g.budget ? Json(*g.budget) : Json(nullptr)}, {"result", result}};
        write_file(base + ".json", out.dump(2) + "\n");
        write_file(base + ".csv", result.contains("csv") ? result["csv"].get<std::string>()
                                                          : check_rows(command, config, result));
    }
    return passed ? exit_pass : exit_fail;
}

std::string edges_text(const Json & edges)
{
    std::string out;
    for (const auto & e : edges)
        out += std::to_string(e[0].get<int>()) + " " + std::to_string(e[1].get<int>()) + "\n";
    return out;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact combinatorics toolkit for removal-lemma thresholds"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_flag("--json", g.json, "Print the full JSON result");
    app.add_option("--out-dir", g.out_dir, "Write <command>.json and <command>.csv into this directory");
    app.add_option("--budget", g.budget, "Node expansion budget (default: REMOVAL_LAB_BUDGET or 1e9)");
    app.add_option("--threads", g.threads, "Parallelism cap; execution is sequential")->check(CLI::PositiveNumber);

    std::function<int()> run;
    Json config;

    // analyze
    std::string g_file, h_file, f_file;
    auto * analyze = app.add_subcommand("analyze", "Invariants of a graph");
    analyze->add_option("graph", g_file, "Edge-list file")->required();
    analyze->callback([&] {
        config = {{"graph", g_file}};
        run = [&] {
            auto gr = load(g_file);
            rl_text * t = nullptr;
            check(rl_analyze(gr.get(), options(g).dump().c_str(), &t));
            return finish(g, "analyze", config, take(t));
        };
    });

    // hom
    bool witness = false;
    auto * hom = app.add_subcommand("hom", "Decide whether H maps to F (exit 0 if yes, 1 if no)");
    hom->add_option("H", h_file)->required();
    hom->add_option("F", f_file)->required();
    hom->add_flag("--witness", witness, "Print the homomorphism");
    hom->callback([&] {
        config = {{"H", h_file}, {"F", f_file}};
        run = [&] {
            auto h = load(h_file), f = load(f_file);
            rl_text * t = nullptr;
            check(rl_hom(h.get(), f.get(), options(g).dump().c_str(), &t));
            auto r = take(t);
            finish(g, "hom", config, r, [&](const Json & j) {
                std::cout << "status: " << j["status"].get<std::string>() << '\n';
                if (witness && j["status"] == "found")
                    for (std::size_t v = 0; v < j["map"].size(); ++v)
                        std::cout << v << " " << j["map"][v] << '\n';
            });
            return r["status"] == "found" && r["audit"]["passed"].get<bool>() ? exit_pass : exit_fail;
        };
    });

    // images
    auto * images = app.add_subcommand("images", "Minimal homomorphic images of H as edge lists");
    images->add_option("H", h_file)->required();
    images->callback([&] {
        config = {{"H", h_file}};
        run = [&] {
            auto h = load(h_file);
            rl_text * t = nullptr;
            check(rl_images(h.get(), options(g).dump().c_str(), &t));
            return finish(g, "images", config, take(t), [](const Json & j) {
                std::cout << j["members"].size() << " members\n";
                for (const auto & m : j["members"])
                    std::cout << "\n" << m["n"] << " " << m["edges"].size() << "\n" << edges_text(m["edges"]);
            });
        };
    });

    // count
    std::string parts_file, blowup_list;
    std::vector<unsigned> anchor;
    auto * count = app.add_subcommand("count", "Exact labelled copy count of H in G");
    count->add_option("H", h_file)->required();
    count->add_option("G", g_file)->required();
    count->add_option("--parts", parts_file,
                      "Partition sidecar of G; the part named i restricts pattern vertex (or class) i");
    count->add_option("--anchor", anchor, "x y a b: fix x -> a and y -> b")->expected(4);
    count->add_option("--blowup", blowup_list, "s1,...,sh: count copies of H[s1,...,sh]");
    count->callback([&] {
        config = {{"H", h_file}, {"G", g_file}, {"parts", parts_file}, {"anchor", anchor}, {"blowup", blowup_list}};
        run = [&] {
            auto h = load(h_file), gr = load(g_file);
            Json o = options(g);
            std::size_t slots = rl_graph_order(h.get());
            if (!blowup_list.empty()) {
                o["blowup"] = parse_list(blowup_list);
                slots = o["blowup"].size();
            }
            if (!anchor.empty())
                o["anchor"] = anchor;
            if (!parts_file.empty()) {
                rl_text * pt = nullptr;
                check(rl_partition_read(parts_file.c_str(), rl_graph_order(gr.get()), &pt));
                auto p = take(pt);
                Json domains = Json::array();
                for (std::size_t i = 0; i < slots; ++i) {
                    Json members = Json::array();
                    for (std::size_t v = 0; v < p["part_of"].size(); ++v)
                        if (!p["part_of"][v].is_null() && p["parts"][p["part_of"][v].get<std::size_t>()] == std::to_string(i))
                            members.push_back(v);
                    domains.push_back(members);
                }
                o["parts"] = domains;
            }
            rl_text * t = nullptr;
            check(rl_count(h.get(), gr.get(), o.dump().c_str(), &t));
            return finish(g, "count", config, take(t));
        };
    });

    // pack
    std::optional<std::uint64_t> seed;
    std::string out_file;
    auto * pack = app.add_subcommand("pack", "Greedy maximal edge-disjoint packing of H in G");
    pack->add_option("H", h_file)->required();
    pack->add_option("G", g_file)->required();
    pack->add_option("--seed", seed, "Shuffle the root order with this seed");
    pack->add_option("--out", out_file, "Copies file to write");
    pack->callback([&] {
        config = {{"H", h_file}, {"G", g_file}, {"seed", seed ? Json(*seed) : Json(nullptr)}, {"out", out_file}};
        run = [&] {
            auto h = load(h_file), gr = load(g_file);
            Json o = options(g);
            if (seed)
                o["seed"] = *seed;
            rl_text * t = nullptr;
            check(rl_pack(h.get(), gr.get(), o.dump().c_str(), &t));
            auto r = take(t);
            if (!out_file.empty())
                check(rl_copies_write(out_file.c_str(), r["copies"].dump().c_str()));
            return finish(g, "pack", config, r);
        };
    });

    // boost
    std::string packing_file;
    std::size_t k = 0;
    std::size_t draws = 8, max_cycles = 100000;
    auto * boost = app.add_subcommand("boost", "Turn a packing of short odd cycles into C_{2k+1} copies");
    boost->add_option("G", g_file)->required();
    boost->add_option("packing", packing_file, "Copies file of odd cycles")->required();
    boost->add_option("--k", k)->required();
    boost->add_option("--seed", seed);
    boost->add_option("--draws", draws);
    boost->add_option("--max-cycles", max_cycles);
    boost->add_option("--out", out_file, "Copies file for the cycles found");
    boost->callback([&] {
        config = {{"G", g_file}, {"packing", packing_file}, {"k", k}, {"seed", seed ? *seed : 0},
                  {"draws", draws}, {"max_cycles", max_cycles}};
        run = [&] {
            auto gr = load(g_file);
            rl_text * ct = nullptr;
            check(rl_copies_read(packing_file.c_str(), &ct));
            Json o = options(g, {{"copies", take(ct)}, {"k", k}, {"seed", seed ? *seed : 0}, {"draws", draws},
                                 {"max_cycles", max_cycles}});
            rl_text * t = nullptr;
            check(rl_boost(gr.get(), o.dump().c_str(), &t));
            auto r = take(t);
            if (!out_file.empty())
                check(rl_copies_write(out_file.c_str(), r["cycles"].dump().c_str()));
            return finish(g, "boost", config, r, [](const Json & j) {
                print_scalars(j["report"]);
                std::cout << "cycles: " << j["cycles"].size() << '\n';
            });
        };
    });

    // construct
    std::string kind, prefix;
    std::size_t n = 0, r = 3, m = 0, parts = 2;
    double alpha = 0, eps = 0;
    bool no_critical = false;
    auto * construct = app.add_subcommand("construct", "Build a construction with its partition and packing");
    construct->add_option("kind", kind, "turan, rs-gadget, lemma7 or thm9")
        ->required()
        ->check(CLI::IsMember({"turan", "rs-gadget", "lemma7", "thm9"}));
    construct->add_option("--n", n);
    construct->add_option("--k", k);
    construct->add_option("--r", r);
    construct->add_option("--m", m);
    construct->add_option("--parts", parts);
    construct->add_option("--alpha", alpha);
    construct->add_option("--eps", eps);
    construct->add_option("--seed", seed);
    construct->add_flag("--no-critical-edge", no_critical, "thm9: Turan graph plus a regular graph in one part");
    construct->add_option("--out", prefix, "Output prefix (default: the kind)");
    construct->callback([&] {
        Json o;
        if (kind == "turan")
            o = {{"kind", "turan"}, {"n", n}, {"parts", parts}};
        else if (kind == "rs-gadget")
            o = {{"kind", "rs_gadget"}, {"k", k ? k : 1}, {"m", m}};
        else if (kind == "lemma7")
            o = {{"kind", "lemma7"}, {"k", k ? k : 1}, {"n", n}, {"alpha", alpha}, {"m", m}};
        else
            o = {{"kind", "thm9"}, {"r", r}, {"n", n}, {"eps", eps}, {"seed", seed ? *seed : 0},
                 {"no_critical_edge", no_critical}};
        config = o;
        if (prefix.empty())
            prefix = g.out_dir.empty() ? kind : (std::filesystem::path(g.out_dir) / kind).string();
        run = [&, o] {
            if (!g.out_dir.empty())
                std::filesystem::create_directories(g.out_dir);
            rl_graph * raw = nullptr;
            rl_text * t = nullptr;
            check(rl_construct(options(g, o).dump().c_str(), &raw, &t));
            auto gr = graph_ptr(raw);
            auto res = take(t);
            check(rl_graph_write(gr.get(), (prefix + ".edges").c_str()));
            check(rl_partition_write((prefix + ".parts").c_str(), res["partition"].dump().c_str()));
            if (!res["packing"].is_null())
                check(rl_copies_write((prefix + ".copies").c_str(), res["packing"]["copies"].dump().c_str()));
            Json echo{{"params", res["params"]}, {"n", res["n"]}, {"m", res["m"]}, {"min_degree", res["min_degree"]},
                      {"declared_min_degree", res["declared_min_degree"]}, {"degree_slack", res["degree_slack"]},
                      {"packing_size", res["packing"].is_null() ? Json(nullptr) : res["packing"]["size"]},
                      {"audit", res["audit"]}};
            write_file(prefix + ".json", echo.dump(2) + "\n");
            return finish(g, "construct", config, res, [&](const Json & j) {
                print_scalars(j["params"]);
                std::cout << "edges: " << j["m"] << "\nmin_degree: " << j["min_degree"]
                          << "\ndeclared_min_degree: " << j["declared_min_degree"] << "\npacking_size: "
                          << (j["packing"].is_null() ? Json(nullptr) : j["packing"]["size"]) << "\nfiles: " << prefix
                          << ".{edges,parts,json" << (j["packing"].is_null() ? "" : ",copies") << "}\n";
            });
        };
    });

    // decompose
    std::vector<unsigned> edge;
    std::string mode = "auto";
    auto * decompose = app.add_subcommand("decompose", "Chi-3 decomposition of H around a critical edge");
    decompose->add_option("H", h_file)->required();
    decompose->add_option("--edge", edge, "x y (default: first critical edge)")->expected(2);
    decompose->add_option("--mode", mode)->check(CLI::IsMember({"auto", "triangle", "cycle"}));
    decompose->add_option("--k", k);
    decompose->add_option("--out", out_file, "Partition sidecar to write");
    decompose->callback([&] {
        config = {{"H", h_file}, {"edge", edge}, {"mode", mode}, {"k", k}};
        run = [&] {
            auto h = load(h_file);
            Json o = options(g, {{"mode", mode}, {"k", k}});
            if (!edge.empty())
                o["edge"] = edge;
            rl_text * t = nullptr;
            check(rl_decompose(h.get(), o.dump().c_str(), &t));
            auto res = take(t);
            if (!out_file.empty())
                check(rl_partition_write(out_file.c_str(), res["partition"].dump().c_str()));
            return finish(g, "decompose", config, res, [](const Json & j) {
                std::cout << "# mode " << j["mode"].get<std::string>() << ", edge " << j["x"] << "-" << j["y"]
                          << ", k " << j["k"] << '\n';
                const auto & p = j["partition"];
                for (std::size_t v = 0; v < p["part_of"].size(); ++v)
                    if (!p["part_of"][v].is_null())
                        std::cout << v << " " << p["parts"][p["part_of"][v].get<std::size_t>()].get<std::string>()
                                  << '\n';
            });
        };
    });

    // cleanup
    bool refine = false;
    alpha = 0.1;
    auto * cleanup = app.add_subcommand("cleanup", "Remove short odd cycles and report the cleanup quantities");
    cleanup->add_option("G", g_file)->required();
    cleanup->add_option("--k", k)->required();
    cleanup->add_option("--alpha", alpha);
    cleanup->add_option("--seed", seed);
    cleanup->add_flag("--refine", refine, "Also build the refined partition");
    cleanup->add_option("--out", out_file, "Edge-list file for G'");
    cleanup->callback([&] {
        config = {{"G", g_file}, {"k", k}, {"alpha", alpha}, {"refine", refine},
                  {"seed", seed ? Json(*seed) : Json(nullptr)}};
        run = [&] {
            auto gr = load(g_file);
            Json o = options(g, {{"k", k}, {"alpha", alpha}, {"refine", refine}});
            if (seed)
                o["seed"] = *seed;
            rl_graph * gp = nullptr;
            rl_text * t = nullptr;
            check(rl_cleanup(gr.get(), o.dump().c_str(), &gp, &t));
            auto gprime = graph_ptr(gp);
            auto res = take(t);
            if (!out_file.empty())
                check(rl_graph_write(gprime.get(), out_file.c_str()));
            return finish(g, "cleanup", config, res, [](const Json & j) {
                print_scalars(j);
                for (const auto & c : j["checks"])
                    std::cout << "check " << c["id"].get<std::string>() << ": "
                              << (!c["applicable"].get<bool>() ? "n/a" : c["holds"].get<bool>() ? "holds" : "FAILS")
                              << " (" << c["lhs"] << " vs " << c["rhs"] << ")\n";
            });
        };
    });

    // pipeline
    std::size_t max_anchors = 256, samples = 2;
    auto * pipeline = app.add_subcommand("pipeline", "Find copies of H in G along the constructive argument");
    pipeline->add_option("H", h_file)->required();
    pipeline->add_option("G", g_file)->required();
    pipeline->add_option("--alpha", alpha);
    pipeline->add_option("--seed", seed);
    pipeline->add_option("--max-anchors", max_anchors);
    pipeline->add_option("--samples", samples, "Audited sample copies kept per anchor");
    pipeline->callback([&] {
        config = {{"H", h_file}, {"G", g_file}, {"alpha", alpha}, {"max_anchors", max_anchors},
                  {"samples", samples}, {"seed", seed ? Json(*seed) : Json(nullptr)}};
        run = [&] {
            auto h = load(h_file), gr = load(g_file);
            Json o = options(g, {{"alpha", alpha}, {"max_anchors", max_anchors}, {"samples_per_anchor", samples}});
            if (seed)
                o["seed"] = *seed;
            rl_text * t = nullptr;
            check(rl_pipeline(h.get(), gr.get(), o.dump().c_str(), &t));
            return finish(g, "pipeline", config, take(t), [](const Json & j) {
                for (const auto & line : j["trace"])
                    std::cout << line.get<std::string>() << '\n';
                for (const auto & v : j["violations"])
                    std::cout << "hypothesis not met: " << v.get<std::string>() << '\n';
                std::cout << "branch: " << j["branch"].get<std::string>() << "\ncopies: "
                          << j["copies"]["value"].get<std::string>() << "\nnormalized: " << j["copies"]["normalized"]
                          << '\n';
            });
        };
    });

    // test-hom
    std::size_t q = 0, trials = 400;
    auto * test_hom = app.add_subcommand("test-hom", "Vertex-sampling tester for the property 'maps to F'");
    test_hom->add_option("G", g_file)->required();
    test_hom->add_option("F", f_file)->required();
    test_hom->add_option("--q", q)->required();
    test_hom->add_option("--trials", trials);
    test_hom->add_option("--seed", seed);
    test_hom->callback([&] {
        config = {{"G", g_file}, {"F", f_file}, {"q", q}, {"trials", trials}, {"seed", seed ? *seed : 0}};
        run = [&] {
            auto gr = load(g_file), f = load(f_file);
            Json o = options(g, {{"q", q}, {"trials", trials}, {"seed", seed ? *seed : 0}});
            rl_text * t = nullptr;
            check(rl_test_hom(gr.get(), f.get(), o.dump().c_str(), &t));
            return finish(g, "test-hom", config, take(t));
        };
    });

    // certify-far
    auto * far = app.add_subcommand("certify-far", "Bounds on the edits needed before G maps to F");
    far->add_option("G", g_file)->required();
    far->add_option("F", f_file)->required();
    far->callback([&] {
        config = {{"G", g_file}, {"F", f_file}};
        run = [&] {
            auto gr = load(g_file), f = load(f_file);
            rl_text * t = nullptr;
            check(rl_certify_far(gr.get(), f.get(), options(g).dump().c_str(), &t));
            return finish(g, "certify-far", config, take(t));
        };
    });

    // estimate
    std::string sweep, family = "thm9";
    double gamma = 0;
    auto * estimate = app.add_subcommand("estimate", "Exact copy densities over a construction sweep (CSV)");
    estimate->add_option("H", h_file)->required();
    estimate->add_option("--gamma", gamma);
    estimate->add_option("--sweep", sweep, "eps1,eps2,... (alpha values for lemma7)")->required();
    estimate->add_option("--n", n)->required();
    estimate->add_option("--family", family)->check(CLI::IsMember({"lemma7", "thm9", "thm9-general"}));
    estimate->add_option("--k", k);
    estimate->add_option("--r", r);
    estimate->add_option("--seed", seed);
    estimate->callback([&] {
        config = {{"H", h_file}, {"family", family}, {"gamma", gamma}, {"sweep", sweep}, {"n", n},
                  {"k", k ? k : 1}, {"r", r}, {"seed", seed ? *seed : 0}};
        run = [&] {
            auto h = load(h_file);
            Json o = options(g, {{"family", family}, {"gamma", gamma}, {"sweep", parse_doubles(sweep)}, {"n", n},
                                 {"k", k ? k : 1}, {"r", r}, {"seed", seed ? *seed : 0}});
            rl_text * t = nullptr;
            check(rl_estimate(h.get(), o.dump().c_str(), &t));
            return finish(g, "estimate", config, take(t), [](const Json & j) {
                std::cout << j["csv"].get<std::string>();
                for (const char * key : {"fit_eps", "fit_eps_realized"})
                    if (!j[key].is_null())
                        std::cerr << key << ": exponent " << j[key]["exponent"] << ", residual " << j[key]["residual"]
                                  << '\n';
            });
        };
    });

    // corpus
    std::string dir = "corpus";
    auto * corpus = app.add_subcommand("corpus", "Write the standard corpus with its manifest");
    corpus->add_option("--dir", dir);
    corpus->add_option("--seed", seed);
    corpus->callback([&] {
        config = {{"dir", dir}, {"seed", seed ? *seed : 0}};
        run = [&] {
            rl_text * t = nullptr;
            check(rl_corpus_generate(dir.c_str(), seed ? *seed : 0, &t));
            return finish(g, "corpus", config, take(t), [&](const Json & j) {
                std::cout << "wrote " << j["entries"].size() << " graphs and manifest to " << dir << '\n';
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }
    try {
        return run();
    } catch (const CallError & e) {
        std::cerr << "error (" << rl_status_name(e.status) << "): " << e.message << '\n';
        return e.status == RL_INVALID_ARGUMENT ? exit_usage : exit_fail;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
