#include "remlab/corpus.hpp"
#include "remlab/generators.hpp"
#include "remlab/graph_io.hpp"
#include "remlab/invariants.hpp"
#include "remlab/random.hpp"

#include <fstream>

namespace remlab {

namespace {

CorpusEntry plain(std::string name, std::string family, Graph g)
{
    return CorpusEntry{std::move(name), std::move(family), std::move(g), std::nullopt, std::nullopt, std::nullopt};
}

CorpusEntry built(std::string name, ConstructionOutput c)
{
    CorpusEntry e{std::move(name), c.params.kind, std::move(c.graph), std::move(c.partition), std::nullopt,
                  c.params};
    if (c.designed_packing)
        e.packing = std::move(c.designed_packing);
    return e;
}

CorpusEntry blown(std::string name, const Graph & base, std::vector<std::size_t> sizes)
{
    auto b = blowup(base, sizes);
    CorpusEntry e = plain(std::move(name), "blowup", std::move(b.graph));
    VertexPartition p(e.graph.order());
    for (Vertex i = 0; i < base.order(); ++i)
        p.add_part("V" + std::to_string(i + 1));
    for (const auto & edge : base.edges())
        p.allow(edge.u, edge.v);
    for (Vertex v = 0; v < e.graph.order(); ++v)
        p.assign(v, b.class_of[v]);
    e.partition = std::move(p);
    return e;
}

void write_text(const std::filesystem::path & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed: " + path.string());
}

std::string cell(const Json & v)
{
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_float())
        return format_number(v.get<double>());
    return v.dump();
}

} // namespace

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed)
{
    std::vector<CorpusEntry> out;
    for (std::size_t len = 3; len <= 11; len += 2)
        out.push_back(plain("cycle_" + std::to_string(len), "cycle", cycle_graph(len)));
    out.push_back(plain("petersen", "petersen", petersen_graph()));
    for (auto [n, r] : {std::pair<std::size_t, std::size_t>{12, 2}, {12, 3}, {20, 4}}) {
        auto c = turan_construction(n, r);
        out.push_back(built("turan_" + std::to_string(n) + "_" + std::to_string(r), std::move(c)));
    }
    out.push_back(blown("blowup_c5_2", cycle_graph(5), std::vector<std::size_t>(5, 2)));
    out.push_back(blown("blowup_c7_3", cycle_graph(7), std::vector<std::size_t>(7, 3)));
    out.push_back(blown("blowup_k3_234", complete_graph(3), {2, 3, 4}));
    for (auto [side, d] : {std::pair<std::size_t, std::size_t>{10, 4}, {20, 6}, {40, 9}})
        out.push_back(plain("random_bipartite_" + std::to_string(2 * side) + "_" + std::to_string(d),
                            "random_bipartite",
                            random_regular_bipartite(side, side, d, derive_seed(seed, "corpus.random_bipartite", side))));
    for (std::size_t m : {10, 20, 40}) {
        auto B = solution_free_set((m - 1) / 2, 1);
        out.push_back(built("rs_gadget_k1_m" + std::to_string(m), rs_gadget(1, m, B)));
    }
    for (std::size_t n : {60, 120, 180})
        out.push_back(built("lemma7_k1_n" + std::to_string(n), lemma7_construction(1, n, 0.3)));
    for (std::size_t n : {40, 80, 120}) {
        auto s = derive_seed(seed, "corpus.thm9_no_critical_edge", n);
        out.push_back(built("thm9_nce_r3_n" + std::to_string(n), thm9_no_critical_edge(3, n, 0.1, s)));
    }
    for (std::size_t n : {40, 80, 120}) {
        auto s = derive_seed(seed, "corpus.thm9_general", n);
        out.push_back(built("thm9_general_r3_n" + std::to_string(n), thm9_general(3, n, 0.1, s)));
    }
    return out;
}

Json corpus_record(const CorpusEntry & e)
{
    const auto & g = e.graph;
    auto og = odd_girth(g);
    Json r{{"name", e.name},
           {"family", e.family},
           {"n", g.order()},
           {"m", g.size()},
           {"min_degree", min_degree(g)},
           {"odd_girth", og.value ? Json(*og.value) : Json(nullptr)},
           {"bipartite", is_bipartite(g).has_value()}};
    try {
        Budget b(2'000'000);
        r["chi"] = chromatic_number(g, b);
    } catch (const Error &) {
        r["chi"] = nullptr;
    }
    r["critical_edges"] = nullptr;
    if (g.order() <= 12) {
        Budget b(2'000'000);
        try {
            r["critical_edges"] = critical_edges(g, b).edges.size();
        } catch (const BudgetExceeded &) {
        }
    }
    r["aes_k2_counterexample"] = check_aes_hypothesis(g, 2).counterexample();
    r["packing_size"] = e.packing ? Json(e.packing->size()) : Json(nullptr);
    r["params"] = e.params ? to_json(*e.params) : Json(nullptr);
    return r;
}

const std::vector<std::string> & corpus_csv_columns()
{
    static const std::vector<std::string> columns{"name",      "family", "n",   "m", "min_degree",
                                                  "odd_girth", "bipartite", "chi", "critical_edges", "packing_size"};
    return columns;
}

Json write_corpus(const std::filesystem::path & dir, std::uint64_t seed)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    Json entries = Json::array();
    CsvTable csv(corpus_csv_columns());
    for (const auto & e : standard_corpus(seed)) {
        auto record = corpus_record(e);
        Json files{{"graph", e.name + ".edges"}};
        write_edge_list_file(dir / (e.name + ".edges"), e.graph);
        if (e.partition) {
            files["partition"] = e.name + ".parts";
            write_partition_file(dir / (e.name + ".parts"), *e.partition);
        }
        if (e.packing) {
            files["packing"] = e.name + ".copies";
            std::ofstream out(dir / (e.name + ".copies"), std::ios::binary);
            write_copies(out, e.packing->copies);
            if (!out)
                throw IoError("write failed: " + (dir / (e.name + ".copies")).string());
        }
        record["files"] = files;
        std::vector<std::string> row;
        for (const auto & c : corpus_csv_columns())
            row.push_back(cell(record[c]));
        csv.add_row(std::move(row));
        entries.push_back(std::move(record));
    }
    Json manifest{{"seed", seed},
                  {"graph_format", "first line 'n m', then one 'u v' line per edge, 0-indexed, u < v"},
                  {"partition_format", "one 'vertex part_name' line per vertex"},
                  {"copies_format", "one labelled copy per line: images of pattern vertices 0..h-1"},
                  {"csv_columns", corpus_csv_columns()},
                  {"entries", entries}};
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
    write_text(dir / "manifest.csv", csv.str());
    return manifest;
}

} // namespace remlab
