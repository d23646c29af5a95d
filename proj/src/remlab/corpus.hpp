#pragma once

#include "remlab/constructions.hpp"
#include "remlab/report.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace remlab {

struct CorpusEntry {
    std::string name;
    std::string family;
    Graph graph;
    std::optional<VertexPartition> partition;
    std::optional<Packing> packing;
    std::optional<ConstructionParams> params;
};

/// Odd cycles C3..C11, the Petersen graph, Turan graphs, blow-ups, random
/// regular bipartite graphs, and every construction at three sizes. Random
/// pieces draw from named streams of `seed`.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed);

/// Manifest record: the entry's invariants, computed with small budgets.
/// chi is null when the colouring search is out of range or budget, and
/// critical_edges is only computed for n <= 12.
Json corpus_record(const CorpusEntry & e);

/// Columns of manifest.csv, in order.
const std::vector<std::string> & corpus_csv_columns();

/// Writes <name>.edges (plus .parts and .copies when present), manifest.json
/// and manifest.csv into dir, creating it if needed. Returns the manifest.
Json write_corpus(const std::filesystem::path & dir, std::uint64_t seed);

} // namespace remlab
