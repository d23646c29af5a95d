#pragma once

#include "remlab/cleanup.hpp"
#include "remlab/constructions.hpp"
#include "remlab/counting.hpp"
#include "remlab/decomposition.hpp"
#include "remlab/homomorphism.hpp"
#include "remlab/packing.hpp"
#include "remlab/tester.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace remlab {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits, the precision of every emitted float.
double round_sig(double x);
std::string format_number(double x);

Json to_json(const Edge & e);
Json to_json(const std::vector<Edge> & edges);
Json to_json(const VertexPartition & p);
Json to_json(const Packing & p);
Json to_json(const CopyCount & c);
Json to_json(const ConstructionParams & p);
Json to_json(const ClaimCheck & c);
Json to_json(const std::vector<ClaimCheck> & checks);
Json to_json(const CleanupResult & c);
Json to_json(const RefinedPartition & r);
Json to_json(const PipelineResult & p);
Json to_json(const BoostReport & r);
Json to_json(const Chi3Decomposition & d);
Json to_json(const TesterReport & r);
Json to_json(const EstimatorReport & r);
Json to_json(const PowerFit & f);
Json to_json(const FarCertificate & f);
Json to_json(const MinimalImageFamily & f);

/// Graph summary: order, size, minimum degree, odd girth, bipartiteness, and
/// the chromatic number and critical edge count when the budget allows.
Json analyze_graph(const Graph & g, Budget & budget);

/// Fixed-column CSV with minimal quoting.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> columns);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    std::string str() const;

  private:
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Columns: instance, n, gamma_realized, eps, eps_realized, packing_size, copies, copy_density.
CsvTable estimator_table(const std::vector<EstimatorReport> & rows);

} // namespace remlab
