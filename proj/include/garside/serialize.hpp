#pragma once

#include "garside/census.hpp"
#include "garside/counting.hpp"

#include <string>
#include <vector>

namespace garside {

// Stable JSON renderings (fixed key order, so identical inputs give
// byte-identical output).
std::string verdict_to_json(const Verdict& v);
std::string sample_report_to_json(const SampleReport& rep);

// CSV renderings; all integers as decimal strings, never exponent notation.
std::string count_table_csv(const CountTable& t);
std::string spheres_csv(const std::vector<SphereShapeCounts>& rows);

struct ProportionRow {
  int l = 0;
  mpq_class exact_bound;
  double sampled = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
};
std::string proportions_csv(const std::vector<ProportionRow>& rows);

// Graph cache: JSON header (strand count, lift order, removed patterns,
// vertex count) plus the edge list as vertex-index pairs. Base graphs
// (order 1) round-trip; lifted graphs are export-only since their vertices
// are only meaningful relative to a base graph.
std::string graph_cache_json(const LWGraph& g);
std::string lift_cache_json(const LiftedGraph& gk);
LWGraph graph_from_cache_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace garside
