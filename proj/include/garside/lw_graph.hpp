#pragma once

#include "garside/simple.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace garside {

// The left-weighting graph: vertices are the simple braids other than the
// identity and the half twist (n!-2 of them, in lexicographic order of the
// permutation image), with an edge u -> v iff (u, v) is left-weighted.
// Normal forms with infimum 0 and r factors are exactly its r-vertex paths.
struct LWGraph {
  int n = 0;
  std::vector<SimpleBraid> vertices;
  std::vector<GenSet> starting;             // starting_set per vertex
  std::vector<GenSet> finishing;            // finishing_set per vertex
  std::vector<std::vector<std::uint32_t>> out;  // sorted out-neighbors
  std::vector<std::vector<std::uint32_t>> in;   // sorted in-neighbors
  std::size_t edge_count = 0;

  std::size_t vertex_count() const { return vertices.size(); }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  // Index of a simple braid among the vertices; throws if it is not one.
  std::uint32_t index_of(const SimpleBraid& s) const;
  // Vertex indices of the factor sequence of a normal form with inf 0.
  std::vector<std::uint32_t> path_of(const std::vector<SimpleBraid>& factors) const;
};

LWGraph build_graph(int n);

struct Length5Certificate {
  bool ok = false;
  // On failure, a pair with no length-5 path between them.
  std::uint32_t from = 0;
  std::uint32_t to = 0;
};

// True iff every ordered vertex pair is linked by a path of length exactly 5.
Length5Certificate check_length5(const LWGraph& g);

struct WitnessPath {
  SimpleBraid x1, x2, x3, x4;
};

// Constructive witness for length-5 connectivity: four simple braids making
// s1 -> x1 -> x2 -> x3 -> x4 -> s2 a path. Verifies the construction's
// starting/finishing-set conditions and throws std::logic_error on any
// violation.
WitnessPath witness_path(const LWGraph& g, std::uint32_t s1, std::uint32_t s2);

}  // namespace garside
