#pragma once

#include "garside/lw_graph.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

inline constexpr std::size_t kDefaultLiftCap = 5'000'000;

struct LiftCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The k-th lift of the left-weighting graph: vertices are the k-vertex paths
// of the base graph, and (W1, W2) is an edge iff W2 is W1 shifted one step
// (suffix of W1 = prefix of W2). Paths of m edges here correspond one to one
// to base paths of m+k-1 edges, which is what makes forbidden-subword
// counting a matter of deleting lifted edges.
struct LiftedGraph {
  int k = 1;
  const LWGraph* base = nullptr;
  // Vertex w's window is windows[w*k .. w*k+k), a path of base vertex ids.
  std::vector<std::uint32_t> windows;
  std::vector<std::vector<std::uint32_t>> out;
  // Factor words of forbidden patterns, in removal order (for reports).
  std::vector<std::string> removed_patterns;
  std::size_t removed_edges = 0;

  std::size_t vertex_count() const { return out.size(); }
  std::size_t edge_count() const;
  std::uint32_t base_at(std::size_t w, int pos) const {
    return windows[w * std::size_t(k) + std::size_t(pos)];
  }
  std::uint32_t first_base(std::size_t w) const { return windows[w * std::size_t(k)]; }
  std::uint32_t last_base(std::size_t w) const {
    return windows[w * std::size_t(k) + std::size_t(k) - 1];
  }
};

LiftedGraph lift(const LWGraph& g, int k, std::size_t vertex_cap = kDefaultLiftCap);

// Removes every lifted edge whose underlying (k+1)-vertex window contains
// the pattern as a consecutive subpath. The pattern must be a sequence of
// base vertices with at most k edges; if some consecutive pair is not a base
// edge the pattern occurs nowhere and the graph is returned unchanged.
LiftedGraph forbid(const LiftedGraph& gk, const std::vector<SimpleBraid>& pattern);
LiftedGraph forbid_ids(const LiftedGraph& gk, const std::vector<std::uint32_t>& pattern,
                       const std::string& display_name);

}  // namespace garside
