#include "garside/lift.hpp"

#include <algorithm>
#include <unordered_map>

namespace garside {

std::size_t LiftedGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& row : out) e += row.size();
  return e;
}

LiftedGraph lift(const LWGraph& g, int k, std::size_t vertex_cap) {
  if (k < 1) throw std::invalid_argument("lift order must be at least 1");
  LiftedGraph lg;
  lg.k = k;
  lg.base = &g;
  std::size_t v = g.vertex_count();

  if (k == 1) {
    lg.windows.resize(v);
    for (std::size_t u = 0; u < v; ++u) lg.windows[u] = std::uint32_t(u);
    lg.out = g.out;
    return lg;
  }

  // Enumerate k-vertex paths depth-first in lexicographic order (out-lists
  // are sorted, so window ids end up lexicographically sorted too).
  std::vector<std::uint32_t> stack;
  stack.reserve(k);
  auto emit = [&]() {
    if (lg.windows.size() / k >= vertex_cap)
      throw LiftCapExceeded("lift vertex cap exceeded (k=" + std::to_string(k) +
                            ", cap=" + std::to_string(vertex_cap) + ")");
    lg.windows.insert(lg.windows.end(), stack.begin(), stack.end());
  };
  auto dfs = [&](auto&& self, std::uint32_t u, int depth) -> void {
    stack.push_back(u);
    if (depth == k) {
      emit();
    } else {
      for (std::uint32_t w : g.out[u]) self(self, w, depth + 1);
    }
    stack.pop_back();
  };
  for (std::uint32_t u = 0; u < v; ++u) dfs(dfs, u, 1);

  std::size_t count = lg.windows.size() / k;

  // Window -> id lookup. Base ids fit in ceil(log2 v) bits; k of them must
  // fit a 64-bit key.
  int bits = 1;
  while ((std::size_t(1) << bits) < v) ++bits;
  if (bits * k > 64)
    throw LiftCapExceeded("lift window does not fit a 64-bit key");
  auto key_of = [&](const std::uint32_t* w) {
    std::uint64_t key = 0;
    for (int i = 0; i < k; ++i) key = (key << bits) | std::uint64_t(w[i]);
    return key;
  };
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(count * 2);
  for (std::size_t w = 0; w < count; ++w)
    index.emplace(key_of(&lg.windows[w * k]), std::uint32_t(w));

  lg.out.assign(count, {});
  std::vector<std::uint32_t> shifted(static_cast<std::size_t>(k));
  for (std::size_t w = 0; w < count; ++w) {
    const std::uint32_t* win = &lg.windows[w * k];
    for (int i = 1; i < k; ++i) shifted[i - 1] = win[i];
    for (std::uint32_t t : g.out[win[k - 1]]) {
      shifted[k - 1] = t;
      auto it = index.find(key_of(shifted.data()));
      if (it != index.end()) lg.out[w].push_back(it->second);
    }
  }
  return lg;
}

LiftedGraph forbid_ids(const LiftedGraph& gk, const std::vector<std::uint32_t>& pattern,
                       const std::string& display_name) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  const LWGraph& g = *gk.base;
  for (std::uint32_t p : pattern)
    if (p >= g.vertex_count()) throw std::invalid_argument("pattern vertex out of range");
  int j = int(pattern.size()) - 1;  // edge count
  if (j > gk.k)
    throw std::invalid_argument("pattern has more edges than the lift order");

  LiftedGraph out = gk;
  out.removed_patterns.push_back(display_name);

  int k = gk.k;
  std::vector<std::uint32_t> window(std::size_t(k) + 1);
  for (std::size_t w = 0; w < gk.vertex_count(); ++w) {
    for (int i = 0; i < k; ++i) window[i] = gk.base_at(w, i);
    auto& row = out.out[w];
    std::size_t kept = 0;
    for (std::uint32_t v : row) {
      window[k] = gk.last_base(v);
      bool hit = false;
      for (int start = 0; start + j <= k && !hit; ++start) {
        bool match = true;
        for (int i = 0; i <= j; ++i)
          if (window[start + i] != pattern[i]) {
            match = false;
            break;
          }
        hit = match;
      }
      if (!hit) row[kept++] = v;
    }
    out.removed_edges += row.size() - kept;
    row.resize(kept);
  }
  return out;
}

LiftedGraph forbid(const LiftedGraph& gk, const std::vector<SimpleBraid>& pattern) {
  std::vector<std::uint32_t> ids = gk.base->path_of(pattern);
  std::string name;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) name += " . ";
    name += pattern[i].word_str();
  }
  return forbid_ids(gk, ids, name);
}

}  // namespace garside
