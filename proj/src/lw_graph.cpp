#include "garside/lw_graph.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

bool LWGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& row = out[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::uint32_t LWGraph::index_of(const SimpleBraid& s) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
  if (it == vertices.end() || !(*it == s))
    throw std::invalid_argument("simple braid is not a graph vertex: " + s.word_str());
  return std::uint32_t(it - vertices.begin());
}

std::vector<std::uint32_t> LWGraph::path_of(
    const std::vector<SimpleBraid>& factors) const {
  std::vector<std::uint32_t> ids;
  ids.reserve(factors.size());
  for (const auto& f : factors) ids.push_back(index_of(f));
  return ids;
}

LWGraph build_graph(int n) {
  if (n < 3 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  LWGraph g;
  g.n = n;
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  do {
    SimpleBraid s{Permutation::from_image(img)};
    if (s.is_identity() || s.is_half_twist()) continue;
    g.vertices.push_back(s);
  } while (std::next_permutation(img.begin(), img.end()));

  std::size_t v = g.vertices.size();
  g.starting.reserve(v);
  g.finishing.reserve(v);
  for (const auto& s : g.vertices) {
    g.starting.push_back(s.starting_set());
    g.finishing.push_back(s.finishing_set());
  }
  g.out.assign(v, {});
  g.in.assign(v, {});
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t w = 0; w < v; ++w) {
      if (g.starting[w].subset_of(g.finishing[u])) {
        g.out[u].push_back(w);
        g.in[w].push_back(u);
        ++g.edge_count;
      }
    }
  }
  return g;
}

namespace {

using BitRows = std::vector<std::vector<std::uint64_t>>;

BitRows rows_of(const LWGraph& g) {
  std::size_t v = g.vertex_count();
  std::size_t words = (v + 63) / 64;
  BitRows rows(v, std::vector<std::uint64_t>(words, 0));
  for (std::uint32_t u = 0; u < v; ++u)
    for (std::uint32_t w : g.out[u]) rows[u][w / 64] |= 1ull << (w % 64);
  return rows;
}

// C = X * A over booleans: row_u(C) = union of A-rows over the bits of X[u].
BitRows bool_product(const BitRows& x, const BitRows& a) {
  std::size_t v = x.size();
  std::size_t words = v ? x[0].size() : 0;
  BitRows c(v, std::vector<std::uint64_t>(words, 0));
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = x[u][w];
      while (bits) {
        std::size_t bit = std::size_t(__builtin_ctzll(bits));
        bits &= bits - 1;
        const auto& row = a[w * 64 + bit];
        for (std::size_t t = 0; t < words; ++t) c[u][t] |= row[t];
      }
    }
  }
  return c;
}

}  // namespace

Length5Certificate check_length5(const LWGraph& g) {
  std::size_t v = g.vertex_count();
  BitRows a = rows_of(g);
  BitRows a2 = bool_product(a, a);
  BitRows a4 = bool_product(a2, a2);
  BitRows a5 = bool_product(a4, a);
  for (std::size_t u = 0; u < v; ++u)
    for (std::size_t w = 0; w < v; ++w)
      if (!((a5[u][w / 64] >> (w % 64)) & 1ull))
        return {false, std::uint32_t(u), std::uint32_t(w)};
  return {true, 0, 0};
}

namespace {

SimpleBraid consecutive_run(int n, int from, int to) {
  SimpleBraid s = SimpleBraid::identity(n);
  if (from <= to)
    for (int i = from; i <= to; ++i) s.append_generator(i);
  else
    for (int i = from; i >= to; --i) s.append_generator(i);
  return s;
}

void require(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("witness_path: ") + what);
}

}  // namespace

WitnessPath witness_path(const LWGraph& g, std::uint32_t s1, std::uint32_t s2) {
  int n = g.n;
  int m = n / 2;
  const SimpleBraid& a = g.vertices.at(s1);
  const SimpleBraid& b = g.vertices.at(s2);

  int i1 = a.finishing_set().lowest();
  int i2 = b.starting_set().complement_in(n).lowest();

  SimpleBraid x1 = consecutive_run(n, i1, m);

  std::vector<int> img(n);
  for (int i = 1; i <= n; ++i) img[i - 1] = (i <= m) ? 2 * i : 2 * (i - m) - 1;
  SimpleBraid x2{Permutation::from_image(img)};

  // x3: inverse of x2's permutation, then reversal of the blocks 1..m and
  // m+1..n (the two block half twists).
  Permutation p2inv = x2.perm().inverse();
  std::vector<int> img3(n);
  for (int i = 1; i <= n; ++i) {
    int x = p2inv(i);
    img3[i - 1] = (x <= m) ? (m + 1 - x) : (m + 1 + n - x);
  }
  SimpleBraid x3{Permutation::from_image(img3)};

  SimpleBraid x4 = consecutive_run(n, i2, (n + 1) / 2).left_complement();

  GenSet odds;
  for (int i = 1; i < n; i += 2) odds.add(i);
  GenSet full = GenSet::full(n);
  GenSet just_i1, just_m;
  just_i1.add(i1);
  just_m.add(m);
  GenSet no_m = full;
  no_m.remove(m);
  GenSet no_i2 = full;
  no_i2.remove(i2);

  require(x1.starting_set() == just_i1, "starting set of x1 is not {i1}");
  require(x1.finishing_set() == just_m, "finishing set of x1 is not {m}");
  require(x2.starting_set() == just_m, "starting set of x2 is not {m}");
  require(x2.finishing_set() == odds, "finishing set of x2 is not the odd indices");
  require(x3.starting_set() == odds, "starting set of x3 is not the odd indices");
  require(x3.finishing_set() == no_m, "finishing set of x3 is not the complement of m");
  require(x4.starting_set() == no_m, "starting set of x4 is not the complement of m");
  require(x4.finishing_set() == no_i2, "finishing set of x4 is not the complement of i2");

  for (const auto* s : {&x1, &x2, &x3, &x4})
    require(!s->is_identity() && !s->is_half_twist(), "witness braid is not a vertex");

  require(is_left_weighted(a, x1), "missing edge s1 -> x1");
  require(is_left_weighted(x1, x2), "missing edge x1 -> x2");
  require(is_left_weighted(x2, x3), "missing edge x2 -> x3");
  require(is_left_weighted(x3, x4), "missing edge x3 -> x4");
  require(is_left_weighted(x4, b), "missing edge x4 -> s2");

  return {x1, x2, x3, x4};
}

}  // namespace garside
