#include "garside/counting.hpp"

#include "garside/braid.hpp"

#include <algorithm>

namespace garside {

namespace {

// y[u] = sum of x[v] over out-neighbors v of u.
void matvec(const Adjacency& out, const std::vector<mpz_class>& x,
            std::vector<mpz_class>& y) {
  std::size_t v = out.size();
  for (std::size_t u = 0; u < v; ++u) {
    mpz_class& acc = y[u];
    acc = 0;
    for (std::uint32_t w : out[u]) acc += x[w];
  }
}

mpz_class vec_sum(const std::vector<mpz_class>& x) {
  mpz_class s = 0;
  for (const auto& e : x) s += e;
  return s;
}

}  // namespace

std::vector<mpz_class> path_count_table(const Adjacency& out, int lmax) {
  if (lmax < 0) throw std::invalid_argument("negative path length");
  std::size_t v = out.size();
  std::vector<mpz_class> table;
  table.reserve(lmax + 1);
  std::vector<mpz_class> cur(v, 1), next(v);
  table.push_back(v);
  for (int l = 1; l <= lmax; ++l) {
    matvec(out, cur, next);
    cur.swap(next);
    table.push_back(vec_sum(cur));
  }
  return table;
}

std::vector<mpz_class> trace_table(const Adjacency& out, int tmax) {
  if (tmax < 0) throw std::invalid_argument("negative power");
  std::size_t v = out.size();
  std::vector<mpz_class> table(tmax + 1, 0);
  table[0] = v;
  std::vector<mpz_class> cur(v), next(v);
  for (std::size_t s = 0; s < v; ++s) {
    // cur[w] = number of paths w -> s with t edges.
    std::fill(cur.begin(), cur.end(), mpz_class(0));
    cur[s] = 1;
    for (int t = 1; t <= tmax; ++t) {
      matvec(out, cur, next);
      cur.swap(next);
      table[t] += cur[s];
    }
  }
  return table;
}

mpz_class count_paths(const LWGraph& g, int l) {
  return path_count_table(g.out, l).back();
}

mpz_class count_loops(const LWGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("negative loop length");
  return trace_table(g.out, l + 1).back();
}

std::vector<mpz_class> closed_path_table(const LiftedGraph& gk, int mmax) {
  if (mmax < 0) throw std::invalid_argument("negative path length");
  const LWGraph& g = *gk.base;
  std::size_t v = gk.vertex_count();
  std::vector<mpz_class> table(mmax + 1, 0);
  std::vector<mpz_class> cur(v), next(v);
  std::vector<char> eligible(v);
  // One DP per base vertex b: count lift paths ending on last-vertex b,
  // closable by the base wrap edge b -> first vertex of the path.
  for (std::uint32_t b = 0; b < g.vertex_count(); ++b) {
    for (std::size_t w = 0; w < v; ++w) {
      cur[w] = (gk.last_base(w) == b) ? 1 : 0;
      eligible[w] = g.has_edge(b, gk.first_base(w)) ? 1 : 0;
    }
    for (std::size_t w = 0; w < v; ++w)
      if (eligible[w] && cur[w] != 0) table[0] += cur[w];
    for (int m = 1; m <= mmax; ++m) {
      matvec(gk.out, cur, next);
      cur.swap(next);
      mpz_class& acc = table[m];
      for (std::size_t w = 0; w < v; ++w)
        if (eligible[w] && cur[w] != 0) acc += cur[w];
    }
  }
  return table;
}

NamedPattern named_pattern_xa(int n) { return {"xA", pattern_xa(n).factors()}; }
NamedPattern named_pattern_xb(int n) { return {"xB", pattern_xb(n).factors()}; }

namespace {

struct LiftPlan {
  int k = 0;
  LiftedGraph forbidden;
};

LiftPlan make_forbidden_lift(const LWGraph& g, const std::vector<NamedPattern>& patterns,
                             std::size_t lift_cap) {
  LiftPlan plan;
  for (const auto& p : patterns) {
    if (p.factors.size() < 2)
      throw std::invalid_argument("pattern needs at least two factors");
    plan.k = std::max(plan.k, int(p.factors.size()) - 1);
  }
  if (plan.k < 1) plan.k = 1;
  plan.forbidden = lift(g, plan.k, lift_cap);
  for (const auto& p : patterns)
    plan.forbidden = forbid_ids(plan.forbidden, g.path_of(p.factors), p.name);
  return plan;
}

}  // namespace

CountTable build_count_table(const LWGraph& g, const std::vector<NamedPattern>& patterns,
                             int lmax, bool cyclic, std::size_t lift_cap) {
  if (lmax < 0) throw std::invalid_argument("negative length bound");
  CountTable t;
  t.n = g.n;
  t.lmax = lmax;
  t.cyclic_loops = cyclic;
  for (const auto& p : patterns) t.pattern_names.push_back(p.name);

  t.paths = path_count_table(g.out, lmax);
  t.loops = trace_table(g.out, lmax + 1);
  t.loops.erase(t.loops.begin());  // N°(l) = tr(A^{l+1})

  if (patterns.empty()) return t;

  LiftPlan plan = make_forbidden_lift(g, patterns, lift_cap);
  int k = plan.k;
  t.pattern_k = k;
  t.avoid_paths.assign(lmax + 1, 0);
  t.avoid_loops.assign(lmax + 1, 0);

  // The lift detects occurrences only once the path carries at least one
  // lifted edge, i.e. for l >= k; shorter rows are handled below.
  if (lmax >= k) {
    int mmax = lmax - (k - 1);
    std::vector<mpz_class> lifted_paths = path_count_table(plan.forbidden.out, mmax);
    for (int l = k; l <= lmax; ++l) t.avoid_paths[l] = lifted_paths[l - (k - 1)];
    if (!cyclic) {
      std::vector<mpz_class> closed = closed_path_table(plan.forbidden, mmax);
      for (int l = k; l <= lmax; ++l) t.avoid_loops[l] = closed[l - (k - 1)];
    }
  }
  if (cyclic) {
    // Lifted loops of length l+1 read their windows around the wrap, so this
    // is exact for every l, including loops shorter than the pattern.
    std::vector<mpz_class> lifted_loops = trace_table(plan.forbidden.out, lmax + 1);
    for (int l = 0; l <= lmax; ++l) t.avoid_loops[l] = lifted_loops[l + 1];
  }

  // Rows l <= k-1: only the patterns that fit within l edges matter;
  // recurse with that smaller pattern set (base counts when none fit).
  int prefix_max = std::min(lmax, k - 1);
  if (prefix_max >= 0) {
    std::vector<NamedPattern> shorter;
    for (const auto& p : patterns)
      if (int(p.factors.size()) - 1 <= prefix_max) shorter.push_back(p);
    CountTable small = build_count_table(g, shorter, prefix_max, false, lift_cap);
    for (int l = 0; l <= prefix_max; ++l) {
      t.avoid_paths[l] = small.avoid_paths.empty() ? small.paths[l] : small.avoid_paths[l];
      if (!cyclic)
        t.avoid_loops[l] =
            small.avoid_loops.empty() ? small.loops[l] : small.avoid_loops[l];
    }
  }
  return t;
}

std::pair<mpz_class, mpz_class> count_avoiding(const LWGraph& g,
                                               const std::vector<NamedPattern>& patterns,
                                               int l, bool cyclic,
                                               std::size_t lift_cap) {
  if (l < 0) throw std::invalid_argument("negative length");
  CountTable t = build_count_table(g, patterns, l, cyclic, lift_cap);
  if (patterns.empty()) return {t.paths[l], t.loops[l]};
  return {t.avoid_paths[l], t.avoid_loops[l]};
}

mpz_class rigid_pa_lower_count(const LWGraph& g, int l, std::size_t lift_cap) {
  if (l < 0) throw std::invalid_argument("negative length");
  mpz_class total = count_loops(g, l);
  mpz_class avoid_a =
      count_avoiding(g, {named_pattern_xa(g.n)}, l, false, lift_cap).second;
  mpz_class avoid_b =
      count_avoiding(g, {named_pattern_xb(g.n)}, l, false, lift_cap).second;
  mpz_class bound = total - avoid_a - avoid_b;
  if (bound < 0) bound = 0;
  return bound;
}

}  // namespace garside
