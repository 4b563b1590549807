#pragma once

#include "garside/lift.hpp"

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace garside {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

// N(l) for l = 0..lmax: number of paths with l edges, computed by repeated
// sparse matrix-vector products over big integers (never dense powers).
std::vector<mpz_class> path_count_table(const Adjacency& out, int lmax);

// tr(A^t) for t = 0..tmax: based loop counts, one sparse DP per vertex.
std::vector<mpz_class> trace_table(const Adjacency& out, int tmax);

// N(l) = |A^l|_1 and the loop count N°(l) = tr(A^{l+1}): loops of length
// l+1 with a marked base vertex, equivalently paths of l edges whose last
// vertex has an edge back to the first. Rigid braids with infimum 0 and r
// factors correspond exactly to the loops counted by N°(r-1).
mpz_class count_paths(const LWGraph& g, int l);
mpz_class count_loops(const LWGraph& g, int l);

// Linear (non-wrapping) avoidance loop counts on a forbidden lift: entry m
// is the number of lift paths with m edges whose underlying base path closes
// into a loop (base edge from last to first vertex), i.e. N°_w(m + k - 1).
std::vector<mpz_class> closed_path_table(const LiftedGraph& gk, int mmax);

struct NamedPattern {
  std::string name;                  // stable identifier, e.g. "xA"
  std::vector<SimpleBraid> factors;  // a path in the left-weighting graph
};

struct CountTable {
  int n = 0;
  int lmax = 0;
  bool cyclic_loops = false;  // loop-avoidance reading used for avoid_loops
  std::vector<std::string> pattern_names;
  int pattern_k = 0;  // largest pattern edge count (lift order used)
  std::vector<mpz_class> paths;        // N(l), l = 0..lmax
  std::vector<mpz_class> loops;        // N°(l)
  std::vector<mpz_class> avoid_paths;  // N_w(l); empty when no patterns
  std::vector<mpz_class> avoid_loops;  // N°_w(l); empty when no patterns
};

// Exact count table. Avoidance columns cover all l: rows shorter than a
// pattern are computed through correspondingly smaller lifts. The default
// loop reading is linear (patterns do not wrap across the base point);
// cyclic = true switches to the wrap-around reading.
CountTable build_count_table(const LWGraph& g, const std::vector<NamedPattern>& patterns,
                             int lmax, bool cyclic = false,
                             std::size_t lift_cap = kDefaultLiftCap);

// (N_w(l), N°_w(l)) for the given pattern set.
std::pair<mpz_class, mpz_class> count_avoiding(const LWGraph& g,
                                               const std::vector<NamedPattern>& patterns,
                                               int l, bool cyclic = false,
                                               std::size_t lift_cap = kDefaultLiftCap);

// Certified lower bound on the number of rigid certified-pseudo-Anosov
// braids with infimum 0 and l+1 factors:
// max(0, N°(l) - N°_xa(l) - N°_xb(l)).
mpz_class rigid_pa_lower_count(const LWGraph& g, int l,
                               std::size_t lift_cap = kDefaultLiftCap);

// The two canonical patterns as NamedPatterns over g's strand count.
NamedPattern named_pattern_xa(int n);
NamedPattern named_pattern_xb(int n);

}  // namespace garside
