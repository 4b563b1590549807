#pragma once

#include "garside/certify.hpp"
#include "garside/counting.hpp"
#include "garside/lw_graph.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace garside {

// Distance to the identity in the Cayley graph whose generators are all
// nontrivial simple braids (the half twist included) and their inverses:
// sup if inf >= 0, -inf if sup <= 0, and the canonical length otherwise.
long word_length(const NormalForm& x);

// Sphere sizes split by normal-form shape. With P(r) the number of r-factor
// normal sequences (P(0) = 1, P(r) = N(r-1)):
//   shape_i   (inf >= 1):            sum_{k=0}^{l-1} P(k)
//   shape_ii  (inf <= 0 <= sup):     (l+1) * P(l)
//   shape_iii (sup <= -1):           sum_{k=0}^{l-1} P(k)
struct SphereShapeCounts {
  int l = 0;
  mpz_class shape_i;
  mpz_class shape_ii;
  mpz_class shape_iii;
  mpz_class total;
};

SphereShapeCounts sphere_count(const LWGraph& g, int l);

// 1 + sum of sphere totals for radii 1..l.
mpz_class ball_count(const LWGraph& g, int l);

// Thrown when an enumeration or sampling table would exceed its element cap.
struct SizeCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Independent oracle: breadth-first search of the Cayley graph from the
// identity, generators as above, normal forms as canonical keys. Returns the
// sphere sizes for distances 0..lmax. Guarded by a total-element cap.
std::vector<mpz_class> brute_force_sphere(int n, int lmax,
                                          std::size_t max_elements = 2'000'000);

// Deterministic arbitrary-precision randomness (GMP Mersenne twister).
class BigRng {
public:
  explicit BigRng(unsigned long seed);
  // Uniformly random integer in [0, bound); requires bound > 0.
  mpz_class below(const mpz_class& bound);

  BigRng(const BigRng&) = delete;
  BigRng& operator=(const BigRng&) = delete;

private:
  gmp_randclass state_;
};

// Derives statistically independent per-index seeds from one master seed,
// so sampling parallelizes without changing results.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Draws exactly uniform braids with infimum 0 and r factors: the start
// vertex is chosen with probability proportional to its number of path
// completions, each step likewise; no rejection.
class UniformPathSampler {
public:
  UniformPathSampler(const LWGraph& g, int r);
  NormalForm sample(BigRng& rng) const;
  const mpz_class& total() const { return total_; }  // N(r-1)

private:
  const LWGraph* g_;
  int r_;
  // completions_[m][v] = number of paths with m edges starting at v.
  std::vector<std::vector<mpz_class>> completions_;
  mpz_class total_;
};

// Draws exactly uniform rigid braids with infimum 0 and r factors, i.e.
// closed paths of r edges: the base vertex is chosen proportionally to its
// diagonal entry of A^r, each step conditioned on returning to the base.
class UniformRigidSampler {
public:
  UniformRigidSampler(const LWGraph& g, int r);
  NormalForm sample(BigRng& rng) const;
  const mpz_class& total() const { return total_; }  // tr(A^r) = N°(r-1)

private:
  const LWGraph* g_;
  int r_;
  // powers_[t][i][j] = (A^t)[i][j]; t = 0..r.
  std::vector<std::vector<std::vector<mpz_class>>> powers_;
  mpz_class total_;
};

NormalForm sample_uniform_path(const LWGraph& g, int r, BigRng& rng);
NormalForm sample_uniform_rigid(const LWGraph& g, int r, BigRng& rng);

// Outcome tallies of certifying uniformly sampled rigid braids.
struct SampleReport {
  bool ok = false;
  std::string error;
  int n = 0;
  int l = 0;  // canonical length of the sampled braids
  long sample_count = 0;
  unsigned long seed = 0;
  long certified = 0;
  long witness = 0;
  long inconclusive = 0;
  double proportion_certified = 0.0;
  double ci_lo = 0.0;  // 3-sigma binomial interval around the proportion
  double ci_hi = 0.0;
};

// Certifies `samples` uniform rigid braids with r factors. Every sample uses
// its own seed derived from `seed`, so the result is independent of the
// worker count.
SampleReport measure_pa_proportion(const LWGraph& g, int r, long samples,
                                   unsigned long seed, int threads = 1);

// Certified lower bound on the proportion of rigid braids with r factors
// whose factor sequence contains both canonical patterns:
// rigid_pa_lower_count(r-1) / N°(r-1).
mpq_class exact_pa_bound(const LWGraph& g, int r,
                         std::size_t lift_cap = kDefaultLiftCap);

// Sphere-level certified floor at radius l. Only even twist powers are
// counted in the guaranteed column (rigidity of D^{-k} s_1...s_l reduces to
// a plain closed path exactly when k is even); the all-power count assumes
// the same bound for odd k and is reported for context only.
struct SphereFloor {
  int l = 0;
  mpz_class even_k;        // (floor(l/2)+1) * rigid_pa_lower_count(l-1)
  mpz_class all_k;         // (l+1) * rigid_pa_lower_count(l-1)
  mpz_class sphere_total;  // sphere_count(l).total
};

SphereFloor sphere_pa_floor(const LWGraph& g, int l,
                            std::size_t lift_cap = kDefaultLiftCap);

}  // namespace garside
