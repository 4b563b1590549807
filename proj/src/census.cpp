#include "garside/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace garside {

long word_length(const NormalForm& x) {
  if (x.inf() >= 0) return x.sup();
  if (x.sup() <= 0) return -x.inf();
  return x.canonical_length();
}

namespace {

// P(r) for r = 0..rmax: P(0) = 1, P(r) = N(r-1).
std::vector<mpz_class> factor_sequence_counts(const LWGraph& g, int rmax) {
  std::vector<mpz_class> p(std::size_t(rmax) + 1);
  p[0] = 1;
  if (rmax >= 1) {
    const auto paths = path_count_table(g.out, rmax - 1);
    for (int r = 1; r <= rmax; ++r) p[std::size_t(r)] = paths[std::size_t(r) - 1];
  }
  return p;
}

SphereShapeCounts sphere_from_table(const std::vector<mpz_class>& p, int l) {
  SphereShapeCounts s;
  s.l = l;
  for (int k = 0; k < l; ++k) s.shape_i += p[std::size_t(k)];
  s.shape_ii = mpz_class(l + 1) * p[std::size_t(l)];
  s.shape_iii = s.shape_i;
  s.total = s.shape_i + s.shape_ii + s.shape_iii;
  return s;
}

}  // namespace

SphereShapeCounts sphere_count(const LWGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("sphere_count: negative radius");
  return sphere_from_table(factor_sequence_counts(g, l), l);
}

mpz_class ball_count(const LWGraph& g, int l) {
  if (l < 0) throw std::invalid_argument("ball_count: negative radius");
  const auto p = factor_sequence_counts(g, l);
  mpz_class total = 1;
  for (int k = 1; k <= l; ++k) total += sphere_from_table(p, k).total;
  return total;
}

std::vector<mpz_class> brute_force_sphere(int n, int lmax, std::size_t max_elements) {
  if (lmax < 0) throw std::invalid_argument("brute_force_sphere: negative radius");
  const LWGraph g = build_graph(n);

  std::vector<NormalForm> generators;
  generators.reserve(2 * (g.vertex_count() + 1));
  for (const auto& s : g.vertices)
    generators.push_back(NormalForm::from_parts(n, 0, {s}));
  generators.push_back(NormalForm::from_parts(n, 1, {}));  // the half twist
  const std::size_t positive = generators.size();
  for (std::size_t i = 0; i < positive; ++i)
    generators.push_back(generators[i].inverse());

  std::vector<mpz_class> sizes;
  sizes.reserve(std::size_t(lmax) + 1);
  std::unordered_set<std::string> seen;
  std::vector<NormalForm> frontier{NormalForm::identity(n)};
  seen.insert(frontier.front().str());
  sizes.emplace_back(1);

  for (int l = 1; l <= lmax; ++l) {
    std::vector<NormalForm> next;
    for (const auto& x : frontier) {
      for (const auto& gen : generators) {
        NormalForm y = multiply(x, gen);
        if (seen.insert(y.str()).second) next.push_back(std::move(y));
      }
      if (seen.size() > max_elements)
        throw SizeCapExceeded("brute_force_sphere: element cap exceeded");
    }
    sizes.emplace_back(next.size());
    frontier = std::move(next);
  }
  return sizes;
}

BigRng::BigRng(unsigned long seed) : state_(gmp_randinit_mt) { state_.seed(seed); }

mpz_class BigRng::below(const mpz_class& bound) {
  if (bound <= 0) throw std::invalid_argument("BigRng::below: bound must be positive");
  return state_.get_z_range(bound);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t x = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

UniformPathSampler::UniformPathSampler(const LWGraph& g, int r) : g_(&g), r_(r) {
  if (r < 1) throw std::invalid_argument("UniformPathSampler: need at least one factor");
  const std::size_t v = g.vertex_count();
  completions_.assign(std::size_t(r), std::vector<mpz_class>(v));
  for (std::size_t u = 0; u < v; ++u) completions_[0][u] = 1;
  for (int m = 1; m < r; ++m)
    for (std::size_t u = 0; u < v; ++u) {
      mpz_class acc;
      for (auto w : g.out[u]) acc += completions_[std::size_t(m) - 1][w];
      completions_[std::size_t(m)][u] = std::move(acc);
    }
  for (std::size_t u = 0; u < v; ++u) total_ += completions_[std::size_t(r) - 1][u];
}

NormalForm UniformPathSampler::sample(BigRng& rng) const {
  mpz_class t = rng.below(total_);
  std::uint32_t cur = 0;
  while (t >= completions_[std::size_t(r_) - 1][cur]) {
    t -= completions_[std::size_t(r_) - 1][cur];
    ++cur;
  }
  std::vector<SimpleBraid> factors{g_->vertices[cur]};
  factors.reserve(std::size_t(r_));
  for (int step = 1; step < r_; ++step) {
    const std::size_t rem = std::size_t(r_ - 1 - step);  // edges left after this move
    mpz_class u = rng.below(completions_[rem + 1][cur]);
    for (auto w : g_->out[cur]) {
      if (u < completions_[rem][w]) {
        cur = w;
        break;
      }
      u -= completions_[rem][w];
    }
    factors.push_back(g_->vertices[cur]);
  }
  return NormalForm::from_parts(g_->n, 0, std::move(factors));
}

UniformRigidSampler::UniformRigidSampler(const LWGraph& g, int r) : g_(&g), r_(r) {
  if (r < 1) throw std::invalid_argument("UniformRigidSampler: need at least one factor");
  const std::size_t v = g.vertex_count();
  powers_.assign(std::size_t(r) + 1,
                 std::vector<std::vector<mpz_class>>(v, std::vector<mpz_class>(v)));
  for (std::size_t i = 0; i < v; ++i) powers_[0][i][i] = 1;
  for (int t = 1; t <= r; ++t)
    for (std::size_t i = 0; i < v; ++i) {
      auto& row = powers_[std::size_t(t)][i];
      for (auto k : g.out[i]) {
        const auto& prev = powers_[std::size_t(t) - 1][k];
        for (std::size_t j = 0; j < v; ++j) row[j] += prev[j];
      }
    }
  for (std::size_t i = 0; i < v; ++i) total_ += powers_[std::size_t(r)][i][i];
}

NormalForm UniformRigidSampler::sample(BigRng& rng) const {
  if (total_ == 0)
    throw std::invalid_argument("UniformRigidSampler: no rigid braids with this factor count");
  mpz_class t = rng.below(total_);
  std::uint32_t base = 0;
  while (t >= powers_[std::size_t(r_)][base][base]) {
    t -= powers_[std::size_t(r_)][base][base];
    ++base;
  }
  std::vector<SimpleBraid> factors{g_->vertices[base]};
  factors.reserve(std::size_t(r_));
  std::uint32_t cur = base;
  for (int step = 1; step < r_; ++step) {
    const std::size_t rem = std::size_t(r_ - step);  // edges left, ending at base
    mpz_class u = rng.below(powers_[rem + 1][cur][base]);
    for (auto w : g_->out[cur]) {
      if (u < powers_[rem][w][base]) {
        cur = w;
        break;
      }
      u -= powers_[rem][w][base];
    }
    factors.push_back(g_->vertices[cur]);
  }
  return NormalForm::from_parts(g_->n, 0, std::move(factors));
}

NormalForm sample_uniform_path(const LWGraph& g, int r, BigRng& rng) {
  return UniformPathSampler(g, r).sample(rng);
}

NormalForm sample_uniform_rigid(const LWGraph& g, int r, BigRng& rng) {
  return UniformRigidSampler(g, r).sample(rng);
}

SampleReport measure_pa_proportion(const LWGraph& g, int r, long samples,
                                   unsigned long seed, int threads) {
  SampleReport rep;
  rep.n = g.n;
  rep.l = r;
  rep.sample_count = samples;
  rep.seed = seed;
  if (samples <= 0) {
    rep.error = "sample count must be positive";
    return rep;
  }
  if (r < 1) {
    rep.error = "factor count must be at least 1";
    return rep;
  }
  const UniformRigidSampler sampler(g, r);
  if (sampler.total() == 0) {
    rep.error = "no rigid braids with this factor count";
    return rep;
  }

  const int workers =
      int(std::max<long>(1, std::min<long>(threads, samples)));
  std::vector<std::array<long, 3>> tallies(std::size_t(workers), {0, 0, 0});
  auto run = [&](int w) {
    auto& tally = tallies[std::size_t(w)];
    for (long i = w; i < samples; i += workers) {
      BigRng rng(static_cast<unsigned long>(derive_seed(seed, std::uint64_t(i))));
      const NormalForm x = sampler.sample(rng);
      switch (certify(x).kind) {
        case VerdictKind::CertifiedPseudoAnosov: ++tally[0]; break;
        case VerdictKind::ReducibilityWitness: ++tally[1]; break;
        case VerdictKind::Inconclusive: ++tally[2]; break;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& tally : tallies) {
    rep.certified += tally[0];
    rep.witness += tally[1];
    rep.inconclusive += tally[2];
  }
  const double p = double(rep.certified) / double(samples);
  const double sigma = std::sqrt(p * (1.0 - p) / double(samples));
  rep.proportion_certified = p;
  rep.ci_lo = std::max(0.0, p - 3.0 * sigma);
  rep.ci_hi = std::min(1.0, p + 3.0 * sigma);
  rep.ok = true;
  return rep;
}

mpq_class exact_pa_bound(const LWGraph& g, int r, std::size_t lift_cap) {
  if (r < 1) throw std::invalid_argument("exact_pa_bound: need at least one factor");
  const mpz_class total = count_loops(g, r - 1);
  if (total == 0)
    throw std::invalid_argument("exact_pa_bound: no rigid braids with this factor count");
  mpq_class q(rigid_pa_lower_count(g, r - 1, lift_cap), total);
  q.canonicalize();
  return q;
}

SphereFloor sphere_pa_floor(const LWGraph& g, int l, std::size_t lift_cap) {
  if (l < 1) throw std::invalid_argument("sphere_pa_floor: radius must be positive");
  SphereFloor f;
  f.l = l;
  const mpz_class per_slot = rigid_pa_lower_count(g, l - 1, lift_cap);
  f.even_k = mpz_class(l / 2 + 1) * per_slot;
  f.all_k = mpz_class(l + 1) * per_slot;
  f.sphere_total = sphere_count(g, l).total;
  return f;
}

}  // namespace garside
