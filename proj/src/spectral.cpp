#include "garside/spectral.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace garside {

// Dominant eigenvalue by simultaneous left/right power iteration on the
// shifted matrix B = A + I (the shift guards against periodicity). The
// estimate is the two-sided quotient y^T B x / y^T x, whose error contracts
// like (|lambda_2|/lambda_1)^2 per step -- much faster than the iterates
// themselves -- and which is immune to the scale of individual vector
// components, so the stopping test stays meaningful on graphs of any size.
SpectrumReport spectral_radius(const Adjacency& out, double tol, long max_iter) {
  SpectrumReport rep;
  rep.method = "power-iteration";
  const std::size_t v = out.size();
  if (v == 0) {
    rep.converged = true;
    return rep;
  }

  // CSR of the reverse graph, for the left iterate.
  std::size_t edges = 0;
  for (const auto& nb : out) edges += nb.size();
  std::vector<std::size_t> roff(v + 1, 0);
  for (const auto& nb : out)
    for (std::uint32_t w : nb) ++roff[w + 1];
  std::partial_sum(roff.begin(), roff.end(), roff.begin());
  std::vector<std::uint32_t> radj(edges);
  {
    std::vector<std::size_t> cur(roff.begin(), roff.end() - 1);
    for (std::size_t u = 0; u < v; ++u)
      for (std::uint32_t w : out[u]) radj[cur[w]++] = std::uint32_t(u);
  }

  std::vector<double> x(v, 1.0 / double(v)), y(v, 1.0 / double(v));
  std::vector<double> bx(v), by(v);
  double lambda = 1.0;
  double prev = std::numeric_limits<double>::quiet_NaN();
  int stable = 0;
  for (long it = 1; it <= max_iter; ++it) {
    long double ybx = 0.0L, yx = 0.0L, sx = 0.0L, sy = 0.0L;
    for (std::size_t u = 0; u < v; ++u) {
      double acc = x[u];
      for (std::uint32_t w : out[u]) acc += x[w];
      bx[u] = acc;
      sx += acc;
      ybx += (long double)(y[u]) * acc;
      yx += (long double)(y[u]) * x[u];
    }
    for (std::size_t w = 0; w < v; ++w) {
      double acc = y[w];
      for (std::size_t e = roff[w]; e < roff[w + 1]; ++e) acc += y[radj[e]];
      by[w] = acc;
      sy += acc;
    }
    lambda = double(ybx / yx);
    for (std::size_t u = 0; u < v; ++u) {
      x[u] = bx[u] / double(sx);
      y[u] = by[u] / double(sy);
    }
    rep.l_used = it;
    rep.residual = std::fabs(lambda - prev) / std::max(1.0, std::fabs(lambda));
    prev = lambda;
    if (it > 1 && rep.residual < tol) {
      if (++stable >= 3) {
        rep.converged = true;
        break;
      }
    } else {
      stable = 0;
    }
  }
  rep.gamma = lambda - 1.0;
  if (rep.gamma < 0.0 && rep.gamma > -1e-12) rep.gamma = 0.0;
  return rep;
}

SpectrumReport spectral_radius(const LWGraph& g, double tol, long max_iter) {
  return spectral_radius(g.out, tol, max_iter);
}

SpectrumReport spectral_radius(const LiftedGraph& gk, double tol, long max_iter) {
  return spectral_radius(gk.out, tol, max_iter);
}

SpectrumReport ratio_spectrum(const std::vector<mpz_class>& counts) {
  SpectrumReport rep;
  rep.method = "count-ratio";
  if (counts.size() < 2 || counts[counts.size() - 2] == 0) return rep;
  auto ratio_at = [&](std::size_t i) {
    mpq_class q(counts[i + 1], counts[i]);
    q.canonicalize();
    return q.get_d();
  };
  rep.gamma = ratio_at(counts.size() - 2);
  rep.l_used = long(counts.size()) - 2;
  if (counts.size() >= 3 && counts[counts.size() - 3] != 0) {
    rep.residual = std::fabs(rep.gamma - ratio_at(counts.size() - 3));
    rep.converged = true;
  }
  return rep;
}

}  // namespace garside
