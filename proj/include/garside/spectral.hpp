#pragma once

#include "garside/counting.hpp"

namespace garside {

struct SpectrumReport {
  double gamma = 0.0;
  std::string method;     // "power-iteration" or "count-ratio"
  double residual = 0.0;  // final vector change (PI) or last ratio delta
  long l_used = 0;        // iterations performed, or the l of the last ratio
  bool converged = false;
};

// Dominant eigenvalue of the adjacency matrix by simultaneous left/right
// power iteration on the shifted matrix A + I (guards against periodicity),
// seeded with the all-ones vector; deterministic. The eigenvalue estimate is
// the two-sided quotient y^T (A+I) x / y^T x; residual is its final relative
// change, and convergence requires the change to stay below tol for three
// consecutive iterations.
SpectrumReport spectral_radius(const Adjacency& out, double tol = 1e-10,
                               long max_iter = 100000);
SpectrumReport spectral_radius(const LWGraph& g, double tol = 1e-10,
                               long max_iter = 100000);
SpectrumReport spectral_radius(const LiftedGraph& gk, double tol = 1e-10,
                               long max_iter = 100000);

// Spectral radius estimated from an exact count table as the last ratio
// counts[l+1]/counts[l]; residual is the change from the previous ratio.
SpectrumReport ratio_spectrum(const std::vector<mpz_class>& counts);

}  // namespace garside
