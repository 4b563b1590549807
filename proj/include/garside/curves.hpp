#pragma once

#include "garside/braid.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace garside {

// A round curve on the n-punctured disk: the isotopy class of a circle
// enclosing exactly the punctures lo..hi (at least two, never all).
struct RoundCurve {
  int n = 0;
  int lo = 0;
  int hi = 0;

  static RoundCurve make(int n, int lo, int hi);

  std::string str() const;

  friend bool operator==(const RoundCurve& a, const RoundCurve& b) {
    return a.n == b.n && a.lo == b.lo && a.hi == b.hi;
  }
  friend bool operator!=(const RoundCurve& a, const RoundCurve& b) {
    return !(a == b);
  }
};

// All round curves of B_n in lexicographic (lo, hi) order.
std::vector<RoundCurve> all_round_curves(int n);

// Image of a round curve under one simple braid. The image is round iff the
// permutation maps the enclosed interval onto an interval, in which case
// that interval is the answer; otherwise nullopt ("not round").
std::optional<RoundCurve> image_round(const SimpleBraid& s, const RoundCurve& c);

// Image of a round curve under a whole braid, applied as the twist power
// (each twist reverses the interval) followed by the factors left to right.
// The image of a round curve is round iff every intermediate image is round,
// so the pipeline stops with nullopt at the first non-interval image.
std::optional<RoundCurve> transport_round(const NormalForm& x, const RoundCurve& c);

struct PreservedCurve {
  int k = 0;
  RoundCurve curve;

  friend bool operator==(const PreservedCurve& a, const PreservedCurve& b) {
    return a.k == b.k && a.curve == b.curve;
  }
};

// Smallest k in 1..k_max (default n) such that x^k maps some round curve to
// itself, together with the lexicographically first such curve.
std::optional<PreservedCurve> preserved_round_curve_power(const NormalForm& x,
                                                          int k_max = 0);

// Which factors of a positive factor sequence cross each strand pair.
// Strand labels are starting positions at the first factor. Pair (a,b)
// crosses in factor j iff that factor swaps the relative order of the two
// strands' current positions.
class CrossingProfile {
public:
  CrossingProfile(int n, const std::vector<SimpleBraid>& factors);

  int n() const { return n_; }
  int factor_count() const { return l_; }

  // 1-based factor indices in which the pair (a, b) crosses.
  const std::vector<int>& crossings(int a, int b) const;

  std::vector<std::pair<int, int>> never_crossing_pairs() const;
  std::vector<std::pair<int, int>> always_crossing_pairs() const;

private:
  int n_ = 0;
  int l_ = 0;
  std::vector<std::vector<int>> cross_;

  int pair_index(int a, int b) const;
};

CrossingProfile crossing_profile(const std::vector<SimpleBraid>& factors);

inline std::vector<std::pair<int, int>> never_crossing_pairs(const CrossingProfile& p) {
  return p.never_crossing_pairs();
}
inline std::vector<std::pair<int, int>> always_crossing_pairs(const CrossingProfile& p) {
  return p.always_crossing_pairs();
}

}  // namespace garside
