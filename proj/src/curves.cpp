#include "garside/curves.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

RoundCurve RoundCurve::make(int n, int lo, int hi) {
  if (n < 3 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  if (!(1 <= lo && lo < hi && hi <= n))
    throw std::invalid_argument("round curve bounds out of order");
  if (lo == 1 && hi == n)
    throw std::invalid_argument("round curve may not enclose all punctures");
  return RoundCurve{n, lo, hi};
}

std::string RoundCurve::str() const {
  std::ostringstream os;
  os << '[' << lo << ',' << hi << ']';
  return os.str();
}

std::vector<RoundCurve> all_round_curves(int n) {
  std::vector<RoundCurve> out;
  for (int lo = 1; lo < n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi) {
      if (lo == 1 && hi == n) continue;
      out.push_back(RoundCurve{n, lo, hi});
    }
  return out;
}

std::optional<RoundCurve> image_round(const SimpleBraid& s, const RoundCurve& c) {
  if (s.n() != c.n) throw std::invalid_argument("strand count mismatch");
  int mn = c.n + 1, mx = 0;
  for (int x = c.lo; x <= c.hi; ++x) {
    int y = s.perm()(x);
    mn = std::min(mn, y);
    mx = std::max(mx, y);
  }
  if (mx - mn != c.hi - c.lo) return std::nullopt;
  return RoundCurve{c.n, mn, mx};
}

std::optional<RoundCurve> transport_round(const NormalForm& x, const RoundCurve& c) {
  if (x.n() != c.n) throw std::invalid_argument("strand count mismatch");
  RoundCurve cur = c;
  if (x.inf() % 2 != 0) cur = RoundCurve{c.n, c.n + 1 - c.hi, c.n + 1 - c.lo};
  for (const auto& f : x.factors()) {
    auto next = image_round(f, cur);
    if (!next) return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<PreservedCurve> preserved_round_curve_power(const NormalForm& x,
                                                          int k_max) {
  if (k_max <= 0) k_max = x.n();
  auto curves = all_round_curves(x.n());
  NormalForm y = x;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) y = multiply(y, x);
    for (const auto& c : curves) {
      auto img = transport_round(y, c);
      if (img && *img == c) return PreservedCurve{k, c};
    }
  }
  return std::nullopt;
}

int CrossingProfile::pair_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  if (!(1 <= a && a < b && b <= n_)) throw std::invalid_argument("bad strand pair");
  // Pairs (a,b), a < b, in lexicographic order.
  return (a - 1) * n_ - (a - 1) * a / 2 + (b - a - 1);
}

CrossingProfile::CrossingProfile(int n, const std::vector<SimpleBraid>& factors)
    : n_(n), l_(int(factors.size())) {
  if (factors.empty()) throw std::invalid_argument("empty factor sequence");
  for (const auto& f : factors)
    if (f.n() != n) throw std::invalid_argument("factor strand count mismatch");
  cross_.assign(std::size_t(n) * (n - 1) / 2, {});
  std::vector<int> pos(n + 1);
  for (int a = 1; a <= n; ++a) pos[a] = a;
  std::vector<int> next(n + 1);
  for (int j = 1; j <= l_; ++j) {
    const Permutation& p = factors[j - 1].perm();
    for (int a = 1; a <= n; ++a) next[a] = p(pos[a]);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if ((pos[a] < pos[b]) != (next[a] < next[b]))
          cross_[pair_index(a, b)].push_back(j);
    pos = next;
  }
}

const std::vector<int>& CrossingProfile::crossings(int a, int b) const {
  return cross_[pair_index(a, b)];
}

std::vector<std::pair<int, int>> CrossingProfile::never_crossing_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (cross_[pair_index(a, b)].empty()) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<int, int>> CrossingProfile::always_crossing_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (int(cross_[pair_index(a, b)].size()) == l_) out.emplace_back(a, b);
  return out;
}

CrossingProfile crossing_profile(const std::vector<SimpleBraid>& factors) {
  if (factors.empty()) throw std::invalid_argument("empty factor sequence");
  return CrossingProfile(factors.front().n(), factors);
}

}  // namespace garside
