#include "garside/braid.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

NormalForm::NormalForm(int n, long inf, std::vector<SimpleBraid> factors,
                       already_normal_tag)
    : n_(n), inf_(inf), factors_(std::move(factors)) {}

NormalForm NormalForm::identity(int n) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  return NormalForm(n, 0, {}, already_normal_tag{});
}

void NormalForm::normalize(int n, long& inf, std::vector<SimpleBraid>& factors) {
  auto drop_identities = [&factors]() {
    std::erase_if(factors, [](const SimpleBraid& f) { return f.is_identity(); });
  };
  drop_identities();
  // Backward sweeps to a fixpoint. Each slide moves letters strictly toward
  // the front, so the sweep count is bounded and the fixpoint is the unique
  // left-weighted factorization.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = int(factors.size()) - 2; i >= 0; --i) {
      if (left_weight_slide(factors[i], factors[i + 1])) changed = true;
    }
    std::size_t before = factors.size();
    drop_identities();
    if (factors.size() != before) changed = true;
  }
  // Half-twist factors have migrated to the front; absorb them into inf.
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead].is_half_twist()) ++lead;
  if (lead > 0) {
    inf += long(lead);
    factors.erase(factors.begin(), factors.begin() + lead);
  }
}

NormalForm NormalForm::from_parts(int n, long inf, std::vector<SimpleBraid> factors) {
  if (n < 2 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  for (const auto& f : factors)
    if (f.n() != n) throw std::invalid_argument("factor strand count mismatch");
  normalize(n, inf, factors);
  return NormalForm(n, inf, std::move(factors), already_normal_tag{});
}

NormalForm NormalForm::from_word(const BraidWord& w) {
  if (w.n < 2 || w.n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  long inf = 0;
  std::vector<SimpleBraid> factors;
  for (int letter : w.letters) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= w.n) throw std::invalid_argument("generator index out of range");
    if (letter > 0) {
      factors.push_back(SimpleBraid::generator(w.n, i));
    } else {
      // x * sigma_i^{-1} = D^{-1} * flip(x) * (D sigma_i^{-1}).
      inf -= 1;
      for (auto& f : factors) f = f.flip();
      factors.push_back(SimpleBraid::generator(w.n, i).left_complement());
    }
    normalize(w.n, inf, factors);
  }
  return NormalForm(w.n, inf, std::move(factors), already_normal_tag{});
}

SimpleBraid NormalForm::initial_factor() const {
  if (factors_.empty()) throw std::logic_error("initial_factor of twist power");
  return (inf_ % 2 == 0) ? factors_.front() : factors_.front().flip();
}

SimpleBraid NormalForm::final_factor() const {
  if (factors_.empty()) throw std::logic_error("final_factor of twist power");
  return factors_.back();
}

bool NormalForm::is_rigid() const {
  if (factors_.empty()) throw std::logic_error("rigidity of twist power");
  return is_left_weighted(final_factor(), initial_factor());
}

NormalForm multiply(const NormalForm& x, const NormalForm& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("strand count mismatch");
  long inf = x.inf_ + y.inf_;
  std::vector<SimpleBraid> factors;
  factors.reserve(x.factors_.size() + y.factors_.size());
  bool flip = (y.inf_ % 2) != 0;
  for (const auto& f : x.factors_) factors.push_back(flip ? f.flip() : f);
  for (const auto& f : y.factors_) factors.push_back(f);
  NormalForm::normalize(x.n_, inf, factors);
  return NormalForm(x.n_, inf, std::move(factors), NormalForm::already_normal_tag{});
}

NormalForm NormalForm::inverse() const {
  // (D^p x_1...x_r)^{-1} = D^{-p-r} y_1...y_r with
  // y_j = flip^{p+r+j-1}(right_complement(x_{r+1-j})).
  long p = inf_;
  int r = int(factors_.size());
  std::vector<SimpleBraid> factors;
  factors.reserve(r);
  for (int j = 1; j <= r; ++j) {
    SimpleBraid c = factors_[r - j].right_complement();
    if ((p + r + j - 1) % 2 != 0) c = c.flip();
    factors.push_back(c);
  }
  long inf = -p - r;
  normalize(n_, inf, factors);
  return NormalForm(n_, inf, std::move(factors), already_normal_tag{});
}

NormalForm NormalForm::power(long k) const {
  if (k == 0) return identity(n_);
  if (k < 0) return inverse().power(-k);
  if (!factors_.empty() && is_rigid()) {
    // Rigid fast path: the k-th power is D^{kp} followed by k blocks of the
    // factor word, block j flipped (k - j) p times; no normalization needed.
    std::vector<SimpleBraid> factors;
    factors.reserve(factors_.size() * std::size_t(k));
    for (long j = 1; j <= k; ++j) {
      bool flip = (((k - j) * inf_) % 2) != 0;
      for (const auto& f : factors_) factors.push_back(flip ? f.flip() : f);
    }
    return NormalForm(n_, inf_ * k, std::move(factors), already_normal_tag{});
  }
  NormalForm acc = *this;
  for (long j = 1; j < k; ++j) acc = multiply(acc, *this);
  return acc;
}

NormalForm invert(const NormalForm& x) { return x.inverse(); }
NormalForm power(const NormalForm& x, long k) { return x.power(k); }

NormalForm normal_form(const BraidWord& w) { return NormalForm::from_word(w); }

std::string NormalForm::str() const {
  std::ostringstream os;
  os << "D^" << inf_ << " |";
  bool first = true;
  for (const auto& f : factors_) {
    os << (first ? " " : " . ") << f.word_str();
    first = false;
  }
  return os.str();
}

std::uint64_t NormalForm::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(n_) << 32) ^
                    std::uint64_t(inf_ * 2654435761u);
  for (const auto& f : factors_) {
    h ^= f.perm().key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

SimpleBraid simple_from_generators(int n, const std::vector<int>& gens) {
  SimpleBraid s = SimpleBraid::identity(n);
  for (int i : gens) {
    if (!s.can_append(i)) throw std::logic_error("pattern factor is not simple");
    s.append_generator(i);
  }
  return s;
}

NormalForm pattern_from_factors(int n, std::vector<SimpleBraid> factors,
                                const char* name) {
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (!is_left_weighted(factors[i], factors[i + 1]))
      throw std::logic_error(std::string(name) + ": factors not left-weighted");
  for (const auto& f : factors)
    if (f.is_identity() || f.is_half_twist())
      throw std::logic_error(std::string(name) + ": trivial factor");
  return NormalForm::from_parts(n, 0, std::move(factors));
}

}  // namespace

NormalForm pattern_xa(int n) {
  if (n < 3 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  std::vector<int> odds, evens;
  for (int i = 1; i < n; i += 2) odds.push_back(i);
  for (int i = 2; i < n; i += 2) evens.push_back(i);
  SimpleBraid f1 = simple_from_generators(n, odds);
  std::vector<int> second = odds;
  second.insert(second.end(), evens.begin(), evens.end());
  SimpleBraid f2 = simple_from_generators(n, second);
  NormalForm x = pattern_from_factors(n, {f1, f2}, "pattern_xa");
  if (x.canonical_length() != 2 || x.inf() != 0)
    throw std::logic_error("pattern_xa: unexpected normal form");
  return x;
}

NormalForm pattern_xb(int n) {
  if (n < 3 || n > kMaxStrands) throw std::invalid_argument("strand count out of range");
  SimpleBraid f1 = SimpleBraid::half_twist_block(n, 2, n);
  if (!f1.can_append(1)) throw std::logic_error("pattern_xb: bad first factor");
  f1.append_generator(1);
  SimpleBraid f2 = SimpleBraid::generator(n, 1);
  std::vector<int> ascending;
  for (int i = 1; i < n; ++i) ascending.push_back(i);
  SimpleBraid f3 = simple_from_generators(n, ascending);
  SimpleBraid f4 = SimpleBraid::generator(n, n - 1);
  NormalForm x = pattern_from_factors(n, {f1, f2, f3, f4}, "pattern_xb");
  if (x.canonical_length() != 4 || x.inf() != 0)
    throw std::logic_error("pattern_xb: unexpected normal form");
  return x;
}

}  // namespace garside
