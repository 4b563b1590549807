#pragma once

#include "garside/simple.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace garside {

// A word in the Artin generators: letter +i means sigma_i, -i means
// sigma_i^{-1}.
struct BraidWord {
  int n = 0;
  std::vector<int> letters;
};

// Left normal form D^p x_1 ... x_r with D the half twist, each x_i a simple
// braid different from 1 and D, and every adjacent pair left-weighted.
class NormalForm {
public:
  NormalForm() = default;

  static NormalForm identity(int n);
  static NormalForm from_word(const BraidWord& w);
  // Normalizes the given factorization (factors may be arbitrary simples).
  static NormalForm from_parts(int n, long inf, std::vector<SimpleBraid> factors);

  int n() const { return n_; }
  long inf() const { return inf_; }
  long sup() const { return inf_ + long(factors_.size()); }
  int canonical_length() const { return int(factors_.size()); }
  const std::vector<SimpleBraid>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  // initial_factor(x) = D^p x_1 D^{-p}, the first factor pulled past the
  // twist power; final_factor(x) = x_r. Both require canonical length >= 1.
  SimpleBraid initial_factor() const;
  SimpleBraid final_factor() const;

  // x is rigid iff (final_factor, initial_factor) is left-weighted, so that
  // powers of x concatenate without any normalization.
  bool is_rigid() const;

  NormalForm inverse() const;
  NormalForm power(long k) const;

  std::string str() const;
  std::uint64_t hash() const;

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.n_ == b.n_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }
  friend bool operator!=(const NormalForm& a, const NormalForm& b) {
    return !(a == b);
  }

  friend NormalForm multiply(const NormalForm& x, const NormalForm& y);

private:
  int n_ = 0;
  long inf_ = 0;
  std::vector<SimpleBraid> factors_;

  struct already_normal_tag {};
  NormalForm(int n, long inf, std::vector<SimpleBraid> factors, already_normal_tag);

  static void normalize(int n, long& inf, std::vector<SimpleBraid>& factors);
};

NormalForm normal_form(const BraidWord& w);
NormalForm multiply(const NormalForm& x, const NormalForm& y);
NormalForm invert(const NormalForm& x);
NormalForm power(const NormalForm& x, long k);

inline long inf(const NormalForm& x) { return x.inf(); }
inline long sup(const NormalForm& x) { return x.sup(); }
inline int canonical_length(const NormalForm& x) { return x.canonical_length(); }
inline SimpleBraid initial_factor(const NormalForm& x) { return x.initial_factor(); }
inline SimpleBraid final_factor(const NormalForm& x) { return x.final_factor(); }
inline bool is_rigid(const NormalForm& x) { return x.is_rigid(); }

// The two canonical obstruction patterns, given as normal forms with inf 0.
//
// pattern_xa(n): two factors; any braid whose normal form contains them
// consecutively sends every round curve to a non-round curve.
NormalForm pattern_xa(int n);
// pattern_xb(n): four factors; a braid whose factor sequence contains them
// consecutively has no never-crossing and no always-crossing strand pair.
NormalForm pattern_xb(int n);

}  // namespace garside
