#pragma once

#include "garside/permutation.hpp"

#include <utility>
#include <vector>

namespace garside {

// A simple braid (permutation braid): a positive braid in which every pair of
// strands crosses at most once. Simple braids correspond bijectively to
// permutations; all operations below work on the underlying permutation.
class SimpleBraid {
public:
  SimpleBraid() = default;
  explicit SimpleBraid(Permutation p) : perm_(std::move(p)) {}

  static SimpleBraid identity(int n) { return SimpleBraid(Permutation::identity(n)); }
  static SimpleBraid generator(int n, int i);
  // The half twist on strands i..j (identity when i == j).
  static SimpleBraid half_twist_block(int n, int i, int j);
  static SimpleBraid half_twist(int n) { return half_twist_block(n, 1, n); }

  int n() const { return perm_.n(); }
  const Permutation& perm() const { return perm_; }

  bool is_identity() const { return perm_.is_identity(); }
  bool is_half_twist() const;

  // Positive word length (= inversion count of the permutation).
  int length() const { return perm_.inversions(); }

  // starting_set(s) = { i : s has a positive word beginning with sigma_i }
  //                 = descent set of the permutation.
  GenSet starting_set() const { return perm_.descents(); }
  // finishing_set(s) = { i : s has a positive word ending with sigma_i }
  //                  = descent set of the inverse permutation.
  GenSet finishing_set() const { return perm_.inverse().descents(); }

  // s * sigma_i stays simple iff i is not in the finishing set.
  bool can_append(int i) const { return !finishing_set().contains(i); }
  void append_generator(int i);

  // sigma_i is a prefix of s iff i is in the starting set; strip removes it.
  bool has_prefix(int i) const { return starting_set().contains(i); }
  void strip_prefix(int i);

  // flip(s) = conjugate of s by the half twist; an involution mapping
  // sigma_i to sigma_{n-i}.
  SimpleBraid flip() const;

  // right_complement(s) = s^{-1} * half twist (the simple c with s*c = D).
  SimpleBraid right_complement() const;
  // left_complement(s) = half twist * s^{-1} (the simple c with c*s = D).
  SimpleBraid left_complement() const;

  // Canonical positive word, produced by repeatedly peeling the smallest
  // finishing generator. Letters are generator indices.
  std::vector<int> word() const;
  std::string word_str() const;

  friend bool operator==(const SimpleBraid& a, const SimpleBraid& b) {
    return a.perm_ == b.perm_;
  }
  friend bool operator!=(const SimpleBraid& a, const SimpleBraid& b) {
    return !(a == b);
  }
  friend bool operator<(const SimpleBraid& a, const SimpleBraid& b) {
    return a.perm_ < b.perm_;
  }

private:
  Permutation perm_;
};

// The product of two simple braids as a permutation composition (left to
// right). The result is the simple braid for that permutation; it equals the
// braid product only when the word lengths add.
SimpleBraid compose(const SimpleBraid& a, const SimpleBraid& b);

// True iff the braid product a*b is again simple, i.e. lengths add.
bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b);

// (a, b) is left-weighted iff starting_set(b) is contained in
// finishing_set(a): no prefix of b can slide onto a.
bool is_left_weighted(const SimpleBraid& a, const SimpleBraid& b);

// Slides prefix generators of b onto a until (a, b) is left-weighted.
// Preserves the product a*b. Returns true if anything moved.
bool left_weight_slide(SimpleBraid& a, SimpleBraid& b);

// Functional form of the slide: returns the left-weighted pair.
std::pair<SimpleBraid, SimpleBraid> left_weight_pair(const SimpleBraid& a,
                                                     const SimpleBraid& b);

}  // namespace garside
