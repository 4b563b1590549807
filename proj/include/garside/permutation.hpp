#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

// Everything in this library is 1-based: strand positions run 1..n and
// Artin generator indices run 1..n-1. Words act left to right, so the
// permutation underlying a product a*b sends x to b(a(x)).

inline constexpr int kMaxStrands = 16;

// A set of generator indices i in 1..n-1, stored as a bitmask (bit 0 unused).
class GenSet {
public:
  GenSet() = default;
  explicit GenSet(std::uint32_t bits) : bits_(bits) {}

  static GenSet full(int n) { return GenSet(((1u << n) - 1u) & ~1u); }

  bool contains(int i) const { return (bits_ >> i) & 1u; }
  void add(int i) { bits_ |= 1u << i; }
  void remove(int i) { bits_ &= ~(1u << i); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }

  // Smallest element; set must be non-empty.
  int lowest() const {
    if (empty()) throw std::logic_error("GenSet::lowest on empty set");
    return __builtin_ctz(bits_);
  }

  bool subset_of(GenSet o) const { return (bits_ & ~o.bits_) == 0; }
  GenSet minus(GenSet o) const { return GenSet(bits_ & ~o.bits_); }
  GenSet intersect(GenSet o) const { return GenSet(bits_ & o.bits_); }
  GenSet complement_in(int n) const { return full(n).minus(*this); }

  std::uint32_t bits() const { return bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b;) {
      int i = __builtin_ctz(b);
      out.push_back(i);
      b &= b - 1;
    }
    return out;
  }

  std::string str() const;

  friend bool operator==(GenSet a, GenSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(GenSet a, GenSet b) { return a.bits_ != b.bits_; }

private:
  std::uint32_t bits_ = 0;
};

class Permutation {
public:
  Permutation() { img_.fill(0); }

  static Permutation identity(int n);
  // img[i] = final position of the strand starting at position i; 1-based.
  static Permutation from_image(const std::vector<int>& img);

  int n() const { return n_; }
  int operator()(int i) const { return img_[i]; }

  // this-then-o composition: x -> o(this(x)).
  Permutation then(const Permutation& o) const;
  Permutation inverse() const;

  bool is_identity() const;

  // Number of inversions: pairs i < j with img[i] > img[j]. Equals the
  // positive word length of the simple braid with this permutation.
  int inversions() const;

  // Descent set {i : img[i] > img[i+1]}.
  GenSet descents() const;

  // 64-bit packing of the image; doubles as a total order and hash key.
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int i = 1; i <= n_; ++i) k = (k << 4) | std::uint64_t(img_[i] - 1);
    return k;
  }

  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.n_ == b.n_ && a.key() == b.key();
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.key() < b.key();
  }

private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxStrands + 1> img_{};

  friend class SimpleBraid;
};

}  // namespace garside
