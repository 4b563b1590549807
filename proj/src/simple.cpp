#include "garside/simple.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

SimpleBraid SimpleBraid::generator(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  Permutation p = Permutation::identity(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return SimpleBraid(p);
}

SimpleBraid SimpleBraid::half_twist_block(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("bad half twist block");
  Permutation p = Permutation::identity(n);
  for (int x = i; x <= j; ++x) p.img_[x] = std::uint8_t(i + j - x);
  return SimpleBraid(p);
}

bool SimpleBraid::is_half_twist() const {
  int n = perm_.n();
  for (int i = 1; i <= n; ++i)
    if (perm_(i) != n + 1 - i) return false;
  return true;
}

void SimpleBraid::append_generator(int i) {
  // s * sigma_i: strands ending at positions i, i+1 swap their endpoints,
  // i.e. the image values i and i+1 trade places.
  int n = perm_.n();
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  if (!can_append(i)) throw std::logic_error("append would leave simple braids");
  for (int x = 1; x <= n; ++x) {
    if (perm_.img_[x] == i) perm_.img_[x] = std::uint8_t(i + 1);
    else if (perm_.img_[x] == i + 1) perm_.img_[x] = std::uint8_t(i);
  }
}

void SimpleBraid::strip_prefix(int i) {
  // sigma_i^{-1} * s: the strands starting at positions i, i+1 swap their
  // starting points, i.e. img[i] and img[i+1] trade places.
  int n = perm_.n();
  if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
  if (!has_prefix(i)) throw std::logic_error("strip of non-prefix generator");
  std::swap(perm_.img_[i], perm_.img_[i + 1]);
}

SimpleBraid SimpleBraid::flip() const {
  int n = perm_.n();
  Permutation p = Permutation::identity(n);
  for (int i = 1; i <= n; ++i) p.img_[i] = std::uint8_t(n + 1 - perm_(n + 1 - i));
  return SimpleBraid(p);
}

SimpleBraid SimpleBraid::right_complement() const {
  int n = perm_.n();
  Permutation inv = perm_.inverse();
  Permutation p = Permutation::identity(n);
  for (int i = 1; i <= n; ++i) p.img_[i] = std::uint8_t(n + 1 - inv(i));
  return SimpleBraid(p);
}

SimpleBraid SimpleBraid::left_complement() const {
  int n = perm_.n();
  Permutation inv = perm_.inverse();
  Permutation p = Permutation::identity(n);
  for (int i = 1; i <= n; ++i) p.img_[i] = std::uint8_t(inv(n + 1 - i));
  return SimpleBraid(p);
}

std::vector<int> SimpleBraid::word() const {
  SimpleBraid s = *this;
  std::vector<int> rev;
  while (!s.is_identity()) {
    int i = s.finishing_set().lowest();
    rev.push_back(i);
    // Remove a trailing sigma_i: append swaps back the images i, i+1.
    int n = s.perm_.n();
    for (int x = 1; x <= n; ++x) {
      if (s.perm_.img_[x] == i) s.perm_.img_[x] = std::uint8_t(i + 1);
      else if (s.perm_.img_[x] == i + 1) s.perm_.img_[x] = std::uint8_t(i);
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::string SimpleBraid::word_str() const {
  std::ostringstream os;
  bool first = true;
  for (int i : word()) {
    if (!first) os << ' ';
    os << 's' << i;
    first = false;
  }
  return os.str();
}

SimpleBraid compose(const SimpleBraid& a, const SimpleBraid& b) {
  return SimpleBraid(a.perm().then(b.perm()));
}

bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b) {
  return compose(a, b).length() == a.length() + b.length();
}

bool is_left_weighted(const SimpleBraid& a, const SimpleBraid& b) {
  return b.starting_set().subset_of(a.finishing_set());
}

bool left_weight_slide(SimpleBraid& a, SimpleBraid& b) {
  bool moved = false;
  for (;;) {
    GenSet movable = b.starting_set().minus(a.finishing_set());
    if (movable.empty()) return moved;
    int i = movable.lowest();
    a.append_generator(i);
    b.strip_prefix(i);
    moved = true;
  }
}

std::pair<SimpleBraid, SimpleBraid> left_weight_pair(const SimpleBraid& a,
                                                     const SimpleBraid& b) {
  auto pa = a;
  auto pb = b;
  left_weight_slide(pa, pb);
  return {pa, pb};
}

}  // namespace garside
