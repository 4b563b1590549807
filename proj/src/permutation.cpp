#include "garside/permutation.hpp"

#include <algorithm>
#include <sstream>

namespace garside {

std::string GenSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : elements()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

Permutation Permutation::identity(int n) {
  if (n < 1 || n > kMaxStrands)
    throw std::invalid_argument("strand count out of range");
  Permutation p;
  p.n_ = n;
  for (int i = 1; i <= n; ++i) p.img_[i] = std::uint8_t(i);
  return p;
}

Permutation Permutation::from_image(const std::vector<int>& img) {
  int n = int(img.size());
  if (n < 1 || n > kMaxStrands)
    throw std::invalid_argument("strand count out of range");
  Permutation p;
  p.n_ = n;
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    int v = img[i];
    if (v < 1 || v > n || (seen >> v) & 1u)
      throw std::invalid_argument("not a permutation image");
    seen |= 1u << v;
    p.img_[i + 1] = std::uint8_t(v);
  }
  return p;
}

Permutation Permutation::then(const Permutation& o) const {
  if (n_ != o.n_) throw std::invalid_argument("strand count mismatch");
  Permutation r;
  r.n_ = n_;
  for (int i = 1; i <= n_; ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 1; i <= n_; ++i) r.img_[img_[i]] = std::uint8_t(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (img_[i] > img_[j]) ++c;
  return c;
}

GenSet Permutation::descents() const {
  GenSet s;
  for (int i = 1; i < n_; ++i)
    if (img_[i] > img_[i + 1]) s.add(i);
  return s;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) os << ' ';
    os << int(img_[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace garside
