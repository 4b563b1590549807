// Core braid arithmetic: permutations, simple braids, left normal forms.
// The heavyweight oracle here is the faithful action of the braid group on
// the free group F_n: two words are equal as braids iff they act identically
// on every free generator, which checks the whole normal-form pipeline
// against an implementation that shares no code with it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garside/braid.hpp"
#include "garside/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <vector>

using namespace garside;

namespace {

// --- free-group action oracle -------------------------------------------

using FreeWord = std::vector<int>;  // reduced word, letters +-1..+-n

void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

// Image of the free generator x_j under sigma_i^{+-1}:
//   sigma_i:      x_i -> x_i x_{i+1} x_i^{-1},  x_{i+1} -> x_i
//   sigma_i^{-1}: x_i -> x_{i+1},               x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
FreeWord generator_image(int i, bool inv, int j) {
  if (!inv) {
    if (j == i) return {i, i + 1, -i};
    if (j == i + 1) return {i};
  } else {
    if (j == i) return {i + 1};
    if (j == i + 1) return {-(i + 1), i, i + 1};
  }
  return {j};
}

FreeWord apply_braid_letter(const FreeWord& w, int letter) {
  const int i = std::abs(letter);
  const bool inv = letter < 0;
  FreeWord out;
  for (int f : w) {
    FreeWord img = generator_image(i, inv, std::abs(f));
    if (f < 0) {
      std::reverse(img.begin(), img.end());
      for (int& x : img) x = -x;
    }
    for (int x : img) push_reduced(out, x);
  }
  return out;
}

// The tuple of images of all n free generators: a complete invariant.
std::vector<FreeWord> braid_action(int n, const std::vector<int>& letters) {
  std::vector<FreeWord> basis(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) basis[std::size_t(j - 1)] = {j};
  for (int l : letters)
    for (auto& w : basis) w = apply_braid_letter(w, l);
  return basis;
}

NormalForm nf(int n, const std::vector<int>& letters) {
  return NormalForm::from_word(BraidWord{n, letters});
}

bool valid_normal_form(const NormalForm& x) {
  const auto& fs = x.factors();
  for (const auto& f : fs)
    if (f.is_identity() || f.is_half_twist()) return false;
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if (!is_left_weighted(fs[i], fs[i + 1])) return false;
  return true;
}

std::vector<SimpleBraid> all_simples(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[std::size_t(i)] = i + 1;
  std::vector<SimpleBraid> out;
  do {
    out.emplace_back(Permutation::from_image(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<int> random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::vector<int> w(std::size_t(len(rng)));
  for (auto& l : w) l = (rng() & 1) ? gen(rng) : -gen(rng);
  return w;
}

}  // namespace

TEST_CASE("permutation basics") {
  auto id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.inversions() == 0);

  auto p = Permutation::from_image({3, 1, 4, 2});
  CHECK(p(1) == 3);
  CHECK(p(3) == 4);
  CHECK(p.inversions() == 3);  // (1,2), (1,4), (3,4)
  CHECK(p.then(p.inverse()) == id);
  CHECK(p.inverse().then(p) == id);

  // descents of [3,1,4,2]: positions 1 (3>1) and 3 (4>2)
  auto d = p.descents();
  CHECK(d.contains(1));
  CHECK(!d.contains(2));
  CHECK(d.contains(3));

  auto rev = Permutation::from_image({4, 3, 2, 1});
  CHECK(rev.inversions() == 6);
  CHECK(rev.descents() == GenSet::full(4));

  CHECK_THROWS_AS(Permutation::from_image({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_image({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_image({}), std::invalid_argument);
}

TEST_CASE("composition is left to right") {
  // sigma1 then sigma2 at n=3 sends 1->3 (first to position 2, then to 3).
  auto s1 = Permutation::from_image({2, 1, 3});
  auto s2 = Permutation::from_image({1, 3, 2});
  auto p = s1.then(s2);
  CHECK(p == Permutation::from_image({3, 1, 2}));
  auto q = s2.then(s1);
  CHECK(q == Permutation::from_image({2, 3, 1}));
}

TEST_CASE("simple braid sets and words") {
  auto s12 = compose(SimpleBraid::generator(3, 1), SimpleBraid::generator(3, 2));
  CHECK(s12.perm() == Permutation::from_image({3, 1, 2}));
  CHECK(s12.length() == 2);
  CHECK(s12.starting_set().elements() == std::vector<int>{1});
  CHECK(s12.finishing_set().elements() == std::vector<int>{2});
  CHECK(s12.word() == std::vector<int>{1, 2});
  CHECK(s12.word_str() == "s1 s2");

  auto s21 = compose(SimpleBraid::generator(3, 2), SimpleBraid::generator(3, 1));
  CHECK(s21.perm() == Permutation::from_image({2, 3, 1}));
  CHECK(s21.starting_set().elements() == std::vector<int>{2});
  CHECK(s21.finishing_set().elements() == std::vector<int>{1});
  CHECK(s21.word() == std::vector<int>{2, 1});

  auto delta = SimpleBraid::half_twist(4);
  CHECK(delta.is_half_twist());
  CHECK(delta.length() == 6);
  CHECK(delta.starting_set() == GenSet::full(4));
  CHECK(delta.finishing_set() == GenSet::full(4));

  // Half twist on strands 2..4 inside B_4 reverses that block.
  auto block = SimpleBraid::half_twist_block(4, 2, 4);
  CHECK(block.perm() == Permutation::from_image({1, 4, 3, 2}));
  CHECK(block.length() == 3);

  for (const auto& s : all_simples(4)) {
    CHECK(s.length() == int(s.word().size()));
    // rebuild from the canonical word
    auto p = Permutation::identity(4);
    for (int i : s.word()) p = p.then(SimpleBraid::generator(4, i).perm());
    CHECK(p == s.perm());
  }
}

TEST_CASE("flip and complements") {
  for (int n : {3, 4}) {
    auto delta = SimpleBraid::half_twist(n);
    for (const auto& s : all_simples(n)) {
      // flip via the word homomorphism sigma_i -> sigma_{n-i}
      auto p = Permutation::identity(n);
      for (int i : s.word()) p = p.then(SimpleBraid::generator(n, n - i).perm());
      CHECK(s.flip().perm() == p);
      CHECK(s.flip().flip() == s);
      CHECK(s.flip().length() == s.length());

      // s * right_complement(s) = Delta with lengths adding
      auto rc = s.right_complement();
      CHECK(product_is_simple(s, rc));
      CHECK(compose(s, rc) == delta);
      auto lc = s.left_complement();
      CHECK(product_is_simple(lc, s));
      CHECK(compose(lc, s) == delta);
    }
  }
}

TEST_CASE("left-weighted pairs and slides") {
  // Independent oracle via word lengths: (a,b) is left-weighted iff no
  // generator both extends a (lengths add) and prefixes b (lengths drop).
  for (int n : {3, 4}) {
    auto simples = all_simples(n);
    for (const auto& a : simples)
      for (const auto& b : simples) {
        bool movable = false;
        for (int i = 1; i < n; ++i) {
          const auto g = SimpleBraid::generator(n, i);
          const bool extends_a =
              compose(a, g).length() == a.length() + 1;
          const bool prefixes_b =
              compose(g, b).length() == b.length() - 1;
          if (extends_a && prefixes_b) movable = true;
        }
        CHECK(is_left_weighted(a, b) == !movable);

        auto [a2, b2] = left_weight_pair(a, b);
        CHECK(is_left_weighted(a2, b2));
        CHECK(a2.length() + b2.length() == a.length() + b.length());
        CHECK(compose(a2, b2) == compose(a, b));
        if (is_left_weighted(a, b)) {
          CHECK(a2 == a);
          CHECK(b2 == b);
        }
      }
  }
}

TEST_CASE("normal form frozen examples") {
  CHECK(nf(3, {}).str() == "D^0 |");
  CHECK(nf(3, {}).is_identity());
  CHECK(nf(3, {2, 1, 2}).str() == "D^1 |");
  CHECK(nf(3, {1, -2}).str() == "D^-1 | s2 . s2 s1");
  CHECK(nf(3, {-1}).str() == "D^-1 | s1 s2");
  CHECK(nf(3, {1, 2, 1}) == nf(3, {2, 1, 2}));
  CHECK(nf(3, {1, 2, 1, -1, -2, -1}).is_identity());

  const auto x = nf(3, {1, -2});
  CHECK(x.inf() == -1);
  CHECK(x.sup() == 1);
  CHECK(x.canonical_length() == 2);
  CHECK(x.is_rigid());

  // initial factor crosses the twist: iota(D * sigma1) = flip(sigma1) = sigma2
  const auto y = nf(3, {1, 2, 1, 1});
  CHECK(y.inf() == 1);
  CHECK(y.canonical_length() == 1);
  CHECK(y.initial_factor() == SimpleBraid::generator(3, 2));
  CHECK(y.final_factor() == SimpleBraid::generator(3, 1));
}

TEST_CASE("normal forms are valid and words round-trip") {
  std::mt19937_64 rng(0xbadc0ffee);
  for (int n : {3, 4, 5}) {
    const auto dletters = half_twist_letters(n);
    for (int iter = 0; iter < 300; ++iter) {
      const auto w = random_word(rng, n, 14);
      const auto x = nf(n, w);
      CHECK(valid_normal_form(x));

      // rebuild from inf + factor words
      std::vector<int> flat;
      if (x.inf() > 0) {
        for (long i = 0; i < x.inf(); ++i)
          for (int l : dletters) flat.push_back(l);
      } else {
        for (long i = 0; i > x.inf(); --i)
          for (auto it = dletters.rbegin(); it != dletters.rend(); ++it)
            flat.push_back(-*it);
      }
      for (const auto& f : x.factors())
        for (int l : f.word()) flat.push_back(l);
      CHECK(nf(n, flat) == x);

      // rebuild from parts
      CHECK(NormalForm::from_parts(n, x.inf(), x.factors()) == x);
    }
  }
}

TEST_CASE("group axioms against the free-group action") {
  std::mt19937_64 rng(0x5eed5eed);
  const int n = 4;

  // Exhaustive cross-check at n=3 for all words of length <= 3.
  {
    std::vector<std::vector<int>> words{{}};
    std::vector<std::vector<int>> prev{{}};
    for (int len = 1; len <= 3; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : prev)
        for (int l : {1, -1, 2, -2}) {
          auto w2 = w;
          w2.push_back(l);
          next.push_back(w2);
        }
      words.insert(words.end(), next.begin(), next.end());
      prev = std::move(next);
    }
    std::vector<NormalForm> forms;
    std::vector<std::vector<FreeWord>> actions;
    for (const auto& w : words) {
      forms.push_back(nf(3, w));
      actions.push_back(braid_action(3, w));
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i; j < words.size(); ++j)
        CHECK((forms[i] == forms[j]) == (actions[i] == actions[j]));
  }

  // Random relator insertions preserve both representations at n=4.
  std::uniform_int_distribution<int> gen(1, n - 1);
  for (int iter = 0; iter < 200; ++iter) {
    auto w = random_word(rng, n, 10);
    auto w2 = w;
    for (int ins = 0; ins < 3; ++ins) {
      std::vector<int> rel;
      switch (rng() % 3) {
        case 0: {
          int i = gen(rng);
          rel = {i, -i};
          break;
        }
        case 1: {
          int i = 1 + int(rng() % (n - 2));
          rel = {i, i + 1, i, -(i + 1), -i, -(i + 1)};
          break;
        }
        default: {
          rel = {1, 3, -1, -3};
          break;
        }
      }
      std::size_t pos = w2.empty() ? 0 : rng() % (w2.size() + 1);
      w2.insert(w2.begin() + std::ptrdiff_t(pos), rel.begin(), rel.end());
    }
    CHECK(nf(n, w) == nf(n, w2));
    CHECK(braid_action(n, w) == braid_action(n, w2));

    // appending any single generator always changes the braid
    auto w3 = w;
    w3.push_back(gen(rng));
    CHECK(nf(n, w) != nf(n, w3));
    CHECK(braid_action(n, w) != braid_action(n, w3));
  }

  // Unrelated random pairs: equality agrees between the two representations.
  for (int iter = 0; iter < 150; ++iter) {
    auto w1 = random_word(rng, n, 8);
    auto w2 = random_word(rng, n, 8);
    CHECK((nf(n, w1) == nf(n, w2)) == (braid_action(n, w1) == braid_action(n, w2)));
  }
}

TEST_CASE("multiplication, inverses, powers") {
  std::mt19937_64 rng(0xabcdef12);
  for (int n : {3, 4, 5}) {
    for (int iter = 0; iter < 150; ++iter) {
      auto w1 = random_word(rng, n, 10);
      auto w2 = random_word(rng, n, 10);
      auto w3 = random_word(rng, n, 10);
      const auto x = nf(n, w1), y = nf(n, w2), z = nf(n, w3);

      // homomorphism from words
      auto w12 = w1;
      w12.insert(w12.end(), w2.begin(), w2.end());
      CHECK(multiply(x, y) == nf(n, w12));

      // associativity, identity, inverses
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
      CHECK(multiply(x, NormalForm::identity(n)) == x);
      CHECK(multiply(x, x.inverse()).is_identity());
      CHECK(x.inverse().inverse() == x);
      CHECK(valid_normal_form(x.inverse()));

      // powers against repeated multiplication
      NormalForm acc = NormalForm::identity(n);
      for (long k = 0; k <= 5; ++k) {
        CHECK(x.power(k) == acc);
        acc = multiply(acc, x);
      }
      CHECK(x.power(-3) == x.inverse().power(3));

      // Delta^2 is central
      const auto d2 = NormalForm::from_parts(n, 2, {});
      CHECK(multiply(d2, x) == multiply(x, d2));
    }
  }
}

TEST_CASE("rigid braids and their powers") {
  // figure-eight braid sigma1 sigma2^{-1}: rigid with inf -1
  const auto x = nf(3, {1, -2});
  REQUIRE(x.is_rigid());
  for (long k = 1; k <= 6; ++k) {
    const auto xk = x.power(k);
    CHECK(xk.is_rigid());
    CHECK(xk.inf() == -k);
    CHECK(xk.canonical_length() == 2 * k);
    CHECK(xk == [&] {
      auto acc = NormalForm::identity(3);
      for (long i = 0; i < k; ++i) acc = multiply(acc, x);
      return acc;
    }());
  }

  // rigid with inf 0: powers concatenate the factor sequence verbatim
  const auto y = NormalForm::from_parts(
      3, 0,
      {compose(SimpleBraid::generator(3, 2), SimpleBraid::generator(3, 1)),
       compose(SimpleBraid::generator(3, 1), SimpleBraid::generator(3, 2))});
  REQUIRE(y.is_rigid());
  REQUIRE(y.inf() == 0);
  const auto y3 = y.power(3);
  CHECK(y3.inf() == 0);
  CHECK(y3.canonical_length() == 6);
  for (int i = 0; i < 6; ++i)
    CHECK(y3.factors()[std::size_t(i)] == y.factors()[std::size_t(i % 2)]);

  // sigma1^l is rigid but not its own inverse shape; check non-rigid example
  const auto z = NormalForm::from_parts(
      3, 0, {compose(SimpleBraid::generator(3, 1), SimpleBraid::generator(3, 2))});
  CHECK(!z.is_rigid());  // init(s1 s2) = {1}, final = {2}

  // powers of Delta
  const auto d = NormalForm::from_parts(3, 1, {});
  CHECK(d.power(4).inf() == 4);
  CHECK(d.power(4).canonical_length() == 0);
  CHECK(d.power(-2) == d.inverse().power(2));
}

TEST_CASE("canonical patterns have the advertised shape") {
  for (int n : {3, 4, 5, 6}) {
    // first factor: product of the odd generators s1 s3 s5 ...;
    // second factor: the odd generators followed by the even ones.
    auto podd = Permutation::identity(n);
    for (int i = 1; i < n; i += 2) podd = podd.then(SimpleBraid::generator(n, i).perm());
    auto pfull = podd;
    for (int i = 2; i < n; i += 2) pfull = pfull.then(SimpleBraid::generator(n, i).perm());

    const auto xa = pattern_xa(n).factors();
    REQUIRE(xa.size() == 2);
    CHECK(xa[0].perm() == podd);
    CHECK(xa[1].perm() == pfull);
    CHECK(is_left_weighted(xa[0], xa[1]));
    CHECK(pattern_xa(n).canonical_length() == 2);
    CHECK(pattern_xa(n).inf() == 0);

    // ascending product sigma_1 sigma_2 ... sigma_{n-1}
    auto pasc = Permutation::identity(n);
    for (int i = 1; i < n; ++i) pasc = pasc.then(SimpleBraid::generator(n, i).perm());

    const auto xb = pattern_xb(n).factors();
    REQUIRE(xb.size() == 4);
    CHECK(xb[0] == compose(SimpleBraid::half_twist_block(n, 2, n),
                           SimpleBraid::generator(n, 1)));
    CHECK(xb[1] == SimpleBraid::generator(n, 1));
    CHECK(xb[2].perm() == pasc);
    CHECK(xb[3] == SimpleBraid::generator(n, n - 1));
    CHECK(pattern_xb(n).canonical_length() == 4);
    CHECK(pattern_xb(n).inf() == 0);
    CHECK(pattern_xb(n).factors() == xb);
  }
}

TEST_CASE("hash and equality are consistent") {
  std::mt19937_64 rng(0x1234321);
  for (int iter = 0; iter < 200; ++iter) {
    auto w = random_word(rng, 4, 10);
    auto x = nf(4, w);
    auto y = nf(4, w);
    CHECK(x == y);
    CHECK(x.hash() == y.hash());
    CHECK(x.str() == y.str());
  }
}
