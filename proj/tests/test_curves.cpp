// Round curves, their transport along braids, and strand-crossing profiles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garside/census.hpp"
#include "garside/curves.hpp"
#include "garside/lw_graph.hpp"
#include "garside/words.hpp"

#include <random>

using namespace garside;

namespace {

NormalForm nf(int n, const std::string& text) {
  return NormalForm::from_word(parse_word(n, text));
}

// A random normal form with the given number of factors and a random small
// twist power, drawn through the exact path sampler.
NormalForm random_nf(const LWGraph& g, std::mt19937_64& meta, BigRng& rng, int rmax) {
  const int r = 1 + int(meta() % std::uint64_t(rmax));
  UniformPathSampler sampler(g, r);
  const auto x = sampler.sample(rng);
  const long p = long(meta() % 5) - 2;
  return NormalForm::from_parts(g.n, p, x.factors());
}

}  // namespace

TEST_CASE("round curve construction") {
  const auto all3 = all_round_curves(3);
  REQUIRE(all3.size() == 2);
  CHECK(all3[0] == RoundCurve::make(3, 1, 2));
  CHECK(all3[1] == RoundCurve::make(3, 2, 3));

  // n(n-1)/2 - 1 curves: all intervals of >= 2 punctures except the full one
  CHECK(all_round_curves(4).size() == 5);
  CHECK(all_round_curves(6).size() == 14);

  CHECK_THROWS_AS(RoundCurve::make(3, 2, 2), std::invalid_argument);  // one puncture
  CHECK_THROWS_AS(RoundCurve::make(3, 1, 3), std::invalid_argument);  // all punctures
  CHECK_THROWS_AS(RoundCurve::make(3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(RoundCurve::make(3, 2, 1), std::invalid_argument);
}

TEST_CASE("single-factor images at n=3, full hand table") {
  const auto s1 = SimpleBraid::generator(3, 1);
  const auto s2 = SimpleBraid::generator(3, 2);
  const auto s12 = compose(s1, s2);  // image [3,1,2]
  const auto s21 = compose(s2, s1);  // image [2,3,1]
  const auto c12 = RoundCurve::make(3, 1, 2);
  const auto c23 = RoundCurve::make(3, 2, 3);

  CHECK(image_round(s1, c12) == c12);
  CHECK(image_round(s1, c23) == std::nullopt);
  CHECK(image_round(s2, c12) == std::nullopt);
  CHECK(image_round(s2, c23) == c23);
  CHECK(image_round(s12, c12) == std::nullopt);
  CHECK(image_round(s12, c23) == c12);
  CHECK(image_round(s21, c12) == c23);
  CHECK(image_round(s21, c23) == std::nullopt);
}

TEST_CASE("images under half twists and blocks") {
  for (int n : {3, 4, 5}) {
    const auto delta = SimpleBraid::half_twist(n);
    for (const auto& c : all_round_curves(n)) {
      // Delta reverses every interval
      const auto img = image_round(delta, c);
      REQUIRE(img.has_value());
      CHECK(img->lo == n + 1 - c.hi);
      CHECK(img->hi == n + 1 - c.lo);
      // identity fixes everything
      CHECK(image_round(SimpleBraid::identity(n), c) == c);
    }
  }
  // Delta_{2,4} in B_4 fixes the curve around 2..4 and kills [1,2]
  const auto block = SimpleBraid::half_twist_block(4, 2, 4);
  CHECK(image_round(block, RoundCurve::make(4, 2, 4)) == RoundCurve::make(4, 2, 4));
  CHECK(image_round(block, RoundCurve::make(4, 1, 2)) == std::nullopt);
  CHECK(image_round(block, RoundCurve::make(4, 3, 4)) == RoundCurve::make(4, 2, 3));
}

TEST_CASE("transport along whole braids") {
  const auto c12 = RoundCurve::make(3, 1, 2);
  const auto c23 = RoundCurve::make(3, 2, 3);

  // identity and central elements
  CHECK(transport_round(NormalForm::identity(3), c12) == c12);
  const auto d = NormalForm::from_parts(3, 1, {});
  CHECK(transport_round(d, c12) == c23);
  CHECK(transport_round(d.power(2), c12) == c12);
  CHECK(transport_round(d.power(-1), c23) == c12);

  // sigma1^2 preserves [1,2]
  CHECK(transport_round(nf(3, "s1 s1"), c12) == c12);
  CHECK(transport_round(nf(3, "s1 s1"), c23) == std::nullopt);

  // sigma2 sigma1^2 sigma2 has factors (s2 s1)(s1 s2); its strand permutation
  // is trivial and the round curve [1,2] comes back to itself through [2,3]
  const auto y = nf(3, "s2 s1 s1 s2");
  CHECK(transport_round(y, c12) == c12);
  CHECK(transport_round(y, c23) == std::nullopt);
}

TEST_CASE("transport composes and inverts") {
  std::mt19937_64 meta(0xc0ffee11);
  for (int n : {3, 4, 5}) {
    const auto g = build_graph(n);
    BigRng rng(91 + unsigned(n));
    const auto curves = all_round_curves(n);
    int composed = 0, inverted = 0;
    for (int iter = 0; iter < 600; ++iter) {
      const auto x = random_nf(g, meta, rng, 3);
      const auto y = random_nf(g, meta, rng, 3);
      const auto xy = multiply(x, y);
      for (const auto& c : curves) {
        const auto cx = transport_round(x, c);
        if (cx) {
          const auto cxy = transport_round(y, *cx);
          if (cxy) {
            CHECK(transport_round(xy, c) == cxy);
            ++composed;
          }
          // transport along the inverse undoes a round transport
          CHECK(transport_round(x.inverse(), *cx) == c);
          ++inverted;
        }
      }
    }
    // the property must actually have been exercised
    CHECK(composed > 50);
    CHECK(inverted > 50);
  }
}

TEST_CASE("pattern-bearing braids send every round curve off round") {
  // unit-scale version of the transport obstruction: prepend/append random
  // compatible factors around the first canonical pattern
  std::mt19937_64 meta(0x5ca1ab1e);
  for (int n : {3, 4}) {
    const auto g = build_graph(n);
    const auto xa = pattern_xa(n).factors();
    const auto ids = g.path_of(xa);
    for (int iter = 0; iter < 100; ++iter) {
      std::vector<std::uint32_t> path(ids.begin(), ids.end());
      for (int b = int(meta() % 4); b > 0; --b) {
        const auto& in = g.in[path.front()];
        if (in.empty()) break;
        path.insert(path.begin(), in[meta() % in.size()]);
      }
      for (int a = int(meta() % 4); a > 0; --a) {
        const auto& out = g.out[path.back()];
        if (out.empty()) break;
        path.push_back(out[meta() % out.size()]);
      }
      std::vector<SimpleBraid> factors;
      for (auto v : path) factors.push_back(g.vertices[v]);
      const auto x = NormalForm::from_parts(n, 0, factors);
      REQUIRE(x.canonical_length() == int(path.size()));
      for (const auto& c : all_round_curves(n))
        CHECK(transport_round(x, c) == std::nullopt);
    }
  }
}

TEST_CASE("crossing profiles") {
  // (sigma1)^l: strands 1,2 cross every factor, pairs with strand 3 never
  {
    std::vector<SimpleBraid> fs(5, SimpleBraid::generator(3, 1));
    const auto prof = crossing_profile(fs);
    CHECK(prof.factor_count() == 5);
    CHECK(prof.crossings(1, 2) == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(prof.crossings(1, 3).empty());
    CHECK(prof.crossings(2, 3).empty());
    const auto never = prof.never_crossing_pairs();
    REQUIRE(never.size() == 2);
    CHECK(never[0] == std::pair<int, int>{1, 3});
    CHECK(never[1] == std::pair<int, int>{2, 3});
    const auto always = prof.always_crossing_pairs();
    REQUIRE(always.size() == 1);
    CHECK(always[0] == std::pair<int, int>{1, 2});
  }

  // single half twist crosses every pair
  {
    const auto prof = crossing_profile({SimpleBraid::half_twist(4)});
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b)
        CHECK(prof.crossings(a, b) == std::vector<int>{1});
    CHECK(prof.never_crossing_pairs().empty());
    CHECK(prof.always_crossing_pairs().size() == 6);
  }

  // figure-eight positive part (sigma2, sigma2 sigma1): strands 1,3 never cross
  {
    const auto x = nf(3, "s1 S2");
    const auto prof = crossing_profile(x.factors());
    CHECK(prof.crossings(1, 3).empty());
    CHECK(prof.crossings(2, 3) == std::vector<int>{1, 2});
    CHECK(prof.crossings(1, 2) == std::vector<int>{2});
  }

  // the second canonical pattern leaves no never- or always-crossing pair
  for (int n : {3, 4, 5}) {
    const auto prof = crossing_profile(pattern_xb(n).factors());
    CHECK(prof.never_crossing_pairs().empty());
    CHECK(prof.always_crossing_pairs().empty());
  }
}

TEST_CASE("crossing counts are conserved") {
  // total crossings across all pairs = total inversion count of the factors
  std::mt19937_64 meta(0xfeedface);
  for (int n : {3, 4, 5}) {
    const auto g = build_graph(n);
    BigRng rng(17 + unsigned(n));
    for (int iter = 0; iter < 200; ++iter) {
      const int r = 1 + int(meta() % 8);
      UniformPathSampler sampler(g, r);
      const auto x = sampler.sample(rng);
      const auto prof = crossing_profile(x.factors());
      std::size_t total = 0;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) total += prof.crossings(a, b).size();
      std::size_t lengths = 0;
      for (const auto& f : x.factors()) lengths += std::size_t(f.length());
      CHECK(total == lengths);
    }
  }
}

TEST_CASE("preserved round curve powers") {
  // sigma1^2: preserved at power 1
  const auto p = preserved_round_curve_power(nf(3, "s1 s1"));
  REQUIRE(p.has_value());
  CHECK(p->k == 1);
  CHECK(p->curve == RoundCurve::make(3, 1, 2));

  // block swap in B_4: [1,2] -> [3,4] -> [1,2], so the first preserving
  // power is 2 even though every single-step image stays round
  const auto swap = NormalForm::from_parts(
      4, 0, {SimpleBraid(Permutation::from_image({3, 4, 1, 2}))});
  const auto ps = preserved_round_curve_power(swap);
  REQUIRE(ps.has_value());
  CHECK(ps->k == 2);
  CHECK(ps->curve == RoundCurve::make(4, 1, 2));

  // the figure-eight braid is pseudo-Anosov: no preserved curve at any power
  CHECK(preserved_round_curve_power(nf(3, "s1 S2"), 12) == std::nullopt);

  // periodic braid Delta preserves nothing at k=1 but its square is central
  const auto d = NormalForm::from_parts(3, 1, {});
  const auto pd = preserved_round_curve_power(d);
  REQUIRE(pd.has_value());
  CHECK(pd->k == 2);
  CHECK(pd->curve == RoundCurve::make(3, 1, 2));
}
