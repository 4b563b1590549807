// Three-valued certification: subword search, periodic shortcut, witnesses.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "garside/census.hpp"
#include "garside/certify.hpp"
#include "garside/serialize.hpp"
#include "garside/words.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace garside;

namespace {

NormalForm nf(int n, const std::string& text) {
  return NormalForm::from_word(parse_word(n, text));
}

SimpleBraid s(int n, std::initializer_list<int> word) {
  auto p = Permutation::identity(n);
  for (int i : word) p = p.then(SimpleBraid::generator(n, i).perm());
  return SimpleBraid(p);
}

}  // namespace

TEST_CASE("subword positions") {
  // factors (s2 s1)(s1)(s1 s2)(s2) around the two-factor pattern (s1)(s1 s2)
  const auto x = NormalForm::from_parts(
      3, 0, {s(3, {2, 1}), s(3, {1}), s(3, {1, 2}), s(3, {2})});
  REQUIRE(x.canonical_length() == 4);
  const auto xa = pattern_xa(3).factors();
  CHECK(contains_subword(x, xa) == 2);
  CHECK(contains_subword(x, pattern_xb(3).factors()) == 1);

  // pattern longer than the factor list
  const auto small = NormalForm::from_parts(3, 0, {s(3, {1})});
  CHECK(contains_subword(small, xa) == std::nullopt);

  // no match at all
  const auto y = NormalForm::from_parts(3, 0, {s(3, {2}), s(3, {2, 1})});
  CHECK(contains_subword(y, xa) == std::nullopt);

  // the flipped copy matches only when asked for
  CHECK(contains_subword(y, xa, true) == 1);  // flip(xa) = (s2)(s2 s1)

  // twist power does not shift positions: matching is on the factor list
  const auto shifted = NormalForm::from_parts(3, -2, x.factors());
  CHECK(contains_subword(shifted, xa) == 2);

  CHECK_THROWS_AS(contains_subword(x, {}), std::invalid_argument);
}

TEST_CASE("pattern occurrences survive sampling around them") {
  // pad the second pattern with loop-compatible factors on both sides and
  // re-find it (the padding cannot erase the literal factor window)
  const auto g = build_graph(3);
  const auto xb = pattern_xb(3).factors();
  const auto ids = g.path_of(xb);
  std::mt19937_64 meta(0x9090);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<std::uint32_t> path(ids.begin(), ids.end());
    for (int b = int(meta() % 5); b > 0; --b)
      path.insert(path.begin(), g.in[path.front()][meta() % g.in[path.front()].size()]);
    for (int a = int(meta() % 5); a > 0; --a)
      path.push_back(g.out[path.back()][meta() % g.out[path.back()].size()]);
    std::vector<SimpleBraid> factors;
    for (auto v : path) factors.push_back(g.vertices[v]);
    const auto x = NormalForm::from_parts(3, 0, factors);
    CHECK(contains_subword(x, xb).has_value());
  }
}

TEST_CASE("periodic rigid braids are exactly the twist powers") {
  CHECK(is_periodic_rigid(NormalForm::from_parts(3, 3, {})));
  CHECK(is_periodic_rigid(NormalForm::from_parts(4, -1, {})));
  CHECK(is_periodic_rigid(NormalForm::identity(3)));
  CHECK(!is_periodic_rigid(nf(3, "s1 s1")));
  CHECK(!is_periodic_rigid(nf(3, "s1 S2")));  // rigid, inf -1
  // non-rigid input with length >= 1 is a contract violation
  CHECK_THROWS_AS(is_periodic_rigid(NormalForm::from_parts(3, 0, {s(3, {1, 2})})),
                  std::invalid_argument);
}

TEST_CASE("certify requires rigid input of positive length") {
  CHECK_THROWS_AS(certify(NormalForm::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(certify(NormalForm::from_parts(3, 2, {})), std::invalid_argument);
  CHECK_THROWS_AS(certify(NormalForm::from_parts(3, 0, {s(3, {1, 2})})),
                  std::invalid_argument);
}

TEST_CASE("certified verdict carries both positions") {
  const auto x = NormalForm::from_parts(
      3, 0,
      {s(3, {2, 1}), s(3, {1}), s(3, {1, 2}), s(3, {2}), s(3, {2, 1}),
       s(3, {1}), s(3, {1, 2})});
  REQUIRE(x.is_rigid());
  const auto v = certify(x);
  CHECK(v.kind == VerdictKind::CertifiedPseudoAnosov);
  REQUIRE(v.position_xa.has_value());
  REQUIRE(v.position_xb.has_value());
  CHECK(*v.position_xa == 2);
  CHECK(*v.position_xb == 1);
  CHECK(!v.witness.has_value());
  CHECK(v.n == 3);
  CHECK(v.inf == 0);
  CHECK(v.canonical_length == 7);

  // soundness consistency: no preserved round curve up to k = n
  CHECK(preserved_round_curve_power(x, 3) == std::nullopt);

  // determinism
  CHECK(certify(x) == v);
}

TEST_CASE("reducibility witnesses in the fixed search order") {
  // sigma1^2: preserved round curve, found before any crossing-pair witness
  const auto v1 = certify(nf(3, "s1 s1"));
  CHECK(v1.kind == VerdictKind::ReducibilityWitness);
  REQUIRE(v1.witness.has_value());
  CHECK(*v1.witness == WitnessType::PreservedRoundCurve);
  REQUIRE(v1.curve.has_value());
  CHECK(v1.curve->k == 1);
  CHECK(v1.curve->curve == RoundCurve::make(3, 1, 2));
  CHECK(!v1.pair.has_value());

  // sigma1^5 at n=4: the curve witness again comes first
  const auto v2 = certify(nf(4, "s1 s1 s1 s1 s1"));
  CHECK(v2.kind == VerdictKind::ReducibilityWitness);
  CHECK(*v2.witness == WitnessType::PreservedRoundCurve);
  CHECK(v2.curve->curve == RoundCurve::make(4, 1, 2));

  // a single rigid block factor: Delta_{2,n} preserves the curve around 2..n
  const auto block = NormalForm::from_parts(
      4, 0, {SimpleBraid::half_twist_block(4, 2, 4)});
  REQUIRE(block.is_rigid());
  const auto v3 = certify(block);
  CHECK(v3.kind == VerdictKind::ReducibilityWitness);
  CHECK(*v3.witness == WitnessType::PreservedRoundCurve);
  CHECK(v3.curve->k == 1);
  CHECK(v3.curve->curve == RoundCurve::make(4, 2, 4));

  // the figure-eight braid is pseudo-Anosov but carries neither pattern;
  // its positive part has a never-crossing pair, so the verdict is a
  // (necessary-condition only) witness rather than Inconclusive
  const auto v4 = certify(nf(3, "s1 S2"));
  CHECK(v4.kind == VerdictKind::ReducibilityWitness);
  REQUIRE(v4.witness.has_value());
  CHECK(*v4.witness == WitnessType::NeverCrossingPair);
  REQUIRE(v4.pair.has_value());
  CHECK(*v4.pair == std::pair<int, int>{1, 3});
  CHECK(!v4.curve.has_value());
  CHECK(v4.inf == -1);
}

TEST_CASE("verdict JSON is stable") {
  const auto v = certify(nf(3, "s1 s1"));
  const auto json = verdict_to_json(v);
  CHECK(json == verdict_to_json(certify(nf(3, "s1 s1"))));
  CHECK(json.find("\"kind\": \"reducibility-witness\"") != std::string::npos);
  CHECK(json.find("\"type\": \"preserved-round-curve\"") != std::string::npos);
  CHECK(json.find("\"power\": 1") != std::string::npos);
  CHECK(json.back() == '\n');

  const auto x = NormalForm::from_parts(
      3, 0,
      {s(3, {2, 1}), s(3, {1}), s(3, {1, 2}), s(3, {2}), s(3, {2, 1}),
       s(3, {1}), s(3, {1, 2})});
  const auto cj = verdict_to_json(certify(x));
  CHECK(cj.find("\"kind\": \"certified-pseudo-anosov\"") != std::string::npos);
  CHECK(cj.find("\"xA\": 2") != std::string::npos);
  CHECK(cj.find("\"xB\": 1") != std::string::npos);
  CHECK(cj.find("\"witness\": null") != std::string::npos);
}

TEST_CASE("certified fraction grows with length") {
  // non-certified fraction is non-increasing (within 3 sigma) as l doubles
  const auto g = build_graph(3);
  const long samples = 1500;
  double prev_fail = 1.0, prev_sigma = 0.0;
  for (int l : {20, 40, 80}) {
    const auto rep = measure_pa_proportion(g, l, samples, 777, 2);
    REQUIRE(rep.ok);
    CHECK(rep.certified + rep.witness + rep.inconclusive == samples);
    const double fail = 1.0 - rep.proportion_certified;
    const double sigma =
        std::sqrt(std::max(fail * (1.0 - fail), 1e-12) / double(samples));
    CHECK(fail <= prev_fail + 3.0 * (sigma + prev_sigma));
    prev_fail = fail;
    prev_sigma = sigma;
  }
}
