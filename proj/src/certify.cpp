#include "garside/certify.hpp"

#include <stdexcept>

namespace garside {

std::optional<int> contains_subword(const NormalForm& x,
                                    const std::vector<SimpleBraid>& pattern,
                                    bool up_to_flip) {
  if (pattern.empty()) throw std::invalid_argument("contains_subword: empty pattern");
  const auto& fs = x.factors();
  const int r = static_cast<int>(fs.size());
  const int j = static_cast<int>(pattern.size());
  std::vector<SimpleBraid> flipped;
  if (up_to_flip) {
    flipped.reserve(pattern.size());
    for (const auto& s : pattern) flipped.push_back(s.flip());
  }
  for (int p = 0; p + j <= r; ++p) {
    bool plain = true;
    for (int t = 0; t < j && plain; ++t) plain = (fs[p + t] == pattern[t]);
    if (plain) return p + 1;
    if (up_to_flip) {
      bool flip_match = true;
      for (int t = 0; t < j && flip_match; ++t) flip_match = (fs[p + t] == flipped[t]);
      if (flip_match) return p + 1;
    }
  }
  return std::nullopt;
}

bool is_periodic_rigid(const NormalForm& x) {
  if (x.canonical_length() == 0) return true;  // a power of the half twist
  if (!is_rigid(x)) throw std::invalid_argument("is_periodic_rigid: braid is not rigid");
  return false;
}

Verdict certify(const NormalForm& x, const CertifyOptions& opts) {
  if (x.canonical_length() == 0)
    throw std::invalid_argument("certify: periodic braid (canonical length 0)");
  if (!is_rigid(x)) throw std::invalid_argument("certify: braid is not rigid");

  Verdict v;
  v.n = x.n();
  v.inf = x.inf();
  v.canonical_length = x.canonical_length();

  const auto pos_a =
      contains_subword(x, pattern_xa(x.n()).factors(), opts.subwords_up_to_flip);
  const auto pos_b =
      contains_subword(x, pattern_xb(x.n()).factors(), opts.subwords_up_to_flip);
  if (pos_a && pos_b) {
    v.kind = VerdictKind::CertifiedPseudoAnosov;
    v.position_xa = *pos_a;
    v.position_xb = *pos_b;
    return v;
  }

  const int k_max = opts.curve_power_max > 0 ? opts.curve_power_max : x.n();
  if (auto pc = preserved_round_curve_power(x, k_max)) {
    v.kind = VerdictKind::ReducibilityWitness;
    v.witness = WitnessType::PreservedRoundCurve;
    v.curve = *pc;
    return v;
  }

  const CrossingProfile profile = crossing_profile(x.factors());
  if (auto never = profile.never_crossing_pairs(); !never.empty()) {
    v.kind = VerdictKind::ReducibilityWitness;
    v.witness = WitnessType::NeverCrossingPair;
    v.pair = never.front();
    return v;
  }
  if (auto always = profile.always_crossing_pairs(); !always.empty()) {
    v.kind = VerdictKind::ReducibilityWitness;
    v.witness = WitnessType::AlwaysCrossingPair;
    v.pair = always.front();
    return v;
  }

  v.kind = VerdictKind::Inconclusive;
  return v;
}

}  // namespace garside
