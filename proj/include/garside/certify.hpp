#pragma once

#include "garside/curves.hpp"

#include <optional>

namespace garside {

enum class VerdictKind { CertifiedPseudoAnosov, ReducibilityWitness, Inconclusive };
enum class WitnessType { PreservedRoundCurve, NeverCrossingPair, AlwaysCrossingPair };

// Outcome of certifying a rigid braid. Certification (both canonical
// patterns present in the factor sequence) is a proof of the pseudo-Anosov
// type; a reducibility witness is necessary-condition evidence only, never a
// proof; anything else is honestly inconclusive.
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;

  // Present iff kind == ReducibilityWitness.
  std::optional<WitnessType> witness;
  std::optional<PreservedCurve> curve;          // PreservedRoundCurve detail
  std::optional<std::pair<int, int>> pair;      // crossing-pair detail

  // Present iff kind == CertifiedPseudoAnosov: 1-based factor positions.
  std::optional<int> position_xa;
  std::optional<int> position_xb;

  int n = 0;
  long inf = 0;
  int canonical_length = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// First 1-based position where the pattern occurs consecutively in the
// factor sequence of x; factors compare by permutation. With up_to_flip, the
// flipped copy of the pattern matches as well (the reading that treats
// factor sequences modulo conjugation by the half twist).
std::optional<int> contains_subword(const NormalForm& x,
                                    const std::vector<SimpleBraid>& pattern,
                                    bool up_to_flip = false);

// A rigid braid is periodic iff it is a power of the half twist, i.e. has
// canonical length 0. Requires x rigid or of canonical length 0.
bool is_periodic_rigid(const NormalForm& x);

struct CertifyOptions {
  bool subwords_up_to_flip = false;  // pattern matching modulo the flip
  int curve_power_max = 0;           // 0: default n
};

// Three-valued certification of a rigid braid with canonical length >= 1.
// Witness search order is fixed: preserved round curves (smallest power,
// then lexicographic curve), then never-crossing pairs, then
// always-crossing pairs, so identical inputs yield identical verdicts.
Verdict certify(const NormalForm& x, const CertifyOptions& opts = {});

}  // namespace garside
