#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levelalg/binomial.hpp"
#include "levelalg/hilbert.hpp"

namespace levelalg {

/// Obstructions and witnesses for levelness of a codimension-3 h-vector.
/// All Betti numbers below are those of the lex-segment ideal.
enum class Rule {
  Cancellation,          // R-CANCEL: beta_{2,d+2} > beta_{1,d+2}
  EqualWithNextSocle,    // R-31: beta_{1,d+2} = beta_{2,d+2} > 0 and beta_{2,d+3} > 0
  EqualWrongShape,       // R-33: equal betas, h neither constant at d+1 nor strictly rising
  EqualUnevenGrowth,     // R-37: equal betas, strictly rising, delta h_d != delta h_{d+1}
  FlatRiseGreen,         // R-42: h_{d-1} = h_d < h_{d+1}, green(h_{d+1}) <= 2 delta h_{d+1}
  FlatRiseSmall,         // R-44A: h_{d-1} = h_d < h_{d+1} = h_s, h_d <= 3d+2
  DropFlatSmall,         // R-AS: h_{d-1} > h_d = h_{d+1} = h_s, h_d <= 2d+3
  Differentiable,        // R-LEVEL-DIFF: the first difference is an O-sequence
};

std::string_view rule_id(Rule rule);
std::optional<Rule> rule_from_id(std::string_view id);

enum class VerdictKind { Level, NotLevel, Unknown };

std::string_view to_string(VerdictKind kind);
VerdictKind verdict_of(Rule rule);

/// One fired rule. `quantities` holds every integer the rule compared, under
/// the names beta1_d2, beta2_d2, beta2_d3, green_hd1, delta_hd, delta_hd1,
/// bound and h_d.
struct Certificate {
  Rule rule;
  int d = 0;
  std::map<std::string, Integer> quantities;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Re-evaluates the rule's inequality from the stored quantities alone.
bool replay(const Certificate& cert);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// Every obstruction that fired for NotLevel; the single witness for Level.
  std::vector<Certificate> certificates;
};

/// Every obstruction that fires at some 2 <= d <= s-1 (R-44A and R-AS only at
/// d = s-1). Throws InvalidHVector unless h is an O-sequence with h_1 = 3 and s >= 2.
std::vector<Certificate> obstructions(const HVector& h);

/// R-LEVEL-DIFF witness: d is the position where the first difference comes
/// closest to its Macaulay bound. Empty when h is not differentiable.
std::optional<Certificate> differentiable_witness(const HVector& h);

/// NotLevel when an obstruction fires, else Level when differentiable, else Unknown.
Verdict classify(const HVector& h);

struct LiftedHVector {
  HVector hvector;
  /// Carried over from the base; nothing here checks it.
  bool asserted_level = false;
};

/// Adds a general form of degree s to the inverse system of a level algebra in
/// three variables: H_i = min{h_i + C(2+s-i, s-i), C(2+i, i)} for i = 1..s.
LiftedHVector iarrobino_lift(const HVector& base, bool base_is_level);

struct FlatRiseConstruction {
  HVector base;
  LiftedHVector lifted;
};

/// Level h-vector with H_{d-1} = H_d = 3d + ell < H_{d+1} = 3d + ell + 1, obtained
/// by lifting the differentiable base h_i = min{C(i+2,2), 3i + ell - 3}, i <= d+1.
/// Throws std::domain_error if d < 2, ell < 3, the base is not differentiable or
/// the lift misses those values.
FlatRiseConstruction construct_flat_rise(int d, int ell);

}  // namespace levelalg
