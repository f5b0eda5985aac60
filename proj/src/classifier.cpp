#include "levelalg/classifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "levelalg/betti.hpp"
#include "levelalg/monomial.hpp"

namespace levelalg {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 8> kRuleIds{{
    {Rule::Cancellation, "R-CANCEL"},
    {Rule::EqualWithNextSocle, "R-31"},
    {Rule::EqualWrongShape, "R-33"},
    {Rule::EqualUnevenGrowth, "R-37"},
    {Rule::FlatRiseGreen, "R-42"},
    {Rule::FlatRiseSmall, "R-44A"},
    {Rule::DropFlatSmall, "R-AS"},
    {Rule::Differentiable, "R-LEVEL-DIFF"},
}};

void require_classifiable(const HVector& h) {
  if (auto v = check_o_sequence(h.entries())) throw InvalidHVector(v->message(), v);
  if (!h.codim3()) throw InvalidHVector("classification needs h_1 = 3");
  if (h.socle_degree() < 2) throw InvalidHVector("classification needs socle degree >= 2");
}

// The closed forms must agree with the Eliahou-Kervaire count wherever they apply.
void cross_check_closed_forms(const HVector& h, const BettiDiagram& betti) {
  for (int d = 1; d <= h.socle_degree(); ++d) {
    const BettiWindow w = lex_betti_window(h, d);
    if (!w.closed_form) continue;
    const BettiWindow direct{betti.at(1, d + 2), betti.at(2, d + 2), betti.at(2, d + 3), true};
    if (w != direct) {
      throw std::logic_error("closed-form lex Betti numbers disagree with Eliahou-Kervaire at d = " +
                             std::to_string(d) + " for " + to_string(h));
    }
  }
}

}  // namespace

std::string_view rule_id(Rule rule) {
  for (const auto& [r, id] : kRuleIds) {
    if (r == rule) return id;
  }
  throw std::logic_error("unknown rule");
}

std::optional<Rule> rule_from_id(std::string_view id) {
  for (const auto& [r, name] : kRuleIds) {
    if (name == id) return r;
  }
  return std::nullopt;
}

std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Level:
      return "Level";
    case VerdictKind::NotLevel:
      return "NotLevel";
    case VerdictKind::Unknown:
      break;
  }
  return "Unknown";
}

VerdictKind verdict_of(Rule rule) {
  return rule == Rule::Differentiable ? VerdictKind::Level : VerdictKind::NotLevel;
}

bool replay(const Certificate& cert) {
  const auto q = [&](const char* name) { return cert.quantities.at(name); };
  const int d = cert.d;
  switch (cert.rule) {
    case Rule::Cancellation:
      return q("beta2_d2") > q("beta1_d2");
    case Rule::EqualWithNextSocle:
      return q("beta1_d2") == q("beta2_d2") && q("beta2_d2") > 0 && q("beta2_d3") > 0;
    case Rule::EqualWrongShape: {
      const bool constant_at_d1 = q("delta_hd") == 0 && q("delta_hd1") == 0 && q("h_d") == q("bound");
      const bool rising = q("delta_hd") > 0 && q("delta_hd1") > 0;
      return q("beta1_d2") == q("beta2_d2") && q("beta2_d2") > 0 && q("bound") == d + 1 && !constant_at_d1 &&
             !rising;
    }
    case Rule::EqualUnevenGrowth:
      return q("beta1_d2") == q("beta2_d2") && q("beta2_d2") > 0 && q("delta_hd") > 0 && q("delta_hd1") > 0 &&
             q("delta_hd") != q("delta_hd1");
    case Rule::FlatRiseGreen:
      return q("delta_hd") == 0 && q("delta_hd1") > 0 && q("bound") == 2 * q("delta_hd1") &&
             q("green_hd1") <= q("bound");
    case Rule::FlatRiseSmall:
      return q("delta_hd") == 0 && q("delta_hd1") > 0 && q("bound") == 3 * d + 2 && q("h_d") <= q("bound");
    case Rule::DropFlatSmall:
      return q("delta_hd") < 0 && q("delta_hd1") == 0 && q("bound") == 2 * d + 3 && q("h_d") <= q("bound");
    case Rule::Differentiable:
      return d >= 1 && q("delta_hd") >= 0 && q("delta_hd1") >= 0 && q("bound") == macaulay_bound(q("delta_hd"), d) &&
             q("delta_hd1") <= q("bound");
  }
  return false;
}

std::vector<Certificate> obstructions(const HVector& h) {
  require_classifiable(h);
  const BettiDiagram betti = ek_betti(lex_segment_ideal(h));
  cross_check_closed_forms(h, betti);

  const int s = h.socle_degree();
  std::vector<Certificate> out;
  for (int d = 2; d <= s - 1; ++d) {
    const Integer prev = h[d - 1];
    const Integer cur = h[d];
    const Integer next = h[d + 1];
    const Integer delta_d = cur - prev;
    const Integer delta_d1 = next - cur;
    const Integer b1 = betti.at(1, d + 2);
    const Integer b2 = betti.at(2, d + 2);
    const Integer b2_next = betti.at(2, d + 3);

    if (b2 > b1) {
      out.push_back({Rule::Cancellation, d, {{"beta1_d2", b1}, {"beta2_d2", b2}}});
    }
    if (b1 == b2 && b2 > 0) {
      if (b2_next > 0) {
        out.push_back({Rule::EqualWithNextSocle, d, {{"beta1_d2", b1}, {"beta2_d2", b2}, {"beta2_d3", b2_next}}});
      }
      const bool constant_at_d1 = prev == cur && cur == next && cur == d + 1;
      const bool rising = prev < cur && cur < next;
      if (!constant_at_d1 && !rising) {
        out.push_back({Rule::EqualWrongShape,
                       d,
                       {{"beta1_d2", b1},
                        {"beta2_d2", b2},
                        {"delta_hd", delta_d},
                        {"delta_hd1", delta_d1},
                        {"h_d", cur},
                        {"bound", d + 1}}});
      }
      if (rising && delta_d != delta_d1) {
        out.push_back({Rule::EqualUnevenGrowth,
                       d,
                       {{"beta1_d2", b1}, {"beta2_d2", b2}, {"delta_hd", delta_d}, {"delta_hd1", delta_d1}}});
      }
    }
    if (prev == cur && cur < next) {
      const Integer green = green_bound(next, d + 1);
      if (green <= 2 * delta_d1) {
        out.push_back({Rule::FlatRiseGreen,
                       d,
                       {{"delta_hd", delta_d}, {"delta_hd1", delta_d1}, {"green_hd1", green}, {"bound", 2 * delta_d1}}});
      }
      if (d + 1 == s && cur <= 3 * d + 2) {
        out.push_back({Rule::FlatRiseSmall,
                       d,
                       {{"delta_hd", delta_d}, {"delta_hd1", delta_d1}, {"h_d", cur}, {"bound", 3 * d + 2}}});
      }
    }
    if (d + 1 == s && prev > cur && cur == next && cur <= 2 * d + 3) {
      out.push_back({Rule::DropFlatSmall,
                     d,
                     {{"delta_hd", delta_d}, {"delta_hd1", delta_d1}, {"h_d", cur}, {"bound", 2 * d + 3}}});
    }
  }
  return out;
}

std::optional<Certificate> differentiable_witness(const HVector& h) {
  require_classifiable(h);
  const auto delta = first_difference(h);
  if (!is_o_sequence(delta)) return std::nullopt;

  std::optional<Certificate> best;
  Integer best_slack = 0;
  for (std::size_t i = 1; i + 1 < delta.size(); ++i) {
    const int d = static_cast<int>(i);
    const Integer bound = macaulay_bound(delta[i], d);
    const Integer slack = bound - delta[i + 1];
    if (!best || slack < best_slack) {
      best_slack = slack;
      best = Certificate{Rule::Differentiable, d, {{"delta_hd", delta[i]}, {"delta_hd1", delta[i + 1]}, {"bound", bound}}};
    }
  }
  return best;
}

Verdict classify(const HVector& h) {
  Verdict v;
  v.certificates = obstructions(h);
  if (!v.certificates.empty()) {
    v.kind = VerdictKind::NotLevel;
    return v;
  }
  if (auto witness = differentiable_witness(h)) {
    v.kind = VerdictKind::Level;
    v.certificates.push_back(std::move(*witness));
  }
  return v;
}

LiftedHVector iarrobino_lift(const HVector& base, bool base_is_level) {
  const int s = base.socle_degree();
  std::vector<Integer> lifted{1};
  for (int i = 1; i <= s; ++i) {
    lifted.push_back(std::min(checked_add(base[i], binomial(2 + s - i, s - i)), binomial(2 + i, i)));
  }
  return {HVector(std::move(lifted)), base_is_level};
}

FlatRiseConstruction construct_flat_rise(int d, int ell) {
  if (d < 2 || ell < 3) throw std::domain_error("flat-rise construction needs d >= 2 and ell >= 3");
  std::vector<Integer> entries{1};
  for (int i = 1; i <= d + 1; ++i) {
    entries.push_back(std::min(binomial(i + 2, 2), static_cast<Integer>(3) * i + ell - 3));
  }
  HVector base(std::move(entries));
  if (!is_differentiable(base)) {
    throw std::domain_error("base " + to_string(base) + " is not differentiable");
  }
  LiftedHVector lifted = iarrobino_lift(base, true);
  const HVector& H = lifted.hvector;
  const Integer flat = static_cast<Integer>(3) * d + ell;
  if (H[d - 1] != flat || H[d] != flat || H[d + 1] != flat + 1 || !is_o_sequence(H)) {
    throw std::domain_error("lift " + to_string(H) + " does not satisfy H_{d-1} = H_d = " + std::to_string(flat) +
                            " < H_{d+1} = " + std::to_string(flat + 1));
  }
  return {std::move(base), std::move(lifted)};
}

}  // namespace levelalg
