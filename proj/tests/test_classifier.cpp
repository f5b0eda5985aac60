#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "levelalg/betti.hpp"
#include "levelalg/classifier.hpp"
#include "support.hpp"

using namespace levelalg;

namespace {

const Certificate* find(const Verdict& v, Rule rule, int d) {
  for (const auto& c : v.certificates)
    if (c.rule == rule && c.d == d) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("rule identifiers round-trip") {
  for (Rule r : {Rule::Cancellation, Rule::EqualWithNextSocle, Rule::EqualWrongShape, Rule::EqualUnevenGrowth,
                 Rule::FlatRiseGreen, Rule::FlatRiseSmall, Rule::DropFlatSmall, Rule::Differentiable})
    CHECK(rule_from_id(rule_id(r)) == r);
  CHECK(rule_id(Rule::EqualWithNextSocle) == "R-31");
  CHECK_FALSE(rule_from_id("R-99").has_value());
  CHECK(verdict_of(Rule::Differentiable) == VerdictKind::Level);
  CHECK(verdict_of(Rule::FlatRiseGreen) == VerdictKind::NotLevel);
  CHECK(to_string(VerdictKind::Unknown) == "Unknown");
}

TEST_CASE("flat rise with next socle is not level") {
  const auto v = classify(HVector({1, 3, 6, 10, 15, 16, 18}));
  CHECK(v.kind == VerdictKind::NotLevel);
  const auto* c = find(v, Rule::EqualWithNextSocle, 5);
  REQUIRE(c != nullptr);
  CHECK(c->quantities.at("beta1_d2") == 2);
  CHECK(c->quantities.at("beta2_d2") == 2);
  CHECK(c->quantities.at("beta2_d3") == 1);
}

TEST_CASE("uneven growth is not level") {
  const auto v = classify(HVector({1, 3, 6, 10, 15, 16, 18, 20}));
  CHECK(v.kind == VerdictKind::NotLevel);
  const auto* c = find(v, Rule::EqualUnevenGrowth, 5);
  REQUIRE(c != nullptr);
  CHECK(c->quantities.at("delta_hd") == 1);
  CHECK(c->quantities.at("delta_hd1") == 2);
}

TEST_CASE("flat rise under the green bound is not level") {
  const auto v = classify(HVector({1, 3, 6, 10, 15, 15, 16}));
  CHECK(v.kind == VerdictKind::NotLevel);
  const auto* c = find(v, Rule::FlatRiseGreen, 5);
  REQUIRE(c != nullptr);
  CHECK(c->quantities.at("green_hd1") == 2);
  CHECK(c->quantities.at("bound") == 2);
}

TEST_CASE("differentiable vectors are level") {
  for (const auto& h : {HVector({1, 3, 5, 6, 6, 6, 6}), HVector({1, 3, 6, 10, 13, 15, 17, 19, 20})}) {
    const auto v = classify(h);
    CHECK(v.kind == VerdictKind::Level);
    REQUIRE(v.certificates.size() == 1);
    CHECK(v.certificates[0].rule == Rule::Differentiable);
    CHECK(replay(v.certificates[0]));
  }
}

TEST_CASE("constant stretch at d+1 is exempt from the shape rule") {
  const HVector h({1, 3, 5, 6, 6, 6, 6});
  const auto w = lex_betti_window(h, 5);
  CHECK(w.beta1_d2 == 1);
  CHECK(w.beta2_d2 == 1);
  CHECK(obstructions(h).empty());
  // Top-degree socle: beta_{2,9} = 6 > beta_{1,9} = 0 sits at d = s and must not count.
  const auto full = ek_betti(lex_segment_ideal(h));
  CHECK(full.at(2, 9) == 6);
  CHECK(full.at(1, 9) == 0);
}

TEST_CASE("classification input errors") {
  CHECK_THROWS_AS(classify(HVector({1, 3, 7})), InvalidHVector);
  CHECK_THROWS_AS(classify(HVector({1, 2, 3})), InvalidHVector);
  CHECK_THROWS_AS(classify(HVector({1, 3})), InvalidHVector);
}

TEST_CASE("replay rejects tampered certificates") {
  const auto v = classify(HVector({1, 3, 6, 10, 15, 16, 18}));
  for (auto c : v.certificates) {
    REQUIRE(replay(c));
    if (c.rule == Rule::EqualWithNextSocle) {
      c.quantities["beta2_d3"] = 0;
      CHECK_FALSE(replay(c));
    }
    if (c.rule == Rule::EqualUnevenGrowth) {
      c.quantities["delta_hd1"] = c.quantities["delta_hd"];
      CHECK_FALSE(replay(c));
    }
  }
  Certificate bogus{Rule::FlatRiseSmall, 5, {{"delta_hd", 0}, {"delta_hd1", 1}, {"h_d", 15}, {"bound", 99}}};
  CHECK_FALSE(replay(bogus));
}

TEST_CASE("soundness, replay and the equal-Betti dichotomy over all small vectors") {
  std::size_t level = 0, not_level = 0;
  for (int s = 2; s <= 7; ++s) {
    for (const auto& h : enumerate_o_sequences(s, 25)) {
      const auto obs = obstructions(h);
      const bool diff = is_differentiable(h);
      REQUIRE_MESSAGE(!(diff && !obs.empty()), to_string(h));
      const auto v = classify(h);
      REQUIRE(v.kind == (!obs.empty() ? VerdictKind::NotLevel : diff ? VerdictKind::Level : VerdictKind::Unknown));
      for (const auto& c : v.certificates) {
        REQUIRE(replay(c));
        if (verdict_of(c.rule) == VerdictKind::NotLevel) REQUIRE(c.d < s);
        if (c.rule == Rule::FlatRiseSmall || c.rule == Rule::DropFlatSmall) REQUIRE(c.d + 1 == s);
      }
      if (v.kind != VerdictKind::NotLevel) {
        const auto full = ek_betti(lex_segment_ideal(h));
        for (int d = 2; d < s; ++d) {
          const Integer b1 = full.at(1, d + 2), b2 = full.at(2, d + 2);
          if (b1 != b2 || b1 == 0) continue;
          const bool constant = h[d - 1] == d + 1 && h[d] == d + 1 && h[d + 1] == d + 1;
          const bool even = h[d - 1] < h[d] && h[d] < h[d + 1] && h[d] - h[d - 1] == h[d + 1] - h[d];
          REQUIRE_MESSAGE((constant || even), to_string(h));
        }
      }
      level += v.kind == VerdictKind::Level;
      not_level += v.kind == VerdictKind::NotLevel;
    }
  }
  CHECK(level > 0);
  CHECK(not_level > 0);
}

TEST_CASE("Iarrobino lift examples") {
  const auto lift = iarrobino_lift(HVector({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 58, 61, 64}), true);
  CHECK(lift.hvector == HVector({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 64, 64, 65}));
  CHECK(lift.asserted_level);
  CHECK(iarrobino_lift(HVector({1, 3, 3}), false).hvector == HVector({1, 3, 4}));
  CHECK_FALSE(iarrobino_lift(HVector({1, 3, 3}), false).asserted_level);
  CHECK(iarrobino_lift(HVector({1, 3, 6, 10, 15}), true).hvector == HVector({1, 3, 6, 10, 15}));
}

TEST_CASE("flat-rise construction") {
  const auto c = construct_flat_rise(11, 31);
  CHECK(c.base == HVector({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 58, 61, 64}));
  CHECK(c.lifted.hvector == HVector({1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 64, 64, 65}));
  CHECK(c.lifted.asserted_level);
  // Base (1,3,6,9) lifts to (1,3,6,10): the flat stretch cannot appear this low.
  CHECK_THROWS_AS(construct_flat_rise(2, 3), std::domain_error);
  CHECK_THROWS_AS(construct_flat_rise(1, 5), std::domain_error);
  CHECK_THROWS_AS(construct_flat_rise(4, 2), std::domain_error);
}

TEST_CASE("every successful flat-rise construction meets its contract and is never refuted") {
  int built = 0;
  for (int d = 2; d <= 14; ++d) {
    for (int ell = 3; ell <= 45; ++ell) {
      FlatRiseConstruction c;
      try {
        c = construct_flat_rise(d, ell);
      } catch (const std::domain_error&) {
        continue;
      }
      ++built;
      const auto& H = c.lifted.hvector;
      REQUIRE(is_differentiable(c.base));
      REQUIRE(H.socle_degree() == d + 1);
      REQUIRE(H[d - 1] == 3 * d + ell);
      REQUIRE(H[d] == 3 * d + ell);
      REQUIRE(H[d + 1] == 3 * d + ell + 1);
      REQUIRE(is_o_sequence(H));
      REQUIRE(classify(H).kind != VerdictKind::NotLevel);
    }
  }
  CHECK(built > 0);
}

TEST_CASE("lifts of differentiable vectors are never refuted") {
  for (const auto& base : testing::random_o_sequences(400, 0x11f7)) {
    if (!is_differentiable(base)) continue;
    const auto lift = iarrobino_lift(base, true);
    REQUIRE(is_o_sequence(lift.hvector));
    if (lift.hvector.socle_degree() >= 2) REQUIRE(classify(lift.hvector).kind != VerdictKind::NotLevel);
  }
}
