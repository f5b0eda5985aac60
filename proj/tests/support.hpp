#pragma once

// Shared generators and fixtures for the unit and acceptance suites.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "levelalg/betti.hpp"
#include "levelalg/binomial.hpp"
#include "levelalg/hilbert.hpp"
#include "levelalg/monomial.hpp"

namespace levelalg::testing {

/// Random O-sequence (1, 3, h_2, ..., h_s) with 2 <= s <= max_socle and entries <= cap.
/// Half of the steps stay near the previous entry so that flat and slowly
/// moving stretches, where most of the rules live, show up often.
inline HVector random_o_sequence(std::mt19937_64& rng, int max_socle, Integer cap) {
  std::uniform_int_distribution<int> socle(2, max_socle);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> jitter(-3, 3);
  const int s = socle(rng);
  std::vector<Integer> h{1, 3};
  for (int t = 2; t <= s; ++t) {
    const Integer hi = std::min(cap, macaulay_bound(h.back(), t - 1));
    Integer v;
    if (coin(rng) == 0) {
      v = std::uniform_int_distribution<Integer>(1, hi)(rng);
    } else {
      v = std::clamp<Integer>(h.back() + jitter(rng), 1, hi);
    }
    h.push_back(v);
  }
  return HVector(h);
}

inline std::vector<HVector> random_o_sequences(std::size_t count, std::uint64_t seed, int max_socle = 8,
                                               Integer cap = 30) {
  std::mt19937_64 rng(seed);
  std::vector<HVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_o_sequence(rng, max_socle, cap));
  return out;
}

/// Random stable ideal of finite colength: random monomials, closed under
/// x_i * T / x_{m(T)} until stable, plus a power of the maximal ideal.
inline MonomialIdeal random_stable_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> degree(1, 6);
  std::vector<Monomial> gens;
  const int n = count(rng);
  int top = 0;
  for (int k = 0; k < n; ++k) {
    const int t = degree(rng);
    top = std::max(top, t);
    gens.push_back(monomial_at_rank(t, std::uniform_int_distribution<std::size_t>(0, monomial_count(t) - 1)(rng)));
  }
  while (true) {
    const MonomialIdeal ideal(gens);
    bool grew = false;
    for (const auto& g : ideal.generators()) {
      if (g.degree() == 0) continue;
      const int m = g.max_variable();
      for (int i = 1; i < m; ++i) {
        const Monomial u = g.divided_by(m).times(i);
        if (!ideal.contains(u)) {
          gens.push_back(u);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  const int cap = top + std::uniform_int_distribution<int>(0, 3)(rng);
  return MonomialIdeal(gens) + MonomialIdeal::maximal_power(cap);
}

inline std::vector<MonomialIdeal> random_stable_ideals(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_stable_ideal(rng));
  return out;
}

/// Every O-sequence (1, 3, ..., h_s) with s <= max_socle and entries <= cap.
inline std::vector<HVector> all_o_sequences(int max_socle, Integer cap) {
  std::vector<HVector> out;
  for (int s = 1; s <= max_socle; ++s) {
    auto part = enumerate_o_sequences(s, cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Minimal free resolutions of R/I^lex as printed in the literature, stored
/// as (q, shift, multiplicity) of the ideal.
struct PublishedTable {
  std::string name;
  HVector h;
  std::vector<std::tuple<int, int, Integer>> betti;
};

inline std::vector<PublishedTable> published_tables() {
  return {
      {"1,3,6,10,15,16,18",
       HVector({1, 3, 6, 10, 15, 16, 18}),
       {{0, 5, 5}, {0, 6, 1}, {0, 7, 21}, {1, 6, 6}, {1, 7, 2}, {1, 8, 39}, {2, 7, 2}, {2, 8, 1}, {2, 9, 18}}},
      {"1,3,5,6,6,6,6",
       HVector({1, 3, 5, 6, 6, 6, 6}),
       {{0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}, {0, 6, 1}, {0, 7, 6}, {1, 4, 1}, {1, 5, 2}, {1, 6, 2},
        {1, 7, 1}, {1, 8, 12}, {2, 6, 1}, {2, 7, 1}, {2, 9, 6}}},
      {"1,3,6,10,13,15,17,19,20",
       HVector({1, 3, 6, 10, 13, 15, 17, 19, 20}),
       {{0, 4, 2}, {0, 5, 1}, {0, 6, 1}, {0, 8, 1}, {0, 9, 22}, {1, 5, 1}, {1, 6, 2}, {1, 7, 1}, {1, 9, 2},
        {1, 10, 42}, {2, 7, 1}, {2, 10, 1}, {2, 11, 20}}},
      {"1,3,6,10,12,14,16,18,19,20",
       HVector({1, 3, 6, 10, 12, 14, 16, 18, 19, 20}),
       {{0, 4, 3}, {0, 5, 1}, {0, 8, 1}, {0, 9, 1}, {0, 10, 22}, {1, 5, 3}, {1, 6, 1}, {1, 9, 2}, {1, 10, 2},
        {1, 11, 42}, {2, 6, 1}, {2, 10, 1}, {2, 11, 1}, {2, 12, 20}}},
      {"1,3,6,10,15,16,18,20",
       HVector({1, 3, 6, 10, 15, 16, 18, 20}),
       {{0, 5, 5}, {0, 6, 1}, {0, 7, 1}, {0, 8, 22}, {1, 6, 6}, {1, 7, 2}, {1, 8, 1}, {1, 9, 42}, {2, 7, 2},
        {2, 8, 1}, {2, 10, 20}}},
  };
}

inline BettiDiagram to_diagram(const std::vector<std::tuple<int, int, Integer>>& triples) {
  BettiDiagram d;
  for (const auto& [q, shift, mult] : triples) d.add(q, shift, mult);
  return d;
}

}  // namespace levelalg::testing
