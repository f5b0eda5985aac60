#include "levelalg/oracle.hpp"

#include "levelalg/betti.hpp"
#include "levelalg/classifier.hpp"

#include <array>
#include <string>
#include <stdexcept>
#include <vector>

namespace levelalg::oracle {

namespace {

bool member(const std::vector<Monomial>& gens, int a, int b, int c) {
  for (const auto& g : gens) {
    if (g.exponents[0] <= a && g.exponents[1] <= b && g.exponents[2] <= c) return true;
  }
  return false;
}

template <typename Visit>
void for_each_monomial(int degree, Visit visit) {
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) visit(a, b, degree - a - b);
  }
}

// Saturating Pascal triangle, rows 0..kRows-1, columns 0..kExpansionMaxIndex.
constexpr int kRows = static_cast<int>(kExpansionLimit) + kExpansionMaxIndex + 2;
constexpr Integer kSaturated = Integer{1} << 50;

const std::vector<std::array<Integer, kExpansionMaxIndex + 1>>& pascal() {
  static const auto table = [] {
    std::vector<std::array<Integer, kExpansionMaxIndex + 1>> rows(kRows);
    for (int m = 0; m < kRows; ++m) {
      rows[m].fill(0);
      rows[m][0] = 1;
      for (int k = 1; k <= kExpansionMaxIndex && k <= m; ++k) {
        const Integer sum = rows[m - 1][k - 1] + rows[m - 1][k];
        rows[m][k] = sum > kSaturated ? kSaturated : sum;
      }
    }
    return rows;
  }();
  return table;
}

struct Search {
  std::vector<BinomialTerm> partial;
  std::vector<std::vector<BinomialTerm>> found;

  // Chooses the term for bottom index t with top strictly below `top_limit`.
  void run(Integer remaining, int t, Integer top_limit) {
    if (remaining == 0) {
      found.push_back(partial);
      return;
    }
    if (t < 1) return;
    const auto& rows = pascal();
    for (Integer top = t; top < top_limit && top < kRows; ++top) {
      const Integer value = rows[static_cast<std::size_t>(top)][static_cast<std::size_t>(t)];
      if (value > remaining) break;
      partial.push_back({top, t});
      run(remaining - value, t - 1, top);
      partial.pop_back();
    }
  }
};

}  // namespace

Integer colon_dim_direct(const MonomialIdeal& ideal, int var, int degree) {
  if (var < 1 || var > kVariables) throw std::invalid_argument("variable index outside 1..3");
  const auto gens = ideal.generators();
  Integer count = 0;
  for_each_monomial(degree, [&](int a, int b, int c) {
    if (member(gens, a, b, c)) return;
    std::array<int, 3> e{a, b, c};
    ++e[static_cast<std::size_t>(var - 1)];
    if (member(gens, e[0], e[1], e[2])) ++count;
  });
  return count;
}

Integer socle_dim_direct(const MonomialIdeal& ideal, int degree) {
  const auto gens = ideal.generators();
  Integer count = 0;
  for_each_monomial(degree, [&](int a, int b, int c) {
    if (member(gens, a, b, c)) return;
    if (member(gens, a + 1, b, c) && member(gens, a, b + 1, c) && member(gens, a, b, c + 1)) ++count;
  });
  return count;
}

Integer quotient_dim_direct(const MonomialIdeal& ideal, int degree) {
  const auto gens = ideal.generators();
  Integer count = 0;
  for_each_monomial(degree, [&](int a, int b, int c) {
    if (!member(gens, a, b, c)) ++count;
  });
  return count;
}

BinomialExpansion expansion_exhaustive(Integer n, int i) {
  if (n < 0 || n > kExpansionLimit || i < 1 || i > kExpansionMaxIndex) {
    throw std::invalid_argument("exhaustive expansion is limited to 0 <= n <= 5000, 1 <= i <= 8");
  }
  Search search;
  search.run(n, i, kRows);
  if (search.found.size() != 1) {
    throw std::logic_error("expected exactly one binomial representation of " + std::to_string(n) + ", found " +
                           std::to_string(search.found.size()));
  }
  return BinomialExpansion(std::move(search.found.front()));
}

std::set<HVector> osequence_filter(int socle_degree, Integer cap) {
  if (socle_degree < 1 || socle_degree > kFilterMaxSocle || cap < 0 || cap > kFilterMaxCap) {
    throw std::invalid_argument("osequence_filter is limited to 1 <= s <= 4, cap <= 10");
  }
  std::set<HVector> out;
  std::vector<Integer> v(static_cast<std::size_t>(socle_degree) + 1, 0);
  v[0] = 1;
  v[1] = 3;
  if (cap < 3) return out;
  while (true) {
    if (v.back() > 0 && is_o_sequence(v)) out.insert(HVector(v));
    std::size_t p = v.size() - 1;
    while (p >= 2 && v[p] == cap) v[p--] = 0;
    if (p < 2) break;
    ++v[p];
  }
  return out;
}

CrossCheckReport cross_check(const HVector& h) {
  CrossCheckReport report;
  auto expect = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.failures.push_back(what);
  };

  const int s = h.socle_degree();
  const MonomialIdeal lex = lex_segment_ideal(h);
  expect(is_stable(lex), "lex ideal is not stable");
  const BettiDiagram betti = ek_betti(lex);

  const auto hf = quotient_hf(lex, s + 1);
  const auto restricted = restricted_hf(lex, s + 1);
  const auto socle = socle_dims(lex);
  for (int t = 0; t <= s + 1; ++t) {
    const auto idx = static_cast<std::size_t>(t);
    const std::string at = " at degree " + std::to_string(t);
    expect(hf[idx] == h[t], "quotient Hilbert function differs from h" + at);
    expect(quotient_dim_direct(lex, t) == h[t], "direct quotient count differs from h" + at);
    if (t >= 1) {
      expect(restricted[idx] == green_bound(h[t], t), "restriction differs from Green bound" + at);
      expect(count_gens_div_x3(lex, t) == colon_dim_direct(lex, 3, t - 1),
             "x3-divisible generators differ from direct colon count" + at);
    }
    const auto it = socle.find(t);
    const Integer socle_dim = it == socle.end() ? 0 : it->second;
    expect(socle_dim == socle_dim_direct(lex, t), "socle count differs from direct count" + at);
    expect(betti.at(2, t + 3) == socle_dim, "beta_2 differs from socle dimension" + at);
  }
  expect(numerator_check(lex), "Hilbert series numerator does not match the Betti numbers");

  for (int d = 1; d <= s; ++d) {
    const BettiWindow w = lex_betti_window(h, d);
    expect(w.beta1_d2 == betti.at(1, d + 2) && w.beta2_d2 == betti.at(2, d + 2) && w.beta2_d3 == betti.at(2, d + 3),
           "Betti window differs from Eliahou-Kervaire at d = " + std::to_string(d));
  }

  for (int t = 1; t <= std::min(s, kExpansionMaxIndex); ++t) {
    if (h[t] > kExpansionLimit) continue;
    expect(expansion_exhaustive(h[t], t) == macaulay_expansion(h[t], t),
           "greedy expansion differs from exhaustive search at degree " + std::to_string(t));
  }

  if (h.codim3() && s >= 2) {
    const Verdict v = classify(h);
    for (const auto& cert : v.certificates) {
      expect(replay(cert), std::string("certificate ") + std::string(rule_id(cert.rule)) + " does not replay");
      expect(verdict_of(cert.rule) == v.kind, "certificate rule disagrees with the verdict");
    }
    expect(!(is_differentiable(h) && !obstructions(h).empty()), "h is differentiable yet an obstruction fired");
  }
  return report;
}

}  // namespace levelalg::oracle
