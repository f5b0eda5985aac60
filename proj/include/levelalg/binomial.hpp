#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace levelalg {

/// Exact integer type used for dimensions, bounds and Betti numbers.
/// Arithmetic that would leave its range throws std::overflow_error.
using Integer = std::int64_t;

/// C(m, k) with C(m, k) = 0 whenever m < k or k < 0.
Integer binomial(Integer m, Integer k);

/// True iff C(m, k) > cap. Never overflows, whatever the size of C(m, k).
bool binomial_exceeds(Integer m, Integer k, Integer cap);

Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

struct BinomialTerm {
  Integer top = 0;
  int bottom = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// Macaulay representation n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1. The empty expansion is 0.
class BinomialExpansion {
 public:
  BinomialExpansion() = default;

  /// Throws std::invalid_argument unless `terms` satisfies the invariants.
  explicit BinomialExpansion(std::vector<BinomialTerm> terms);

  const std::vector<BinomialTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  Integer value() const;

  friend bool operator==(const BinomialExpansion&, const BinomialExpansion&) = default;

 private:
  std::vector<BinomialTerm> terms_;
};

/// Greedy i-binomial expansion of n. Throws std::domain_error for n < 0 or i < 1.
BinomialExpansion macaulay_expansion(Integer n, int i);

/// Sum over terms of C(n_t + a, t + b).
Integer shift(const BinomialExpansion& e, int a, int b);

/// ((h)_(d))^1_1: the largest admissible h_{d+1} after h_d = h.
Integer macaulay_bound(Integer h, int d);

/// ((h)_(d))^{-1}_0: the bound on the Hilbert function of R/(I, L) in degree d
/// for a general linear form L, attained by lex-segment ideals.
Integer green_bound(Integer h, int d);

/// green_bound(c, d) - macaulay_bound(c, d) + c. Vanishes whenever d < c < C(d+2, 2).
Integer green_macaulay_defect(Integer c, int d);

/// "C(7,6)+C(6,5)+C(4,4)"; the empty expansion renders as "0".
std::string to_string(const BinomialExpansion& e);

}  // namespace levelalg
