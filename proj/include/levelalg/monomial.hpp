#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "levelalg/binomial.hpp"
#include "levelalg/hilbert.hpp"

namespace levelalg {

inline constexpr int kVariables = 3;

/// x1^a1 * x2^a2 * x3^a3. Variables are numbered 1..3 in the public API.
struct Monomial {
  std::array<int, kVariables> exponents{};

  static Monomial variable(int var);

  int degree() const { return exponents[0] + exponents[1] + exponents[2]; }
  int exponent(int var) const { return exponents[static_cast<std::size_t>(var - 1)]; }

  /// m(T): the largest index of a variable dividing T. Throws std::logic_error on 1.
  int max_variable() const;

  bool divides(const Monomial& other) const;
  Monomial times(int var) const;
  /// T / x_var; requires x_var | T.
  Monomial divided_by(int var) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Lex order with x1 > x2 > x3 on monomials of equal degree.
/// Throws std::invalid_argument if the degrees differ.
std::strong_ordering lex_compare(const Monomial& u, const Monomial& v);

/// Number of monomials of degree t: C(t+2, 2).
std::size_t monomial_count(int degree);

/// Position of u among the monomials of its degree in descending lex order.
std::size_t lex_rank(const Monomial& u);
Monomial monomial_at_rank(int degree, std::size_t rank);

/// All monomials of degree t, largest first.
std::vector<Monomial> monomials_desc_lex(int degree);

/// "x1^2*x3"; the constant monomial renders as "1".
std::string to_string(const Monomial& u);

/// Monomial ideal in k[x1, x2, x3], stored by its minimal generators.
///
/// Membership is answered from dense per-degree tables indexed by lex rank.
/// The tables reach the first degree at which the ideal contains every
/// monomial (finite colength) or the top generator degree otherwise; beyond
/// that membership falls back to divisibility. Immutable after construction.
class MonomialIdeal {
 public:
  /// The zero ideal.
  MonomialIdeal() = default;

  /// Ideal generated by `generators`; redundant ones are dropped.
  explicit MonomialIdeal(std::vector<Monomial> generators);

  /// (x1, x2, x3)^d.
  static MonomialIdeal maximal_power(int degree);

  /// Minimal generators keyed by degree, each list in descending lex order.
  const std::map<int, std::vector<Monomial>>& generators_by_degree() const { return gens_; }
  std::vector<Monomial> generators() const;

  bool contains(const Monomial& u) const;
  bool is_zero() const { return gens_.empty(); }
  int max_generator_degree() const { return gens_.empty() ? -1 : gens_.rbegin()->first; }

  /// Some power of every variable lies in the ideal.
  bool has_finite_colength() const { return full_from_ >= 0; }

  /// First degree t with every degree-t monomial in the ideal; -1 if none.
  int saturation_degree() const { return full_from_; }

  MonomialIdeal operator+(const MonomialIdeal& other) const;

 private:
  std::map<int, std::vector<Monomial>> gens_;
  std::vector<std::vector<bool>> table_;
  int full_from_ = -1;
};

/// Per-degree listing of minimal generators, "deg 2: x1^2, x1*x2".
std::string to_string(const MonomialIdeal& ideal);

/// The lex-segment ideal whose quotient has Hilbert function h (0 past the
/// socle degree). In each degree t <= s+1 it holds the C(t+2,2) - h_t largest
/// monomials. Throws InvalidHVector if h is not an O-sequence or h_1 > 3.
MonomialIdeal lex_segment_ideal(const HVector& h);

/// For every minimal generator T and i < m(T), x_i * T / x_{m(T)} lies in the ideal.
bool is_stable(const MonomialIdeal& ideal);

/// Entry t: number of degree-t monomials outside the ideal, t = 0..through.
std::vector<Integer> quotient_hf(const MonomialIdeal& ideal, int through);

/// |{T in G(J)_g : x3 | T}|, which for stable J is dim ((J : x3)/J)_{g-1}.
/// Throws std::invalid_argument if J is not stable.
Integer count_gens_div_x3(const MonomialIdeal& ideal, int degree);

/// Socle dimensions of R/J by degree (non-zero entries only).
/// Throws std::domain_error unless J has finite colength.
std::map<int, Integer> socle_dims(const MonomialIdeal& ideal);

/// Hilbert function of R/(J + (x3)) for t = 0..through.
std::vector<Integer> restricted_hf(const MonomialIdeal& ideal, int through);

/// min{l : the Hilbert function of R/(lex(h) + (x3)) vanishes in degree l+1}.
int reduction_number_r1_lex(const HVector& h);

}  // namespace levelalg
