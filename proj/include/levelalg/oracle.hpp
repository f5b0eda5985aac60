#pragma once

#include <set>
#include <string>
#include <vector>

#include "levelalg/binomial.hpp"
#include "levelalg/hilbert.hpp"
#include "levelalg/monomial.hpp"

/// Brute-force cross-checks for the optimized paths. Everything here works
/// from generator lists and plain loops; none of it calls the code it checks.
namespace levelalg::oracle {

/// Number of degree-t monomials u outside J with x_var * u in J, by full enumeration.
Integer colon_dim_direct(const MonomialIdeal& ideal, int var, int degree);

/// Number of degree-t monomials u outside J with x_i * u in J for every i.
Integer socle_dim_direct(const MonomialIdeal& ideal, int degree);

/// Number of degree-t monomials outside J.
Integer quotient_dim_direct(const MonomialIdeal& ideal, int degree);

inline constexpr Integer kExpansionLimit = 5000;
inline constexpr int kExpansionMaxIndex = 8;

/// Finds the i-binomial representation of n by trying every admissible
/// strictly decreasing index sequence. Throws std::invalid_argument outside
/// n <= 5000, 1 <= i <= 8 and std::logic_error unless exactly one exists.
BinomialExpansion expansion_exhaustive(Integer n, int i);

inline constexpr int kFilterMaxSocle = 4;
inline constexpr Integer kFilterMaxCap = 10;

/// Every (1, 3, h_2, ..., h_s) with 0 <= h_t <= cap, h_s > 0 that passes
/// is_o_sequence, by raw nested iteration. Requires s <= 4, cap <= 10.
std::set<HVector> osequence_filter(int socle_degree, Integer cap);

struct CrossCheckReport {
  int checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

/// Compares every primary computation on lex(h) against the oracles above:
/// Hilbert function, colon counts, socle duality, Green restriction,
/// closed-form Betti windows, the series numerator, binomial expansions at
/// oracle scale and, for codimension 3, certificate replay and verdict
/// consistency.
CrossCheckReport cross_check(const HVector& h);

}  // namespace levelalg::oracle
