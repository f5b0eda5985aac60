#pragma once

#include <map>
#include <string>
#include <utility>

#include "levelalg/binomial.hpp"
#include "levelalg/hilbert.hpp"
#include "levelalg/monomial.hpp"

namespace levelalg {

/// Graded Betti numbers beta_{q,j} of an ideal in k[x1,x2,x3]; q is the
/// homological index of the ideal's resolution (0..2) and j the shift.
/// Only positive multiplicities are stored.
class BettiDiagram {
 public:
  using Key = std::pair<int, int>;

  Integer at(int q, int shift) const;
  /// Adds `mult` to beta_{q,shift}. Throws std::out_of_range for q outside 0..2.
  void add(int q, int shift, Integer mult);

  const std::map<Key, Integer>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Integer total(int q) const;

  friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

 private:
  std::map<Key, Integer> entries_;
};

/// Eliahou-Kervaire: beta_{q,j}(J) = sum over T in G(J)_{j-q} of C(m(T)-1, q).
/// Throws std::invalid_argument if J is not stable.
BettiDiagram ek_betti(const MonomialIdeal& ideal);

/// beta_{1,d+2}, beta_{2,d+2} and beta_{2,d+3} of the lex-segment ideal of h.
struct BettiWindow {
  Integer beta1_d2 = 0;
  Integer beta2_d2 = 0;
  Integer beta2_d3 = 0;
  /// False when h_d = C(d+2, 2) and the values were read off ek_betti instead.
  bool closed_form = false;

  friend bool operator==(const BettiWindow&, const BettiWindow&) = default;
};

/// When h_d < C(d+2, 2):
///   beta_{2,d+2} = h_{d-1} - h_d + green_bound(h_d, d)
///   beta_{1,d+2} = macaulay_bound(h_d, d) + h_d - 2 h_{d+1} + green_bound(h_{d+1}, d+1)
///   beta_{2,d+3} = h_d - h_{d+1} + green_bound(h_{d+1}, d+1)
/// Otherwise falls back to ek_betti(lex_segment_ideal(h)).
/// Throws std::invalid_argument unless 1 <= d <= s.
BettiWindow lex_betti_window(const HVector& h, int d);

/// Checks 1 - sum_q (-1)^q sum_j beta_{q,j} t^j == (1 - t)^3 * sum_t HF(R/J, t) t^t.
/// Throws std::domain_error for infinite colength, std::invalid_argument if not stable.
bool numerator_check(const MonomialIdeal& ideal);

/// Betti table of R/J in the usual layout: column i is the quotient's
/// homological degree, row r holds the shifts j = r + i.
std::string render_diagram(const BettiDiagram& ideal_diagram);

}  // namespace levelalg
