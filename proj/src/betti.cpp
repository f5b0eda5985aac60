#include "levelalg/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace levelalg {

Integer BettiDiagram::at(int q, int shift) const {
  const auto it = entries_.find({q, shift});
  return it == entries_.end() ? 0 : it->second;
}

void BettiDiagram::add(int q, int shift, Integer mult) {
  if (q < 0 || q > 2) throw std::out_of_range("homological index outside 0..2");
  if (mult == 0) return;
  auto& slot = entries_[{q, shift}];
  slot = checked_add(slot, mult);
  if (slot == 0) entries_.erase({q, shift});
}

Integer BettiDiagram::total(int q) const {
  Integer sum = 0;
  for (const auto& [key, mult] : entries_) {
    if (key.first == q) sum = checked_add(sum, mult);
  }
  return sum;
}

BettiDiagram ek_betti(const MonomialIdeal& ideal) {
  if (!is_stable(ideal)) throw std::invalid_argument("Eliahou-Kervaire needs a stable ideal");
  BettiDiagram out;
  for (const auto& [deg, list] : ideal.generators_by_degree()) {
    if (deg == 0) {
      out.add(0, 0, 1);
      continue;
    }
    for (const auto& g : list) {
      const int m = g.max_variable();
      for (int q = 0; q <= 2; ++q) out.add(q, deg + q, binomial(m - 1, q));
    }
  }
  return out;
}

BettiWindow lex_betti_window(const HVector& h, int d) {
  if (d < 1 || d > h.socle_degree()) throw std::invalid_argument("window degree outside 1..s");
  if (h[d] < binomial(d + 2, 2)) {
    const Integer green_d = green_bound(h[d], d);
    const Integer green_d1 = green_bound(h[d + 1], d + 1);
    BettiWindow w;
    w.beta2_d2 = h[d - 1] - h[d] + green_d;
    w.beta1_d2 = macaulay_bound(h[d], d) + h[d] - 2 * h[d + 1] + green_d1;
    w.beta2_d3 = h[d] - h[d + 1] + green_d1;
    w.closed_form = true;
    return w;
  }
  const BettiDiagram full = ek_betti(lex_segment_ideal(h));
  return BettiWindow{full.at(1, d + 2), full.at(2, d + 2), full.at(2, d + 3), false};
}

namespace {

using Poly = std::vector<Integer>;

void accumulate(Poly& p, std::size_t degree, Integer coeff) {
  if (p.size() <= degree) p.resize(degree + 1, 0);
  p[degree] = checked_add(p[degree], coeff);
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

bool numerator_check(const MonomialIdeal& ideal) {
  if (!ideal.has_finite_colength()) throw std::domain_error("numerator check needs finite colength");
  const BettiDiagram betti = ek_betti(ideal);

  Poly lhs{1};
  for (const auto& [key, mult] : betti.entries()) {
    const auto [q, shift] = key;
    const Integer sign = q % 2 == 0 ? -1 : 1;
    accumulate(lhs, static_cast<std::size_t>(shift), sign * mult);
  }

  const auto hf = quotient_hf(ideal, std::max(0, ideal.saturation_degree()));
  const Integer cube[] = {1, -3, 3, -1};
  Poly rhs;
  for (std::size_t t = 0; t < hf.size(); ++t) {
    for (std::size_t k = 0; k < 4; ++k) accumulate(rhs, t + k, checked_mul(cube[k], hf[t]));
  }
  trim(lhs);
  trim(rhs);
  return lhs == rhs;
}

std::string render_diagram(const BettiDiagram& ideal_diagram) {
  // Quotient convention: beta_{q,j} of the ideal sits in column q+1, row j-q-1.
  std::map<std::pair<int, int>, Integer> cells;  // (row, column)
  cells[{0, 0}] = 1;
  int min_row = 0;
  int max_row = 0;
  for (const auto& [key, mult] : ideal_diagram.entries()) {
    const int row = key.second - key.first - 1;
    cells[{row, key.first + 1}] = mult;
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }

  constexpr int kColumns = 4;
  std::vector<Integer> totals(kColumns, 0);
  for (const auto& [rc, mult] : cells) totals[static_cast<std::size_t>(rc.second)] += mult;

  std::vector<std::size_t> width(kColumns, 1);
  for (int c = 0; c < kColumns; ++c) {
    width[static_cast<std::size_t>(c)] = std::max(std::to_string(c).size(), std::to_string(totals[static_cast<std::size_t>(c)]).size());
  }
  for (const auto& [rc, mult] : cells) {
    auto& w = width[static_cast<std::size_t>(rc.second)];
    w = std::max(w, std::to_string(mult).size());
  }

  std::size_t label = std::string("total").size();
  for (int r = min_row; r <= max_row; ++r) label = std::max(label, std::to_string(r).size());

  auto pad = [](const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; };
  std::ostringstream out;
  out << pad("", label + 1);
  for (int c = 0; c < kColumns; ++c) out << ' ' << pad(std::to_string(c), width[static_cast<std::size_t>(c)]);
  out << '\n' << pad("total", label) << ':';
  for (int c = 0; c < kColumns; ++c) out << ' ' << pad(std::to_string(totals[static_cast<std::size_t>(c)]), width[static_cast<std::size_t>(c)]);
  out << '\n';
  for (int r = min_row; r <= max_row; ++r) {
    out << pad(std::to_string(r), label) << ':';
    for (int c = 0; c < kColumns; ++c) {
      const auto it = cells.find({r, c});
      out << ' ' << pad(it == cells.end() ? "." : std::to_string(it->second), width[static_cast<std::size_t>(c)]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace levelalg
