#include "levelalg/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace levelalg {

Monomial Monomial::variable(int var) {
  Monomial u;
  u.exponents[static_cast<std::size_t>(var - 1)] = 1;
  return u;
}

int Monomial::max_variable() const {
  for (int v = kVariables; v >= 1; --v) {
    if (exponent(v) > 0) return v;
  }
  throw std::logic_error("m(T) is undefined for the constant monomial");
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] > other.exponents[v]) return false;
  }
  return true;
}

Monomial Monomial::times(int var) const {
  Monomial out = *this;
  ++out.exponents[static_cast<std::size_t>(var - 1)];
  return out;
}

Monomial Monomial::divided_by(int var) const {
  if (exponent(var) == 0) throw std::logic_error("monomial is not divisible by x" + std::to_string(var));
  Monomial out = *this;
  --out.exponents[static_cast<std::size_t>(var - 1)];
  return out;
}

std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
  if (u.degree() != v.degree()) {
    throw std::invalid_argument("lex comparison of monomials of different degrees");
  }
  for (std::size_t i = 0; i < u.exponents.size(); ++i) {
    if (u.exponents[i] != v.exponents[i]) return u.exponents[i] <=> v.exponents[i];
  }
  return std::strong_ordering::equal;
}

std::size_t monomial_count(int degree) {
  if (degree < 0) return 0;
  const auto t = static_cast<std::size_t>(degree);
  return (t + 1) * (t + 2) / 2;
}

// Descending lex lists x1^a first by decreasing a, then x2^b by decreasing b.
// With k = t - a, the block of a given a starts at k(k+1)/2 and the offset
// inside it is the x3 exponent.
std::size_t lex_rank(const Monomial& u) {
  const auto k = static_cast<std::size_t>(u.degree() - u.exponents[0]);
  return k * (k + 1) / 2 + static_cast<std::size_t>(u.exponents[2]);
}

Monomial monomial_at_rank(int degree, std::size_t rank) {
  std::size_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= rank) ++k;
  const auto c = static_cast<int>(rank - k * (k + 1) / 2);
  const int a = degree - static_cast<int>(k);
  if (a < 0) throw std::out_of_range("lex rank outside the monomials of this degree");
  return Monomial{{a, static_cast<int>(k) - c, c}};
}

std::vector<Monomial> monomials_desc_lex(int degree) {
  std::vector<Monomial> out;
  out.reserve(monomial_count(degree));
  for (std::size_t r = 0; r < monomial_count(degree); ++r) out.push_back(monomial_at_rank(degree, r));
  return out;
}

std::string to_string(const Monomial& u) {
  std::string out;
  for (int v = 1; v <= kVariables; ++v) {
    const int e = u.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
  std::stable_sort(generators.begin(), generators.end(),
                   [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const auto& g : generators) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  for (const auto& g : kept) gens_[g.degree()].push_back(g);
  for (auto& [deg, list] : gens_) {
    std::sort(list.begin(), list.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) > 0; });
  }
  if (gens_.empty()) return;

  // Pure powers bound the degree at which the ideal swallows everything.
  std::array<int, kVariables> pure{-1, -1, -1};
  for (const auto& g : kept) {
    for (int v = 1; v <= kVariables; ++v) {
      if (g.exponent(v) == g.degree() && g.degree() > 0) {
        auto& p = pure[static_cast<std::size_t>(v - 1)];
        p = p < 0 ? g.degree() : std::min(p, g.degree());
      }
    }
  }
  int top = max_generator_degree();
  const bool finite = gens_.begin()->first == 0 ||
                      std::all_of(pure.begin(), pure.end(), [](int p) { return p > 0; });
  if (finite && gens_.begin()->first > 0) top = std::max(top, pure[0] + pure[1] + pure[2] - 2);

  for (int t = 0; t <= top; ++t) {
    std::vector<bool> slice(monomial_count(t), false);
    const auto it = gens_.find(t);
    if (it != gens_.end()) {
      for (const auto& g : it->second) slice[lex_rank(g)] = true;
    }
    if (t > 0) {
      const auto& below = table_.back();
      for (std::size_t r = 0; r < slice.size(); ++r) {
        if (slice[r]) continue;
        const Monomial u = monomial_at_rank(t, r);
        for (int v = 1; v <= kVariables; ++v) {
          if (u.exponent(v) > 0 && below[lex_rank(u.divided_by(v))]) {
            slice[r] = true;
            break;
          }
        }
      }
    }
    const bool full = std::all_of(slice.begin(), slice.end(), [](bool b) { return b; });
    table_.push_back(std::move(slice));
    if (full) {
      full_from_ = t;
      break;
    }
  }
  if (finite && full_from_ < 0) throw std::logic_error("finite-colength ideal never became full");
}

MonomialIdeal MonomialIdeal::maximal_power(int degree) { return MonomialIdeal(monomials_desc_lex(degree)); }

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  for (const auto& [deg, list] : gens_) out.insert(out.end(), list.begin(), list.end());
  return out;
}

bool MonomialIdeal::contains(const Monomial& u) const {
  const int t = u.degree();
  if (t < static_cast<int>(table_.size())) return table_[static_cast<std::size_t>(t)][lex_rank(u)];
  if (full_from_ >= 0) return true;
  for (const auto& [deg, list] : gens_) {
    if (deg > t) break;
    for (const auto& g : list) {
      if (g.divides(u)) return true;
    }
  }
  return false;
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  auto all = generators();
  const auto more = other.generators();
  all.insert(all.end(), more.begin(), more.end());
  return MonomialIdeal(std::move(all));
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out;
  for (const auto& [deg, list] : ideal.generators_by_degree()) {
    if (!out.empty()) out += '\n';
    out += "deg " + std::to_string(deg) + ":";
    for (std::size_t i = 0; i < list.size(); ++i) out += (i == 0 ? " " : ", ") + to_string(list[i]);
  }
  return out;
}

MonomialIdeal lex_segment_ideal(const HVector& h) {
  if (auto v = check_o_sequence(h.entries())) throw InvalidHVector(v->message(), v);
  if (h[1] > kVariables) {
    throw InvalidHVector("h_1 exceeds the number of variables",
                         OSequenceViolation{OSequenceViolation::Kind::ExceedsMacaulay, 1, h[1], kVariables});
  }

  const int s = h.socle_degree();
  std::vector<std::size_t> segment(static_cast<std::size_t>(s) + 2);
  for (int t = 0; t <= s + 1; ++t) {
    segment[static_cast<std::size_t>(t)] = monomial_count(t) - static_cast<std::size_t>(h[t]);
  }

  std::vector<Monomial> gens;
  for (int t = 1; t <= s + 1; ++t) {
    const std::size_t size = segment[static_cast<std::size_t>(t)];
    const std::size_t below = segment[static_cast<std::size_t>(t - 1)];
    for (std::size_t r = 0; r < below; ++r) {
      const Monomial u = monomial_at_rank(t - 1, r);
      for (int v = 1; v <= kVariables; ++v) {
        if (lex_rank(u.times(v)) >= size) throw std::logic_error("lex segment is not closed under multiplication");
      }
    }
    for (std::size_t r = 0; r < size; ++r) {
      const Monomial u = monomial_at_rank(t, r);
      bool minimal = true;
      for (int v = 1; v <= kVariables && minimal; ++v) {
        if (u.exponent(v) > 0 && lex_rank(u.divided_by(v)) < below) minimal = false;
      }
      if (minimal) gens.push_back(u);
    }
  }
  return MonomialIdeal(std::move(gens));
}

bool is_stable(const MonomialIdeal& ideal) {
  for (const auto& [deg, list] : ideal.generators_by_degree()) {
    if (deg == 0) continue;
    for (const auto& g : list) {
      const int m = g.max_variable();
      const Monomial base = g.divided_by(m);
      for (int i = 1; i < m; ++i) {
        if (!ideal.contains(base.times(i))) return false;
      }
    }
  }
  return true;
}

std::vector<Integer> quotient_hf(const MonomialIdeal& ideal, int through) {
  std::vector<Integer> out;
  for (int t = 0; t <= through; ++t) {
    Integer count = 0;
    for (std::size_t r = 0; r < monomial_count(t); ++r) {
      if (!ideal.contains(monomial_at_rank(t, r))) ++count;
    }
    out.push_back(count);
  }
  return out;
}

Integer count_gens_div_x3(const MonomialIdeal& ideal, int degree) {
  if (!is_stable(ideal)) throw std::invalid_argument("count_gens_div_x3 requires a stable ideal");
  const auto& gens = ideal.generators_by_degree();
  const auto it = gens.find(degree);
  if (it == gens.end()) return 0;
  return std::count_if(it->second.begin(), it->second.end(), [](const Monomial& g) { return g.exponent(3) > 0; });
}

std::map<int, Integer> socle_dims(const MonomialIdeal& ideal) {
  if (!ideal.has_finite_colength()) throw std::domain_error("socle of an infinite-colength quotient");
  std::map<int, Integer> out;
  for (int t = 0; t < ideal.saturation_degree(); ++t) {
    Integer count = 0;
    for (std::size_t r = 0; r < monomial_count(t); ++r) {
      const Monomial u = monomial_at_rank(t, r);
      if (ideal.contains(u)) continue;
      bool annihilated = true;
      for (int v = 1; v <= kVariables && annihilated; ++v) annihilated = ideal.contains(u.times(v));
      if (annihilated) ++count;
    }
    if (count > 0) out[t] = count;
  }
  return out;
}

std::vector<Integer> restricted_hf(const MonomialIdeal& ideal, int through) {
  std::vector<Integer> out;
  for (int t = 0; t <= through; ++t) {
    Integer count = 0;
    for (int a = 0; a <= t; ++a) {
      if (!ideal.contains(Monomial{{a, t - a, 0}})) ++count;
    }
    out.push_back(count);
  }
  return out;
}

int reduction_number_r1_lex(const HVector& h) {
  const MonomialIdeal lex = lex_segment_ideal(h);
  const int s = h.socle_degree();
  const auto restricted = restricted_hf(lex, s + 1);
  for (int l = 0; l <= s; ++l) {
    if (restricted[static_cast<std::size_t>(l) + 1] == 0) return l;
  }
  throw std::logic_error("restricted Hilbert function did not vanish past the socle degree");
}

}  // namespace levelalg
