#include "levelalg/binomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace levelalg {

namespace {

constexpr Integer kMax = std::numeric_limits<Integer>::max();

__extension__ typedef __int128 Wide;

}  // namespace

Integer checked_add(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in addition");
  }
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer overflow in multiplication");
  }
  return out;
}

Integer binomial(Integer m, Integer k) {
  if (k < 0 || m < k) return 0;
  k = std::min(k, m - k);
  // r runs through C(m-k+j, j), which is non-decreasing in j.
  Wide r = 1;
  for (Integer j = 1; j <= k; ++j) {
    r = r * static_cast<Wide>(m - k + j) / j;
    if (r > kMax) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<Integer>(r);
}

bool binomial_exceeds(Integer m, Integer k, Integer cap) {
  if (k < 0 || m < k) return 0 > cap;
  k = std::min(k, m - k);
  Wide r = 1;
  if (r > cap) return true;
  for (Integer j = 1; j <= k; ++j) {
    r = r * static_cast<Wide>(m - k + j) / j;
    if (r > cap) return true;
  }
  return false;
}

BinomialExpansion::BinomialExpansion(std::vector<BinomialTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    const auto& t = terms_[idx];
    if (t.bottom < 1 || t.top < t.bottom) {
      throw std::invalid_argument("binomial expansion term needs n_t >= t >= 1");
    }
    if (idx > 0) {
      const auto& prev = terms_[idx - 1];
      if (t.bottom != prev.bottom - 1 || t.top >= prev.top) {
        throw std::invalid_argument("binomial expansion terms must descend strictly");
      }
    }
  }
}

Integer BinomialExpansion::value() const { return shift(*this, 0, 0); }

BinomialExpansion macaulay_expansion(Integer n, int i) {
  if (n < 0) throw std::domain_error("binomial expansion of a negative integer");
  if (i < 1) throw std::domain_error("binomial expansion needs i >= 1");

  std::vector<BinomialTerm> terms;
  Integer rest = n;
  for (int t = i; t >= 1 && rest > 0; --t) {
    // Largest m with C(m, t) <= rest. C(t, t) = 1 <= rest always holds.
    Integer lo = t;
    Integer step = 1;
    while (step <= kMax - lo && !binomial_exceeds(lo + step, t, rest)) {
      lo += step;
      step = step > kMax / 2 ? kMax : step * 2;
    }
    Integer hi = step <= kMax - lo ? lo + step : kMax;
    while (hi - lo > 1) {
      const Integer mid = lo + (hi - lo) / 2;
      if (binomial_exceeds(mid, t, rest)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    terms.push_back({lo, t});
    rest -= binomial(lo, t);
  }
  return BinomialExpansion(std::move(terms));
}

Integer shift(const BinomialExpansion& e, int a, int b) {
  Integer sum = 0;
  for (const auto& t : e.terms()) {
    sum = checked_add(sum, binomial(t.top + a, static_cast<Integer>(t.bottom) + b));
  }
  return sum;
}

Integer macaulay_bound(Integer h, int d) { return shift(macaulay_expansion(h, d), 1, 1); }

Integer green_bound(Integer h, int d) { return shift(macaulay_expansion(h, d), -1, 0); }

Integer green_macaulay_defect(Integer c, int d) {
  return green_bound(c, d) - macaulay_bound(c, d) + c;
}

std::string to_string(const BinomialExpansion& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& t : e.terms()) {
    if (!out.empty()) out += '+';
    out += "C(" + std::to_string(t.top) + "," + std::to_string(t.bottom) + ")";
  }
  return out;
}

}  // namespace levelalg
