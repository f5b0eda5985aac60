#include "levelalg/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace levelalg {

HVector::HVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.front() != 1) {
    throw InvalidHVector("h-vector must start with h_0 = 1",
                         OSequenceViolation{OSequenceViolation::Kind::InitialNotOne, 0,
                                            entries_.empty() ? 0 : entries_.front(), 1});
  }
  for (std::size_t t = 0; t < entries_.size(); ++t) {
    if (entries_[t] < 0) {
      throw InvalidHVector("h-vector entries must be non-negative",
                           OSequenceViolation{OSequenceViolation::Kind::Negative, static_cast<int>(t),
                                              entries_[t], 0});
    }
  }
  while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
}

std::string OSequenceViolation::message() const {
  switch (kind) {
    case Kind::InitialNotOne:
      return "h_0 must be 1 (found " + std::to_string(value) + ")";
    case Kind::Negative:
      return "negative entry " + std::to_string(value) + " at degree " + std::to_string(index);
    case Kind::ExceedsMacaulay:
      break;
  }
  return "violates Macaulay bound at degree " + std::to_string(index) + " (max " +
         std::to_string(bound) + ")";
}

std::optional<OSequenceViolation> check_o_sequence(std::span<const Integer> seq) {
  using Kind = OSequenceViolation::Kind;
  if (seq.empty() || seq[0] != 1) {
    return OSequenceViolation{Kind::InitialNotOne, 0, seq.empty() ? 0 : seq[0], 1};
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq[i] < 0) return OSequenceViolation{Kind::Negative, static_cast<int>(i), seq[i], 0};
    if (i >= 2) {
      const Integer bound = macaulay_bound(seq[i - 1], static_cast<int>(i - 1));
      if (seq[i] > bound) {
        return OSequenceViolation{Kind::ExceedsMacaulay, static_cast<int>(i), seq[i], bound};
      }
    }
  }
  return std::nullopt;
}

bool is_o_sequence(std::span<const Integer> seq) { return !check_o_sequence(seq).has_value(); }

bool is_o_sequence(const HVector& h) { return is_o_sequence(h.entries()); }

std::vector<Integer> first_difference(const HVector& h) {
  const auto e = h.entries();
  std::vector<Integer> out(e.size());
  out[0] = e[0];
  for (std::size_t i = 1; i < e.size(); ++i) out[i] = e[i] - e[i - 1];
  return out;
}

bool is_differentiable(const HVector& h) { return is_o_sequence(first_difference(h)); }

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    if (field.empty()) throw ParseError("empty field in integer list \"" + std::string(text) + "\"");

    Integer value = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("not an integer: \"" + std::string(field) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

HVector parse_hvector(std::string_view text) { return HVector(parse_integer_list(text)); }

std::string to_string(const HVector& h) {
  std::string out;
  for (const Integer v : h.entries()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

OSequenceEnumerator::OSequenceEnumerator(int socle_degree, Integer cap) : cap_(cap) {
  if (socle_degree < 1) throw std::invalid_argument("enumeration needs socle degree >= 1");
  if (cap < 3) throw std::invalid_argument("enumeration needs cap >= 3");
  current_.assign(static_cast<std::size_t>(socle_degree) + 1, 1);
  current_[1] = 3;
}

Integer OSequenceEnumerator::ceiling(std::size_t position) const {
  return std::min(cap_, macaulay_bound(current_[position - 1], static_cast<int>(position - 1)));
}

// Odometer step: bump the rightmost position that still has room and reset
// everything after it to 1, which is always admissible after a positive entry.
bool OSequenceEnumerator::advance() {
  for (std::size_t p = current_.size() - 1; p >= 2; --p) {
    if (current_[p] < ceiling(p)) {
      ++current_[p];
      std::fill(current_.begin() + static_cast<std::ptrdiff_t>(p) + 1, current_.end(), 1);
      return true;
    }
  }
  return false;
}

std::optional<HVector> OSequenceEnumerator::next() {
  if (done_) return std::nullopt;
  HVector out(current_);
  done_ = !advance();
  return out;
}

std::vector<HVector> enumerate_o_sequences(int socle_degree, Integer cap) {
  std::vector<HVector> out;
  OSequenceEnumerator it(socle_degree, cap);
  while (auto h = it.next()) out.push_back(std::move(*h));
  return out;
}

}  // namespace levelalg
