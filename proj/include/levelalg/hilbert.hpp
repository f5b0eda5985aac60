#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "levelalg/binomial.hpp"

namespace levelalg {

/// Malformed textual input (not a comma-separated list of integers).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Candidate Hilbert function (h_0, h_1, ..., h_s) of a graded Artinian
/// quotient. h_0 = 1, entries are non-negative and trailing zeros are
/// trimmed, so h_s > 0 and s is the socle degree.
class HVector {
 public:
  HVector() : entries_{1} {}

  /// Throws InvalidHVector if `entries` is empty, has h_0 != 1 or a negative entry.
  explicit HVector(std::vector<Integer> entries);

  /// h_t, read as 0 outside 0..s.
  Integer operator[](int t) const {
    return t < 0 || t > socle_degree() ? 0 : entries_[static_cast<std::size_t>(t)];
  }

  int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }
  bool codim3() const { return (*this)[1] == 3; }
  std::span<const Integer> entries() const { return entries_; }

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

 private:
  std::vector<Integer> entries_;
};

/// First index at which a sequence stops being an O-sequence.
struct OSequenceViolation {
  enum class Kind { InitialNotOne, Negative, ExceedsMacaulay };

  Kind kind;
  int index;
  Integer value;
  /// Largest admissible value at `index` (1 for InitialNotOne, 0 for Negative).
  Integer bound;

  std::string message() const;
};

class InvalidHVector : public std::invalid_argument {
 public:
  explicit InvalidHVector(const std::string& what, std::optional<OSequenceViolation> v = std::nullopt)
      : std::invalid_argument(what), violation_(v) {}

  const std::optional<OSequenceViolation>& violation() const { return violation_; }

 private:
  std::optional<OSequenceViolation> violation_;
};

/// Checks h_0 = 1, non-negativity and h_{i+1} <= macaulay_bound(h_i, i) for i >= 1.
std::optional<OSequenceViolation> check_o_sequence(std::span<const Integer> seq);
bool is_o_sequence(std::span<const Integer> seq);
bool is_o_sequence(const HVector& h);

/// (h_0, h_1 - h_0, ..., h_s - h_{s-1}); entries may be negative.
std::vector<Integer> first_difference(const HVector& h);

/// True iff the first difference is itself an O-sequence.
bool is_differentiable(const HVector& h);

/// Parses "1,3,6,10". Throws ParseError on malformed text.
std::vector<Integer> parse_integer_list(std::string_view text);

/// Parses and validates the h_0 / sign invariants. O-sequence growth is not checked.
HVector parse_hvector(std::string_view text);

std::string to_string(const HVector& h);

/// Lazily walks every O-sequence (1, 3, h_2, ..., h_s) with h_s > 0 and all
/// entries <= cap, in lexicographic order of entries.
class OSequenceEnumerator {
 public:
  /// Throws std::invalid_argument unless s >= 1 and cap >= 3.
  OSequenceEnumerator(int socle_degree, Integer cap);

  std::optional<HVector> next();

 private:
  bool advance();
  Integer ceiling(std::size_t position) const;

  Integer cap_;
  std::vector<Integer> current_;
  bool done_ = false;
};

std::vector<HVector> enumerate_o_sequences(int socle_degree, Integer cap);

}  // namespace levelalg
