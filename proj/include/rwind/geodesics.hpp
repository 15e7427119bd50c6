#pragma once

// Oriented primitive closed geodesics on the modular surface, encoded as
// even-length cyclic continued-fraction words (a_1, ..., a_2n) taken modulo
// rotations by even offsets.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rwind/mat2.hpp"

namespace rwind {

// Entries are positive, the length is even and the stored rotation is the
// lexicographically smallest among even rotations. Primitivity is a separate
// predicate (is_primitive); a power of an even block is a valid CyclicWord.
class CyclicWord {
 public:
  CyclicWord() = default;

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  // Word of the inverse geodesic: the reversed sequence, re-canonicalized.
  CyclicWord reversed() const;

  // "3-7"
  std::string str() const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& x, const CyclicWord& y) { return x.entries_ <=> y.entries_; }

 private:
  friend CyclicWord canonical_form(std::span<const std::int64_t> entries);
  explicit CyclicWord(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  std::vector<std::int64_t> entries_;
};

// Throws OddLength / NonPositiveEntry.
void validate_word(std::span<const std::int64_t> entries);

// Minimal even rotation. Idempotent.
CyclicWord canonical_form(std::span<const std::int64_t> entries);

// False iff the word is u^k with k >= 2 and |u| even.
bool is_primitive(std::span<const std::int64_t> entries);
inline bool is_primitive(const CyclicWord& w) { return is_primitive(std::span(w.entries())); }

// A_{a1} A_{a2} ... with A_a = (a 1; 1 0); factors are multiplied in pairs
// so every partial product stays in SL(2,Z).
Mat2 word_to_matrix(std::span<const std::int64_t> entries);
inline Mat2 word_to_matrix(const CyclicWord& w) { return word_to_matrix(std::span(w.entries())); }

// Alternating sum a1 - a2 + ... - a_2n.
std::int64_t psi_cf(std::span<const std::int64_t> entries);
inline std::int64_t psi_cf(const CyclicWord& w) { return psi_cf(std::span(w.entries())); }

// Cyclic word of the conjugacy class of a primitive hyperbolic element,
// using exact continued-fraction arithmetic on its attracting fixed point.
// Elements of trace < -2 are replaced by -gamma (same class in PSL(2,Z)).
// Throws NotHyperbolic or NotPrimitive.
CyclicWord matrix_to_word(const Mat2& gamma);

struct GeodesicRecord {
  CyclicWord word;
  std::int64_t trace = 0;
  double length = 0.0;
  std::int64_t psi = 0;

  friend bool operator==(const GeodesicRecord&, const GeodesicRecord&) = default;
};

GeodesicRecord make_record(const CyclicWord& word);

// Deterministic output order: trace ascending, then word lexicographic.
bool record_less(const GeodesicRecord& x, const GeodesicRecord& y);

inline constexpr double kMaxLength = 20.0;

struct EnumerationConfig {
  double max_length = 10.0;
  unsigned thread_count = 1;
  // Optional extra cap on the trace; 0 means derived from max_length only.
  std::int64_t trace_cap = 0;
};

// Largest trace t with 2 arccosh(t/2) <= T (boundary included within 1e-12).
std::int64_t trace_cap_for_length(double max_length);

// Every oriented primitive class with length <= max_length (and trace <=
// trace_cap when set), sorted by record_less. Throws CapExceeded when
// max_length > kMaxLength.
std::vector<GeodesicRecord> enumerate(const EnumerationConfig& config);

// Same classes, delivered in order to a callback without materializing a
// second copy.
void enumerate(const EnumerationConfig& config, const std::function<void(const GeodesicRecord&)>& sink);

// Independent oracle: scans every SL(2,Z) matrix with 2 < trace <= trace_max
// and entries bounded by trace_max^2, maps each primitive one through
// matrix_to_word and deduplicates. Sorted lexicographically by word.
// Throws CapExceeded if trace_max > 50.
std::vector<CyclicWord> brute_force_classes(std::int64_t trace_max);

}  // namespace rwind
