#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "archive_label/natural.hpp"

namespace archive_label {

// Radix of a positional numeral system; always >= 2.
class Base {
 public:
  explicit Base(unsigned b);
  unsigned value() const { return b_; }
  friend bool operator==(Base, Base) = default;

 private:
  unsigned b_;
};

// Most-significant digit first.
using Digits = std::vector<unsigned>;

// to_digits(0, b) is empty: zero has no digits in this library.
Digits to_digits(const Natural& x, Base b);
Natural from_digits(std::span<const unsigned> digits, Base b);

// Display syntax shared by stickers and rendered numerals: plain digit
// characters for b <= 10, colon-separated decimal digit values above that.
std::string format_digits(std::span<const unsigned> digits, Base b);
std::string format_numeral(const Natural& x, Base b);

// The label string whose occurrences are counted.
//
// Multi-digit stickers may not start with 0; the single-digit sticker 0 is
// allowed.
class Sticker {
 public:
  Sticker(Base base, Digits digits);

  // "12" for b <= 10, "1:0:15" for b > 10.
  static Sticker parse(std::string_view text, Base base);

  Base base() const { return base_; }
  const Digits& digits() const { return digits_; }
  std::size_t length() const { return digits_.size(); }
  const Natural& value() const { return value_; }

  bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }
  bool is_single_digit() const { return digits_.size() == 1; }
  // "1" followed by one or more zeros, i.e. b^(n-1) with n >= 2.
  bool is_power_of_base() const;

  std::string to_string() const { return format_digits(digits_, base_); }

  friend bool operator==(const Sticker& a, const Sticker& b) {
    return a.base_ == b.base_ && a.digits_ == b.digits_;
  }

 private:
  Base base_;
  Digits digits_;
  Natural value_;
};

// Overlapping occurrences of needle inside haystack.
std::uint64_t count_matches(std::span<const unsigned> haystack, std::span<const unsigned> needle);

// Overlapping occurrences of d in the base-b numeral of x; x >= 1.
Natural occurrences_in(const Natural& x, const Sticker& d);

// Walks m = 1, 2, 3, ... and yields occurrences_in(m, d) for each, keeping
// the numeral of m as a digit array that is incremented in place.
class BruteScan {
 public:
  explicit BruteScan(const Sticker& d);

  // Advances to the next m and returns its occurrence count.
  std::uint64_t next();
  std::uint64_t current() const { return m_; }
  // Sum of occurrences over 1..current().
  std::uint64_t total() const { return total_; }

 private:
  unsigned base_;
  Digits needle_;   // sticker, least-significant digit first
  Digits numeral_;  // m, least-significant digit first
  std::uint64_t m_ = 0;
  std::uint64_t total_ = 0;
};

// Sum of occurrences_in(m, d) for m = 1..x, by direct enumeration. This is
// the reference oracle for the closed-form count; keep it naive. x must fit
// in 64 bits.
Natural f_brute(const Natural& x, const Sticker& d);

}  // namespace archive_label
