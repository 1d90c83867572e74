#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace archive_label {

// Arbitrary-precision nonnegative integer backed by GMP.
//
// Every operation that would produce a negative value throws DomainError,
// so a Natural can never hold a negative magnitude.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
  Natural(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) negative_error();
    }
    value_ = static_cast<unsigned long>(v);
  }

  // Decimal digits only, no sign, no whitespace.
  static Natural parse(std::string_view decimal);
  static Natural pow(const Natural& base, std::uint64_t exponent);
  static Natural from_mpz(mpz_class v);

  std::string to_string() const;
  // Number of binary digits; 0 for zero.
  std::size_t bit_length() const;
  // Exact number of base-b digits; 0 for zero.
  std::size_t digit_count(unsigned base = 10) const;

  bool is_zero() const { return sgn(value_) == 0; }
  std::optional<std::uint64_t> to_u64() const;

  const mpz_class& mpz() const { return value_; }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator++();
  Natural& operator--();

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  [[noreturn]] static void negative_error();
  mpz_class value_;
};

struct QuotientRemainder {
  Natural quotient;
  Natural remainder;
};

QuotientRemainder divmod(const Natural& dividend, const Natural& divisor);

}  // namespace archive_label
