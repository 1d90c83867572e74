#include "archive_label/natural.hpp"

#include <ostream>

#include "archive_label/errors.hpp"

namespace archive_label {

void Natural::negative_error() { throw DomainError("Natural cannot be negative"); }

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty numeral");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal numeral: " + std::string(decimal));
    }
  }
  Natural n;
  n.value_.set_str(std::string(decimal), 10);
  return n;
}

Natural Natural::pow(const Natural& base, std::uint64_t exponent) {
  Natural n;
  mpz_pow_ui(n.value_.get_mpz_t(), base.value_.get_mpz_t(), exponent);
  return n;
}

Natural Natural::from_mpz(mpz_class v) {
  if (sgn(v) < 0) negative_error();
  Natural n;
  n.value_ = std::move(v);
  return n;
}

std::string Natural::to_string() const { return value_.get_str(10); }

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::digit_count(unsigned base) const {
  if (is_zero()) return 0;
  // mpz_sizeinbase may overshoot by one for non-power-of-two bases.
  std::size_t guess = mpz_sizeinbase(value_.get_mpz_t(), static_cast<int>(base));
  mpz_class limit;
  mpz_ui_pow_ui(limit.get_mpz_t(), base, guess - 1);
  return cmp(value_, limit) >= 0 ? guess : guess - 1;
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (!mpz_fits_ulong_p(value_.get_mpz_t())) return std::nullopt;
  return mpz_get_ui(value_.get_mpz_t());
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) negative_error();
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator++() {
  value_ += 1u;
  return *this;
}

Natural& Natural::operator--() {
  if (is_zero()) negative_error();
  value_ -= 1u;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

QuotientRemainder divmod(const Natural& dividend, const Natural& divisor) {
  if (divisor.is_zero()) throw DomainError("division by zero");
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), dividend.mpz().get_mpz_t(), divisor.mpz().get_mpz_t());
  return {Natural::from_mpz(std::move(q)), Natural::from_mpz(std::move(r))};
}

}  // namespace archive_label
