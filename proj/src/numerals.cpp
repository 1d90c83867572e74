#include "archive_label/numerals.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "archive_label/errors.hpp"

namespace archive_label {

Base::Base(unsigned b) : b_(b) {
  if (b < 2) throw DomainError("base must be at least 2, got " + std::to_string(b));
}

namespace {

unsigned char_to_digit(char c) {
  if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<unsigned>(c - 'a') + 10;
  return static_cast<unsigned>(c - 'A') + 36;
}

}  // namespace

Digits to_digits(const Natural& x, Base b) {
  Digits out;
  if (x.is_zero()) return out;
  const unsigned base = b.value();
  if (base <= 62) {
    const std::string text = x.mpz().get_str(static_cast<int>(base));
    out.reserve(text.size());
    for (char c : text) out.push_back(char_to_digit(c));
    return out;
  }
  mpz_class rest = x.mpz();
  while (sgn(rest) != 0) {
    out.push_back(static_cast<unsigned>(mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Natural from_digits(std::span<const unsigned> digits, Base b) {
  mpz_class acc;
  for (unsigned d : digits) {
    if (d >= b.value()) {
      throw InvalidDigit("digit " + std::to_string(d) + " out of range for base " +
                         std::to_string(b.value()));
    }
    acc *= b.value();
    acc += d;
  }
  return Natural::from_mpz(std::move(acc));
}

std::string format_digits(std::span<const unsigned> digits, Base b) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (b.value() <= 10) {
      out.push_back(static_cast<char>('0' + digits[i]));
    } else {
      if (i > 0) out.push_back(':');
      out += std::to_string(digits[i]);
    }
  }
  return out;
}

std::string format_numeral(const Natural& x, Base b) {
  if (x.is_zero()) return "0";
  return format_digits(to_digits(x, b), b);
}

Sticker::Sticker(Base base, Digits digits) : base_(base), digits_(std::move(digits)) {
  if (digits_.empty()) throw InvalidSticker("sticker must have at least one digit");
  for (unsigned d : digits_) {
    if (d >= base_.value()) {
      throw InvalidSticker("sticker digit " + std::to_string(d) + " out of range for base " +
                           std::to_string(base_.value()));
    }
  }
  if (digits_.size() > 1 && digits_[0] == 0) {
    throw InvalidSticker("multi-digit stickers may not start with 0");
  }
  value_ = from_digits(digits_, base_);
}

Sticker Sticker::parse(std::string_view text, Base base) {
  if (text.empty()) throw InvalidSticker("empty sticker");
  Digits digits;
  if (base.value() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') throw InvalidSticker("malformed sticker '" + std::string(text) + "'");
      digits.push_back(static_cast<unsigned>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      const std::size_t colon = text.find(':', pos);
      const std::string_view part =
          text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos);
      unsigned d = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), d);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
        throw InvalidSticker("malformed sticker '" + std::string(text) + "'");
      }
      digits.push_back(d);
      if (colon == std::string_view::npos) break;
      pos = colon + 1;
    }
  }
  return Sticker(base, std::move(digits));
}

bool Sticker::is_power_of_base() const {
  if (digits_.size() < 2 || digits_[0] != 1) return false;
  return std::all_of(digits_.begin() + 1, digits_.end(), [](unsigned d) { return d == 0; });
}

std::uint64_t count_matches(std::span<const unsigned> haystack, std::span<const unsigned> needle) {
  if (needle.empty() || haystack.size() < needle.size()) return 0;
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + static_cast<std::ptrdiff_t>(i))) {
      ++hits;
    }
  }
  return hits;
}

Natural occurrences_in(const Natural& x, const Sticker& d) {
  if (x.is_zero()) throw DomainError("occurrences_in requires x >= 1");
  return count_matches(to_digits(x, d.base()), d.digits());
}

BruteScan::BruteScan(const Sticker& d)
    : base_(d.base().value()), needle_(d.digits().rbegin(), d.digits().rend()) {}

std::uint64_t BruteScan::next() {
  std::size_t i = 0;
  while (i < numeral_.size() && numeral_[i] == base_ - 1) numeral_[i++] = 0;
  if (i == numeral_.size()) {
    numeral_.push_back(1);
  } else {
    ++numeral_[i];
  }
  ++m_;
  const std::uint64_t hits = count_matches(numeral_, needle_);
  total_ += hits;
  return hits;
}

Natural f_brute(const Natural& x, const Sticker& d) {
  const auto limit = x.to_u64();
  if (!limit) throw DomainError("f_brute is an oracle for x < 2^64 only");
  BruteScan scan(d);
  while (scan.current() < *limit) scan.next();
  return scan.total();
}

}  // namespace archive_label
