#include "archive_label/counting.hpp"

#include <string>

#include "archive_label/errors.hpp"

namespace archive_label {

namespace {

void check_place(const Natural& x, std::size_t k, const Sticker& d) {
  const std::size_t len = x.digit_count(d.base().value());
  if (k < 1 || len < d.length() || k > len - d.length() + 1) {
    throw ContractViolation("place " + std::to_string(k) + " outside the numeral of " +
                            x.to_string() + " for a " + std::to_string(d.length()) +
                            "-digit sticker");
  }
}

}  // namespace

PlaceContext place_context(const Natural& x, std::size_t k, const Sticker& d) {
  check_place(x, k, d);
  const unsigned b = d.base().value();
  const Natural below = Natural::pow(b, k - 1);
  const Natural window_size = Natural::pow(b, d.length());
  PlaceContext ctx;
  ctx.k = k;
  ctx.low = x % below;
  const Natural shifted = x / below;
  ctx.window = shifted % window_size;
  ctx.high = shifted / window_size;
  return ctx;
}

Natural place_contribution(const Natural& x, std::size_t k, const Sticker& d) {
  const PlaceContext ctx = place_context(x, k, d);
  const unsigned b = d.base().value();
  const Natural below = Natural::pow(b, k - 1);
  Natural result = ctx.high * below;
  if (d.is_zero()) {
    // A zero in this place only counts under a nonzero higher digit, which
    // removes the b^(k-1) numbers with fewer than k digits.
    if (ctx.window.is_zero()) result = result + ctx.low + 1 - below;
    return result;
  }
  if (ctx.window == d.value()) {
    result += ctx.low + 1;
  } else if (ctx.window > d.value()) {
    result += below;
  }
  return result;
}

Natural count_up_to(const Natural& x, const Sticker& d) {
  const unsigned b = d.base().value();
  const std::size_t n = d.length();
  const Digits digits = to_digits(x, d.base());
  const std::size_t len = digits.size();
  if (len < n) return 0;
  const std::size_t places = len - n + 1;
  const Digits& sticker = d.digits();

  // high_k * b^(k-1) = (x - x mod b^(k+n-1)) / b^n, so the base counts sum
  // to (places * x - sum_k x mod b^(k+n-1)) / b^n. The adjustments use
  // x mod b^(k-1) and b^(k-1), which are built alongside.
  mpz_class pow = 1;         // b^j
  mpz_class prefix = 0;      // x mod b^j
  mpz_class prefix_sum = 0;  // sum of x mod b^(k+n-1) over processed k
  mpz_class adjust = 0;

  const auto digit_at = [&](std::size_t j) { return digits[len - 1 - j]; };  // place j+1

  for (std::size_t j = 0; j < len; ++j) {
    // Invariant here: pow = b^j, prefix = x mod b^j.
    if (j < places) {
      // Place k = j + 1; window digits are places k..k+n-1.
      int order = 0;
      for (std::size_t i = 0; i < n && order == 0; ++i) {
        const unsigned w = digit_at(j + n - 1 - i);
        if (w != sticker[i]) order = w < sticker[i] ? -1 : 1;
      }
      if (d.is_zero()) {
        if (order == 0) {
          adjust += prefix;
          adjust += 1;
          adjust -= pow;
        }
      } else if (order == 0) {
        adjust += prefix;
        adjust += 1;
      } else if (order > 0) {
        adjust += pow;
      }
    }
    prefix += pow * digit_at(j);
    pow *= b;
    // prefix is now x mod b^(j+1); it is x mod b^(k+n-1) for k = j + 2 - n.
    if (j + 2 >= n + 1 && j + 2 - n <= places) prefix_sum += prefix;
  }

  mpz_class base_total = x.mpz() * static_cast<unsigned long>(places) - prefix_sum;
  mpz_class window_size;
  mpz_ui_pow_ui(window_size.get_mpz_t(), b, n);
  mpz_divexact(base_total.get_mpz_t(), base_total.get_mpz_t(), window_size.get_mpz_t());
  return Natural::from_mpz(base_total + adjust);
}

Natural boundary_count(std::size_t k, const Sticker& d) {
  const std::size_t n = d.length();
  if (k < n) {
    throw DomainError("boundary_count needs k >= n (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  // Below b^k the zero sticker would be counted in leading positions too.
  if (d.digits()[0] == 0) throw DomainError("boundary_count needs a nonzero leading digit");
  return Natural(k - n + 1) * Natural::pow(d.base().value(), k - n);
}

}  // namespace archive_label
