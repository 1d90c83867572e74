#pragma once

#include <cstddef>

#include "archive_label/natural.hpp"
#include "archive_label/numerals.hpp"

namespace archive_label {

// Decomposition of x around an n-digit window whose lowest digit sits at
// place k (1-based, counted from the right):
//   x = high * b^(k+n-1) + window * b^(k-1) + low.
struct PlaceContext {
  std::size_t k = 0;
  Natural window;
  Natural high;
  Natural low;
};

PlaceContext place_context(const Natural& x, std::size_t k, const Sticker& d);

// Number of m in 1..x whose base-b numeral contains d with its last digit
// at place k. Requires 1 <= k <= len(x) - n + 1, otherwise throws
// ContractViolation.
Natural place_contribution(const Natural& x, std::size_t k, const Sticker& d);

// f_d(x, b): total (overlapping) occurrences of d in the numerals of 1..x.
// Sums the per-place contributions in O(len(x)) big-number additions.
Natural count_up_to(const Natural& x, const Sticker& d);

// f_d(b^k - 1, b) in closed form: (k - n + 1) * b^(k - n).
// Throws DomainError when k < n.
Natural boundary_count(std::size_t k, const Sticker& d);

}  // namespace archive_label
