#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "archive_label/natural.hpp"
#include "archive_label/numerals.hpp"

namespace archive_label {

enum class Status { Found, NotExists, Unresolved };

std::string_view to_string(Status s);

struct SearchProgress {
  std::size_t digits = 0;  // numeral length of the current candidate
  std::uint64_t evaluations = 0;
  double elapsed = 0.0;
};

// What a search did at each large step; used to audit soundness.
struct SearchEvent {
  enum class Kind {
    Skip,  // every z in (from, to] fails the relation because f(to) = value is too small
    Jump,  // f(from) = value > from, so no equality in (from, value)
  };
  Kind kind;
  Natural from;
  Natural to;
  Natural value;
};

struct SearchOptions {
  // Replaces solution_bound(d) when set.
  std::optional<Natural> bound;
  // Search ceiling for base-2 stickers 10...0, whose solutions are not
  // bounded by any known theorem.
  Natural power_of_two_cap = Natural::pow(2, 4200);
  // Forward steps through an equality run before find_a_gt gallops instead.
  std::uint64_t step_cap = 1'000'000;
  std::uint64_t progress_interval = 10'000;
  std::function<void(const SearchProgress&)> progress;
  std::function<void(const SearchEvent&)> trace;
};

struct SearchOutcome {
  Status status = Status::Unresolved;
  std::optional<Natural> value;        // present iff Found
  std::optional<Natural> certificate;  // y with y > b^K and f(y) >= y + b^K
  Natural bound_used;
  std::uint64_t evaluations = 0;
  double elapsed = 0.0;
};

// <x, x + p>: every answer is known to lie strictly above x.
struct SafeRange {
  Natural x;
  Natural p;
};

struct EnumerationResult {
  std::vector<Natural> solutions;  // strictly increasing
  std::optional<Natural> max;
  Natural bound_used;
  // True when no further solutions exist: either the stop rule fired or a
  // proven bound was exhausted.
  bool complete = false;
  std::uint64_t evaluations = 0;
  double elapsed = 0.0;

  std::size_t count() const { return solutions.size(); }
};

enum class Relation {
  GeEqualsGt,  // a_>(d) = a_>=(d)
  EqBeforeGt,  // a_=(d) exists and is below a_>(d)
  NoEq,        // a_=(d) does not exist
};

std::string_view to_string(Relation r);

class SearchUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Least x >= min_x with f(x, d) >= x.
SearchOutcome find_a_ge(const Sticker& d, const Natural& min_x = 1, const SearchOptions& opts = {});

// Least x with f(x, d) > x.
SearchOutcome find_a_gt(const Sticker& d, const SearchOptions& opts = {});

// Least x >= min_x with f(x, d) = x, searched up to opts.bound (or
// solution_bound(d)). Throws DomainError when min_x exceeds the bound.
SearchOutcome find_a_eq(const Sticker& d, const Natural& min_x, const SearchOptions& opts = {});

// Every x <= bound with f(x, d) = x. The default bound is proven_bound(d),
// so a default enumeration is always complete.
EnumerationResult enumerate_solutions(const Sticker& d, const SearchOptions& opts = {});

// The exponent K = b^n + n - 1: any b^K consecutive integers above b^K
// contain at least b^K occurrences of an n-digit sticker.
std::size_t stop_exponent(const Sticker& d);

// Upper limit for solutions of f(x, d) = x:
//   d * b^b for a nonzero digit, b^(b+3) for the zero digit, b^(K+1) for
//   multi-digit stickers, power_of_two_cap for base-2 stickers 10...0.
Natural solution_bound(const Sticker& d, const Natural& power_of_two_cap = Natural::pow(2, 4200));

// A bound with a proof that f(z, d) != z for every z at or above it:
//   d * b^b (nonzero digit), b^(b+3) (zero digit) and b^(K+n) for n-digit
//   stickers, where f(b^(K+n) - 1) - (b^(K+n) - 1) = n * b^K + 1 fires the
//   stop rule.
Natural proven_bound(const Sticker& d);

// Whether solution_bound(d) reaches proven_bound(d), i.e. is more than a
// search ceiling.
bool bound_is_proven(const Sticker& d, const Natural& power_of_two_cap = Natural::pow(2, 4200));

// True iff x > b^K and v >= x + b^K; with v = f(x, d) this certifies that
// f(z, d) > z for every z >= x.
bool stop_rule_fired(const Natural& x, const Natural& v, const Sticker& d);

// Least solution of f_0(x, b) = x, or a nonexistence certificate.
SearchOutcome classify_zero(Base b, const SearchOptions& opts = {});

// Throws SearchUnresolved if any of the underlying searches is undecided.
Relation classify_relation(const Sticker& d, const SearchOptions& opts = {});

}  // namespace archive_label
