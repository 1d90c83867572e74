#include "archive_label/search.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "archive_label/counting.hpp"
#include "archive_label/errors.hpp"

namespace archive_label {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Found: return "FOUND";
    case Status::NotExists: return "NOT_EXISTS";
    case Status::Unresolved: return "UNRESOLVED";
  }
  return "UNRESOLVED";
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::GeEqualsGt: return "GE_EQUALS_GT";
    case Relation::EqBeforeGt: return "EQ_BEFORE_GT";
    case Relation::NoEq: return "NO_EQ";
  }
  return "NO_EQ";
}

std::size_t stop_exponent(const Sticker& d) {
  const std::size_t n = d.length();
  const Natural bn = Natural::pow(d.base().value(), n);
  const auto small = bn.to_u64();
  if (!small || *small > (1ull << 40)) throw DomainError("sticker too long for a stop exponent");
  return static_cast<std::size_t>(*small) + n - 1;
}

Natural solution_bound(const Sticker& d, const Natural& power_of_two_cap) {
  const unsigned b = d.base().value();
  if (d.is_zero()) return Natural::pow(b, b + 3);
  if (d.is_single_digit()) return d.value() * Natural::pow(b, b);
  if (b == 2 && d.is_power_of_base()) return power_of_two_cap;
  return Natural::pow(b, stop_exponent(d) + 1);
}

Natural proven_bound(const Sticker& d) {
  if (d.is_single_digit()) return solution_bound(d);
  return Natural::pow(d.base().value(), stop_exponent(d) + d.length());
}

bool bound_is_proven(const Sticker& d, const Natural& power_of_two_cap) {
  return solution_bound(d, power_of_two_cap) >= proven_bound(d);
}

bool stop_rule_fired(const Natural& x, const Natural& v, const Sticker& d) {
  const Natural block = Natural::pow(d.base().value(), stop_exponent(d));
  return x > block && v >= x + block;
}

namespace {

struct Crossing {
  Natural x;
  Natural value;
};

// One search run over a fixed sticker: counts evaluations, reports progress
// and keeps the galloping primitives.
class Searcher {
 public:
  Searcher(const Sticker& d, const SearchOptions& opts)
      : d_(d),
        opts_(opts),
        block_(Natural::pow(d.base().value(), stop_exponent(d))),
        start_(std::chrono::steady_clock::now()) {}

  Natural eval(const Natural& x) {
    ++evaluations_;
    Natural v = count_up_to(x, d_);
    if (opts_.progress && opts_.progress_interval > 0 && evaluations_ % opts_.progress_interval == 0) {
      opts_.progress({x.digit_count(d_.base().value()), evaluations_, elapsed()});
    }
    return v;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  std::uint64_t evaluations() const { return evaluations_; }

  bool stop_rule(const Natural& x, const Natural& v) const { return x > block_ && v >= x + block_; }

  // Least z in [start, limit] with f(z) >= z + threshold, via unbounded
  // binary search over safeleft ranges <x, x + p>.
  std::optional<Crossing> first_crossing(const Natural& start, unsigned threshold, const Natural& limit) {
    if (start.is_zero()) throw ContractViolation("first_crossing needs start >= 1");
    if (start > limit) return std::nullopt;
    SafeRange range{start - 1, 1};
    while (true) {
      Natural& x = range.x;
      Natural& p = range.p;
      if (x >= limit) return std::nullopt;
      if (p > limit - x) p = limit - x;
      if (p == 1) {
        Natural z = x + 1;
        Natural v = eval(z);
        if (v >= z + threshold) return Crossing{std::move(z), std::move(v)};
        x = std::move(z);
        p = 2;
        continue;
      }
      Natural y = x + p;
      Natural v = eval(y);
      if (v < x + threshold) {
        // f is nondecreasing: f(z) <= v < x + threshold < z + threshold on (x, y].
        if (opts_.trace) opts_.trace({SearchEvent::Kind::Skip, x, y, v});
        x = std::move(y);
        p *= 2;
      } else {
        p = (p + 1) / 2;
      }
    }
  }

  // Least x in [min_x, bound] with f(x) = x; NotExists needs a stop-rule
  // certificate or a proven bound.
  SearchOutcome equality(const Natural& min_x, const Natural& bound, bool proven) {
    Natural x = min_x;
    Natural v = eval(x);
    while (true) {
      if (x > bound) return exhausted(bound, proven);
      if (v == x) return finish(Status::Found, x, std::nullopt, bound);
      if (v > x) {
        if (stop_rule(x, v)) return finish(Status::NotExists, std::nullopt, x, bound);
        // f(z) >= f(x) = v > z for every z in (x, v).
        if (opts_.trace) opts_.trace({SearchEvent::Kind::Jump, x, v, v});
        x = v;
        if (x > bound) return exhausted(bound, proven);
        v = eval(x);
      } else {
        auto next = first_crossing(x + 1, 0, bound);
        if (!next) return exhausted(bound, proven);
        x = std::move(next->x);
        v = std::move(next->value);
      }
    }
  }

  SearchOutcome finish(Status status, std::optional<Natural> value, std::optional<Natural> certificate,
                       const Natural& bound) {
    if (opts_.progress) {
      const Natural& at = value ? *value : (certificate ? *certificate : bound);
      opts_.progress({at.digit_count(d_.base().value()), evaluations_, elapsed()});
    }
    SearchOutcome out;
    out.status = status;
    out.value = std::move(value);
    out.certificate = std::move(certificate);
    out.bound_used = bound;
    out.evaluations = evaluations_;
    out.elapsed = elapsed();
    return out;
  }

 private:
  // Every x <= bound has been ruled out.
  SearchOutcome exhausted(const Natural& bound, bool proven) {
    if (!proven) return finish(Status::Unresolved, std::nullopt, std::nullopt, bound);
    if (d_.is_single_digit() && !d_.is_zero()) {
      // Nothing above d * b^b by the leading-digit argument; no stop-rule witness needed.
      return finish(Status::NotExists, std::nullopt, std::nullopt, bound);
    }
    // b^(b+3) for zero and b^(K+n) - 1 otherwise satisfy the stop rule;
    // check it rather than trust it.
    Natural witness = proven_bound(d_);
    if (!d_.is_zero()) --witness;
    const Natural v = eval(witness);
    if (witness <= bound && stop_rule(witness, v)) {
      return finish(Status::NotExists, std::nullopt, std::move(witness), bound);
    }
    return finish(Status::Unresolved, std::nullopt, std::nullopt, bound);
  }

  const Sticker& d_;
  const SearchOptions& opts_;
  Natural block_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t evaluations_ = 0;
};

Natural bound_for(const Sticker& d, const SearchOptions& opts) {
  return opts.bound ? *opts.bound : solution_bound(d, opts.power_of_two_cap);
}

// Whether exhausting the effective bound rules out every larger solution.
bool proven_for(const Sticker& d, const Natural& bound) { return bound >= proven_bound(d); }

SearchOutcome ge_with(Searcher& s, const Sticker& d, const Natural& min_x, const SearchOptions& opts) {
  if (min_x.is_zero()) throw DomainError("find_a_ge needs min_x >= 1");
  const Natural bound = bound_for(d, opts);
  // Beyond a proven bound f stays ahead of x, so the answer is min_x itself.
  const Natural limit = std::max(bound, min_x);
  auto hit = s.first_crossing(min_x, 0, limit);
  if (!hit) return s.finish(Status::Unresolved, std::nullopt, std::nullopt, limit);
  return s.finish(Status::Found, std::move(hit->x), std::nullopt, limit);
}

}  // namespace

SearchOutcome find_a_ge(const Sticker& d, const Natural& min_x, const SearchOptions& opts) {
  Searcher s(d, opts);
  return ge_with(s, d, min_x, opts);
}

SearchOutcome find_a_gt(const Sticker& d, const SearchOptions& opts) {
  Searcher s(d, opts);
  SearchOutcome ge = ge_with(s, d, 1, opts);
  if (ge.status != Status::Found) return ge;
  const Natural limit = std::max(bound_for(d, opts), *ge.value);
  Natural x = *ge.value;
  Natural v = s.eval(x);
  std::uint64_t steps = 0;
  while (v <= x) {
    if (v == x && steps < opts.step_cap) {
      ++steps;
      ++x;
      if (x > limit) return s.finish(Status::Unresolved, std::nullopt, std::nullopt, limit);
      v = s.eval(x);
      continue;
    }
    auto hit = s.first_crossing(x + 1, 1, limit);
    if (!hit) return s.finish(Status::Unresolved, std::nullopt, std::nullopt, limit);
    x = std::move(hit->x);
    v = std::move(hit->value);
  }
  return s.finish(Status::Found, std::move(x), std::nullopt, limit);
}

SearchOutcome find_a_eq(const Sticker& d, const Natural& min_x, const SearchOptions& opts) {
  if (min_x.is_zero()) throw DomainError("find_a_eq needs min_x >= 1");
  const Natural bound = bound_for(d, opts);
  if (min_x > bound) {
    throw DomainError("min_x " + min_x.to_string() + " exceeds bound " + bound.to_string());
  }
  Searcher s(d, opts);
  return s.equality(min_x, bound, proven_for(d, bound));
}

EnumerationResult enumerate_solutions(const Sticker& d, const SearchOptions& opts) {
  const Natural bound = opts.bound ? *opts.bound : proven_bound(d);
  const bool proven = proven_for(d, bound);
  Searcher s(d, opts);
  EnumerationResult result;
  result.bound_used = bound;
  Natural x = 1;
  while (x <= bound) {
    SearchOutcome step = s.equality(x, bound, proven);
    if (step.status == Status::Found) {
      x = *step.value + 1;
      result.solutions.push_back(std::move(*step.value));
      continue;
    }
    result.complete = step.status == Status::NotExists;
    break;
  }
  if (x > bound) result.complete = proven;
  if (!result.solutions.empty()) result.max = result.solutions.back();
  result.evaluations = s.evaluations();
  result.elapsed = s.elapsed();
  return result;
}

SearchOutcome classify_zero(Base b, const SearchOptions& opts) {
  const Sticker zero(b, {0});
  SearchOptions local = opts;
  local.bound.reset();
  return find_a_eq(zero, 1, local);
}

Relation classify_relation(const Sticker& d, const SearchOptions& opts) {
  const SearchOutcome eq = find_a_eq(d, 2, opts);
  if (eq.status == Status::Unresolved) {
    throw SearchUnresolved("a_= undecided for sticker " + d.to_string());
  }
  if (eq.status == Status::NotExists) return Relation::NoEq;
  const SearchOutcome gt = find_a_gt(d, opts);
  if (gt.status != Status::Found) throw SearchUnresolved("a_> undecided for sticker " + d.to_string());
  return *eq.value < *gt.value ? Relation::EqBeforeGt : Relation::GeEqualsGt;
}

}  // namespace archive_label
