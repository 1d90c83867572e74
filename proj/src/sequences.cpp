#include "archive_label/sequences.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "archive_label/counting.hpp"
#include "archive_label/errors.hpp"

namespace archive_label {

std::string_view to_string(Budget b) {
  switch (b) {
    case Budget::Fast: return "fast";
    case Budget::Desk: return "desk";
    case Budget::Long: return "long";
  }
  return "long";
}

namespace {

Sticker decimal_sticker(std::int64_t d) { return Sticker::parse(std::to_string(d), Base(10)); }

Natural require_found(const SearchOutcome& out, const std::string& what) {
  if (out.status != Status::Found) {
    throw SearchUnresolved(what + ": " + std::string(to_string(out.status)));
  }
  return *out.value;
}

// a_= skips x = 1, which only matters for the sticker "1".
Natural exactly(const Sticker& d, const SearchOptions& opts) {
  return require_found(find_a_eq(d, 2, opts), "a_=(" + d.to_string() + ")");
}

std::vector<Natural> solutions_of(std::int64_t d) {
  EnumerationResult e = enumerate_solutions(decimal_sticker(d));
  if (!e.complete) throw SearchUnresolved("E_" + std::to_string(d) + " enumeration incomplete");
  return e.solutions;
}

std::vector<Natural> slice(const std::vector<Natural>& all, std::int64_t first, std::size_t count) {
  std::vector<Natural> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t pos = first - 1 + static_cast<std::int64_t>(i);
    if (pos < 0) continue;
    if (static_cast<std::size_t>(pos) >= all.size()) break;
    out.push_back(all[static_cast<std::size_t>(pos)]);
  }
  return out;
}

template <class F>
std::function<std::vector<Natural>(std::int64_t, std::size_t)> per_index(F term) {
  return [term](std::int64_t first, std::size_t count) {
    std::vector<Natural> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(term(first + static_cast<std::int64_t>(i)));
    return out;
  };
}

SequenceSpec ed_spec(std::string id, int d, std::size_t terms) {
  SequenceSpec s;
  s.id = std::move(id);
  s.description = "E_" + std::to_string(d) + ": all x with f_" + std::to_string(d) + "(x) = x";
  s.anchor = "T2_ED_LENGTHS (length), T3_ED_MAX (maximum)";
  s.first_index = 1;
  s.count = terms;
  s.budget = Budget::Desk;
  s.generator = [d](std::int64_t first, std::size_t count) { return slice(solutions_of(d), first, count); };
  return s;
}

std::vector<SequenceSpec> build_registry() {
  std::vector<SequenceSpec> r;
  r.push_back({"A094798", "f_1(n): ones in the decimal numerals 1..n", "f(13) = 6", 0, 1000, Budget::Fast, 0,
               per_index([](std::int64_t n) { return count_up_to(n, decimal_sticker(1)); })});
  r.push_back({"A061217", "f_0(n): zeros in the decimal numerals 1..n", "f_0(111111111111) = 120987654321", 1,
               1000, Budget::Fast, 0,
               per_index([](std::int64_t n) { return count_up_to(n, decimal_sticker(0)); })});
  r.push_back({"A163500", "a_=(d): least x > 1 with f_d(x) = x", "T1_AEQ_AGT", 1, 9, Budget::Fast, 0,
               per_index([](std::int64_t d) { return exactly(decimal_sticker(d), {}); })});
  r.push_back({"A164321", "a_>(d): least x with f_d(x) > x", "T1_AEQ_AGT", 1, 9, Budget::Fast, 0,
               per_index([](std::int64_t d) {
                 return require_found(find_a_gt(decimal_sticker(d)), "a_>(" + std::to_string(d) + ")");
               })});
  r.push_back({"A164935", "a_>=(d): least x with f_d(x) >= x", "a_>= = min(a_=, a_>)", 1, 9, Budget::Fast, 0,
               per_index([](std::int64_t d) {
                 return require_found(find_a_ge(decimal_sticker(d), 1), "a_>=(" + std::to_string(d) + ")");
               })});
  r.push_back(ed_spec("A014778", 1, 83));
  r.push_back(ed_spec("A101639", 2, 13));
  r.push_back(ed_spec("A101640", 3, 35));
  r.push_back(ed_spec("A101641", 4, 47));
  r.push_back(ed_spec("A130427", 5, 4));
  r.push_back(ed_spec("A130428", 6, 71));
  r.push_back(ed_spec("A130429", 7, 48));
  r.push_back(ed_spec("A130430", 8, 343));
  r.push_back(ed_spec("A130431", 9, 8));
  r.push_back({"A130432", "|E_d| + 1: solutions of f_d(x) = x counting x = 0", "T2_ED_LENGTHS plus one", 1, 9,
               Budget::Desk, 1, per_index([](std::int64_t d) { return Natural(solutions_of(d).size()); })});
  r.push_back({"A092175", "a_>(1, b): least x with f_1(x, b) > x", "base-b ones sequence", 1, 11, Budget::Fast, 0,
               [](std::int64_t first, std::size_t count) {
                 std::vector<Natural> all = gen_a_gt_ones(static_cast<unsigned>(first) + count - 1);
                 return slice(all, first, count);
               }});
  r.push_back({"A165617", "number of x with f_1(x, b) = x", "ninth term is 83", 2, 9, Budget::Desk, 0,
               per_index([](std::int64_t b) { return Natural(count_f1_solutions(Base(static_cast<unsigned>(b)))); })});
  r.push_back({"A226238", "largest x with f_1(x, b) = x", "b-1 ones then a zero, base b", 2, 9, Budget::Fast, 0,
               per_index([](std::int64_t b) { return largest_f1_solution(Base(static_cast<unsigned>(b))); })});
  r.push_back({"A364972", "bases b where f_0(x, b) = x has no solution", "a_=(0, b) undefined", 1, 15,
               Budget::Desk, 0, [](std::int64_t first, std::size_t count) {
                 std::vector<Natural> all;
                 const std::size_t need = static_cast<std::size_t>(first) + count - 1;
                 for (unsigned b = 2; all.size() < need; ++b) {
                   const SearchOutcome z = classify_zero(Base(b));
                   if (z.status == Status::Unresolved) {
                     throw SearchUnresolved("zero classification undecided in base " + std::to_string(b));
                   }
                   if (z.status == Status::NotExists) all.emplace_back(b);
                 }
                 return slice(all, first, count);
               }});
  return r;
}

}  // namespace

std::vector<Natural> gen_a_eq_digits(Base b, const SearchOptions& opts) {
  std::vector<Natural> out;
  for (unsigned d = 1; d < b.value(); ++d) out.push_back(exactly(Sticker(b, {d}), opts));
  return out;
}

std::vector<Natural> gen_a_gt_ones(unsigned b_max, const SearchOptions& opts) {
  std::vector<Natural> out;
  if (b_max >= 1) out.emplace_back(2);  // unary: f_1(x, 1) = x(x+1)/2 first exceeds x at x = 2
  for (unsigned b = 2; b <= b_max; ++b) {
    out.push_back(require_found(find_a_gt(Sticker(Base(b), {1}), opts), "a_>(1, " + std::to_string(b) + ")"));
  }
  return out;
}

std::size_t count_f1_solutions(Base b, const SearchOptions& opts) {
  SearchOptions local = opts;
  local.bound.reset();
  EnumerationResult e = enumerate_solutions(Sticker(b, {1}), local);
  if (!e.complete) throw SearchUnresolved("f_1 enumeration incomplete in base " + std::to_string(b.value()));
  return e.count();
}

Natural largest_f1_solution(Base b) {
  const Natural bb = Natural::pow(b.value(), b.value());
  return (bb - b.value()) / (b.value() - 1);
}

std::vector<unsigned> bases_without_zero_solution(unsigned b_max, const SearchOptions& opts) {
  std::vector<unsigned> out;
  for (unsigned b = 2; b <= b_max; ++b) {
    const SearchOutcome z = classify_zero(Base(b), opts);
    if (z.status == Status::Unresolved) {
      throw SearchUnresolved("zero classification undecided in base " + std::to_string(b));
    }
    if (z.status == Status::NotExists) out.push_back(b);
  }
  return out;
}

const std::vector<SequenceSpec>& sequence_registry() {
  static const std::vector<SequenceSpec> registry = build_registry();
  return registry;
}

const std::vector<OutOfScopeSequence>& out_of_scope_sequences() {
  static const std::vector<OutOfScopeSequence> notes = {
      {"A033307", "digits of the Champernowne constant; the concatenated stream is not counted"},
  };
  return notes;
}

const SequenceSpec& find_sequence(std::string_view id) {
  for (const SequenceSpec& s : sequence_registry()) {
    if (s.id == id) return s;
  }
  throw std::out_of_range("unknown sequence id " + std::string(id));
}

std::string BFile::render() const {
  std::string out;
  for (const BFileLine& line : lines) {
    out += std::to_string(line.index);
    out.push_back(' ');
    out += line.value.to_string();
    out.push_back('\n');
  }
  return out;
}

BFile make_bfile(const SequenceSpec& spec, std::optional<std::int64_t> first, std::optional<std::size_t> count) {
  const std::int64_t start = first.value_or(spec.first_index);
  const std::size_t n = count.value_or(spec.count);
  BFile file;
  if (n == 0) return file;
  std::vector<Natural> values = spec.generator(start, n);
  file.lines.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    file.lines.push_back({start + static_cast<std::int64_t>(i), values[i] + spec.offset_adjust});
  }
  return file;
}

BFile export_bfile(const SequenceSpec& spec, std::ostream& out, std::optional<std::int64_t> first,
                   std::optional<std::size_t> count) {
  BFile file = make_bfile(spec, first, count);
  out << file.render();
  out.flush();
  if (!out) throw ExportError("failed writing b-file for " + spec.id);
  return file;
}

}  // namespace archive_label
