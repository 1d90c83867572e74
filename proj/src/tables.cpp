#include <array>
#include <string>

#include "archive_label/sequences.hpp"

namespace archive_label {

namespace {

constexpr std::array<TableName, 6> kTables = {TableName::T1_AEQ_AGT,    TableName::T2_ED_LENGTHS,
                                              TableName::T3_ED_MAX,     TableName::T4_ZERO_BASES,
                                              TableName::T5_BASE2_POW2, TableName::T6_A10_BASES};

const std::string kUnresolved = "UNRESOLVED";

std::string cell(const SearchOutcome& out) {
  return out.status == Status::Found ? out.value->to_string() : std::string(to_string(out.status));
}

Table t1(const SearchOptions& opts) {
  Table t{"T1_AEQ_AGT", {"d", "a_eq", "a_gt"}, {}};
  for (unsigned d = 1; d <= 9; ++d) {
    const Sticker s(Base(10), {d});
    t.rows.push_back({std::to_string(d), cell(find_a_eq(s, 2, opts)), cell(find_a_gt(s, opts))});
  }
  return t;
}

Table ed_table(TableName name, const SearchOptions& opts) {
  static const std::array<const char*, 9> ids = {"A014778", "A101639", "A101640", "A101641", "A130427",
                                                 "A130428", "A130429", "A130430", "A130431"};
  const bool lengths = name == TableName::T2_ED_LENGTHS;
  Table t{std::string(to_string(name)), lengths ? std::vector<std::string>{"d", "oeis", "terms"}
                                                : std::vector<std::string>{"d", "max"},
          {}};
  SearchOptions local = opts;
  local.bound.reset();
  for (unsigned d = 1; d <= 9; ++d) {
    const EnumerationResult e = enumerate_solutions(Sticker(Base(10), {d}), local);
    const std::string value = !e.complete ? kUnresolved
                              : lengths   ? std::to_string(e.count())
                                          : (e.max ? e.max->to_string() : "-");
    if (lengths) {
      t.rows.push_back({std::to_string(d), ids[d - 1], value});
    } else {
      t.rows.push_back({std::to_string(d), value});
    }
  }
  return t;
}

// Rows only for bases where a solution exists.
Table t4(bool long_jobs, const SearchOptions& opts) {
  Table t{"T4_ZERO_BASES", {"base", "a_eq_zero"}, {}};
  const unsigned last = long_jobs ? 31 : 20;
  for (unsigned b = 2; b <= last; ++b) {
    const SearchOutcome z = classify_zero(Base(b), opts);
    if (z.status == Status::NotExists) continue;
    t.rows.push_back({std::to_string(b), cell(z)});
  }
  return t;
}

std::string describe_solutions(const EnumerationResult& e) {
  if (e.count() == 0) return e.complete ? "none" : kUnresolved;
  if (e.count() == 1) return e.solutions.front().to_string();
  const bool consecutive = e.solutions.back() - e.solutions.front() + 1 == Natural(e.count());
  return std::to_string(e.count()) + (consecutive ? " consecutive values" : " values");
}

Table t5(bool long_jobs, const SearchOptions& opts) {
  Table t{"T5_BASE2_POW2", {"d", "sticker", "solutions", "bits"}, {}};
  for (unsigned p = 1; p <= 10; ++p) {
    const Sticker s = Sticker::parse("1" + std::string(p, '0'), Base(2));
    const std::string d = std::to_string(1u << p);
    if (p > 5 && !long_jobs) {
      t.rows.push_back({d, s.to_string(), kUnresolved, kUnresolved});
      continue;
    }
    SearchOptions local = opts;
    local.bound.reset();
    const EnumerationResult e = enumerate_solutions(s, local);
    const std::string bits = e.count() ? std::to_string(e.solutions.front().bit_length()) : "-";
    t.rows.push_back({d, s.to_string(), describe_solutions(e), bits});
  }
  return t;
}

Table t6(const SearchOptions& opts) {
  Table t{"T6_A10_BASES", {"base", "length", "a_eq"}, {}};
  for (unsigned b = 2; b <= 6; ++b) {
    const Base base(b);
    const SearchOutcome out = find_a_eq(Sticker(base, {1, 0}), 1, opts);
    if (out.status != Status::Found) {
      t.rows.push_back({std::to_string(b), kUnresolved, std::string(to_string(out.status))});
      continue;
    }
    t.rows.push_back({std::to_string(b), std::to_string(out.value->digit_count(b)),
                      format_numeral(*out.value, base) + "_" + std::to_string(b)});
  }
  return t;
}

}  // namespace

std::string_view to_string(TableName t) {
  switch (t) {
    case TableName::T1_AEQ_AGT: return "T1_AEQ_AGT";
    case TableName::T2_ED_LENGTHS: return "T2_ED_LENGTHS";
    case TableName::T3_ED_MAX: return "T3_ED_MAX";
    case TableName::T4_ZERO_BASES: return "T4_ZERO_BASES";
    case TableName::T5_BASE2_POW2: return "T5_BASE2_POW2";
    case TableName::T6_A10_BASES: return "T6_A10_BASES";
  }
  return "";
}

std::optional<TableName> parse_table_name(std::string_view name) {
  for (TableName t : kTables) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::string Table::render() const {
  std::string out;
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out.push_back('\t');
      out += cells[i];
    }
    out.push_back('\n');
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

Table make_table(TableName name, bool long_jobs, const SearchOptions& opts) {
  switch (name) {
    case TableName::T1_AEQ_AGT: return t1(opts);
    case TableName::T2_ED_LENGTHS:
    case TableName::T3_ED_MAX: return ed_table(name, opts);
    case TableName::T4_ZERO_BASES: return t4(long_jobs, opts);
    case TableName::T5_BASE2_POW2: return t5(long_jobs, opts);
    case TableName::T6_A10_BASES: return t6(opts);
  }
  return {};
}

}  // namespace archive_label
