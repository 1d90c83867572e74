#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "archive_label/natural.hpp"
#include "archive_label/numerals.hpp"
#include "archive_label/search.hpp"

namespace archive_label {

// Expected wall-clock class of a generator or table cell.
enum class Budget { Fast, Desk, Long };

std::string_view to_string(Budget b);

// a_=(d, b) for d = 1..b-1 (d = 1 skips the trivial solution x = 1).
std::vector<Natural> gen_a_eq_digits(Base b, const SearchOptions& opts = {});

// a_>(1, b) for b = 1..b_max. The b = 1 term is the constant 2 (unary is
// not computed).
std::vector<Natural> gen_a_gt_ones(unsigned b_max, const SearchOptions& opts = {});

// Number of x >= 1 with f_1(x, b) = x.
std::size_t count_f1_solutions(Base b, const SearchOptions& opts = {});

// (b^b - b) / (b - 1): b-1 ones followed by a zero, in base b.
Natural largest_f1_solution(Base b);

// Bases in 2..b_max where f_0(x, b) = x has no solution.
std::vector<unsigned> bases_without_zero_solution(unsigned b_max, const SearchOptions& opts = {});

// A registry entry: an integer sequence reproduced by one of the
// generators above.
struct SequenceSpec {
  std::string id;
  std::string description;
  std::string anchor;  // where the values are published
  std::int64_t first_index = 1;
  std::size_t count = 0;  // default number of terms
  Budget budget = Budget::Fast;
  // Added to every generated value, e.g. A130432 counts x = 0 as a solution.
  std::uint64_t offset_adjust = 0;
  std::function<std::vector<Natural>(std::int64_t first, std::size_t count)> generator;
};

// Sequences mentioned alongside the others that this library does not
// generate.
struct OutOfScopeSequence {
  std::string id;
  std::string reason;
};

const std::vector<SequenceSpec>& sequence_registry();
const std::vector<OutOfScopeSequence>& out_of_scope_sequences();
// Throws std::out_of_range for unknown ids.
const SequenceSpec& find_sequence(std::string_view id);

struct BFileLine {
  std::int64_t index;
  Natural value;
};

// OEIS b-file: "index value\n" per line, indices consecutive.
struct BFile {
  std::vector<BFileLine> lines;
  std::string render() const;
};

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BFile make_bfile(const SequenceSpec& spec, std::optional<std::int64_t> first = std::nullopt,
                 std::optional<std::size_t> count = std::nullopt);

// Writes the rendered b-file; throws ExportError if the stream fails.
BFile export_bfile(const SequenceSpec& spec, std::ostream& out,
                   std::optional<std::int64_t> first = std::nullopt,
                   std::optional<std::size_t> count = std::nullopt);

enum class TableName { T1_AEQ_AGT, T2_ED_LENGTHS, T3_ED_MAX, T4_ZERO_BASES, T5_BASE2_POW2, T6_A10_BASES };

std::string_view to_string(TableName t);
std::optional<TableName> parse_table_name(std::string_view name);

// Cells beyond the budget render as UNRESOLVED.
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Tab-separated, header first, LF line endings.
  std::string render() const;
};

Table make_table(TableName name, bool long_jobs = false, const SearchOptions& opts = {});

}  // namespace archive_label
