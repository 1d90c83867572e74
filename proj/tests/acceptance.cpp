// Acceptance gate: one line per criterion, "[PASS]" or "[FAIL]".
//
//   acceptance [--only N] [--long]
//
// Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "archive_label/counting.hpp"
#include "archive_label/numerals.hpp"
#include "archive_label/search.hpp"
#include "archive_label/sequences.hpp"
#include "oracle.hpp"

using namespace archive_label;

namespace {

// Collects sub-check failures; a criterion passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    std::ostringstream msg;
    msg << what << ": got " << got << ", want " << want;
    expect(got == want, msg.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checker&, bool long_mode)> run;
};

Sticker st(const std::string& s, unsigned b = 10) { return Sticker::parse(s, Base(b)); }
Natural N(const std::string& s) { return Natural::parse(s); }

std::string value_of(const SearchOutcome& o) {
  return o.status == Status::Found ? o.value->to_string() : std::string(to_string(o.status));
}

// --- 1 -------------------------------------------------------------------

void golden_table(Checker& c, bool) {
  const char* eq[] = {"199981", "28263827", "371599983", "499999984", "10000000000",
                      "9500000000", "9465000000", "9465000000", "10000000000"};
  const char* gt[] = {"199991", "28263828", "371599993", "499999994", "5555555555",
                      "6666666666", "7777777777", "8888888888", "9999999999"};
  const Table t = make_table(TableName::T1_AEQ_AGT);
  c.equal(t.rows.size(), std::size_t{9}, "row count");
  for (std::size_t i = 0; i < 9 && i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    c.expect(row.size() == 3, "row " + std::to_string(i + 1) + " width");
    if (row.size() != 3) continue;
    c.equal(row[0], std::to_string(i + 1), "d");
    c.equal(row[1], std::string(eq[i]), "a_eq(" + std::to_string(i + 1) + ")");
    c.equal(row[2], std::string(gt[i]), "a_gt(" + std::to_string(i + 1) + ")");
  }
}

// --- 2 -------------------------------------------------------------------

void puzzle_chain(Checker& c, bool) {
  const Sticker one = st("1");
  const SearchOutcome eq = find_a_eq(one, 2);
  const SearchOutcome gt = find_a_gt(one);
  c.equal(value_of(eq), std::string("199981"), "find eq d=1");
  c.equal(value_of(gt), std::string("199991"), "find gt d=1");

  // Checked over the closed range as stated; the last point is a_> itself.
  std::vector<std::string> off;
  for (std::uint64_t x = 199981; x <= 199991; ++x) {
    const Natural f = count_up_to(x, one);
    if (f != Natural(x)) off.push_back("f(" + std::to_string(x) + ")=" + f.to_string());
  }
  bool half_open = true;
  for (std::uint64_t x = 199981; x < 199991; ++x) half_open &= count_up_to(x, one) == Natural(x);
  c.note(std::string("f(x)=x on [199981,199990]: ") + (half_open ? "yes" : "no"));
  std::string joined;
  for (const auto& s : off) joined += (joined.empty() ? "" : ", ") + s;
  c.expect(off.empty(), "f(x)=x for every x in [199981,199991] fails at " + joined);
}

// --- 3 -------------------------------------------------------------------

void zero_base_ten(Checker& c, bool) {
  const Sticker zero = st("0");
  c.equal(value_of(find_a_ge(zero)), std::string("100559404366"), "find ge d=0");
  c.equal(count_up_to(N("100559404366"), zero), N("100559404367"), "f(100559404366)");
  c.equal(count_up_to(N("100559404365"), zero), N("100559404364"), "f(100559404365)");
  const SearchOutcome eq = find_a_eq(zero, 1);
  c.equal(std::string(to_string(eq.status)), std::string("NOT_EXISTS"), "find eq d=0");
  c.expect(eq.certificate.has_value(), "certificate present");
  if (eq.certificate) {
    const Natural& y = *eq.certificate;
    const Natural block = Natural::pow(10, 10);
    const Natural fy = count_up_to(y, zero);
    c.note("certificate y=" + y.to_string() + " f(y)=" + fy.to_string());
    c.expect(y > block, "y > 10^10");
    c.expect(fy > y + block, "f(y) > y + 10^10");
  }
}

// --- 4 -------------------------------------------------------------------

void enumeration(Checker& c, bool long_mode) {
  const std::size_t counts[] = {83, 13, 35, 47, 4, 71, 48, 343, 8};
  const char* maxima[] = {"1111111110",  "10535000000", "20500000000", "30500000000", "40000000000",
                          "59628399995", "69971736170", "79998399997", "80000000000"};
  for (unsigned d = 1; d <= 9; ++d) {
    const Sticker s(Base(10), {d});
    const EnumerationResult r = enumerate_solutions(s);
    const std::string tag = "d=" + std::to_string(d);
    c.expect(r.complete, tag + " complete");
    c.equal(r.count(), counts[d - 1], tag + " count");
    c.equal(r.max ? r.max->to_string() : "-", std::string(maxima[d - 1]), tag + " max");
    c.expect((r.count() + 1) % d == 0, tag + " |E_d|+1 divisible by d");
    bool all_fixed = true;
    for (const Natural& x : r.solutions) all_fixed &= count_up_to(x, s) == x;
    c.expect(all_fixed, tag + " every listed x has f(x)=x");
  }
  if (!long_mode) return;
  const std::pair<const char*, std::size_t> extended[] = {{"10", 3167}, {"11", 9043}, {"12", 7485}};
  for (const auto& [s, n] : extended) {
    const EnumerationResult r = enumerate_solutions(st(s));
    c.expect(r.complete, std::string("d=") + s + " complete");
    c.equal(r.count(), n, std::string("d=") + s + " count");
  }
}

// --- 5 -------------------------------------------------------------------

void multi_digit(Checker& c, bool) {
  const std::string nines88(88, '9');
  const std::string want_ge[] = {"10" + nines88 + "810", "11" + nines88 + "811",
                                 "12966240702308729866151" + std::string(68, '9') + "812"};
  const char* stickers[] = {"10", "11", "12"};
  for (int i = 0; i < 3; ++i) {
    const Sticker d = st(stickers[i]);
    const std::string ge = value_of(find_a_ge(d));
    c.equal(ge, want_ge[i], std::string("a_ge(") + stickers[i] + ")");
    c.equal(ge.size(), want_ge[i].size(), std::string("digits of a_ge(") + stickers[i] + ")");
    c.equal(value_of(find_a_eq(d, 1)), ge, std::string("a_eq(") + stickers[i] + ") = a_ge");
  }
}

// --- 6 -------------------------------------------------------------------

void bases(Checker& c, bool) {
  const char* ones[] = {"3", "13", "29", "182", "427", "3931", "8185", "102781", "199991", "3179143"};
  const std::vector<Natural> gen = gen_a_gt_ones(11);
  for (unsigned b = 2; b <= 11; ++b) {
    c.equal(gen.size() > b - 1 ? gen[b - 1].to_string() : "-", std::string(ones[b - 2]),
            "A092175 b=" + std::to_string(b));
    c.equal(value_of(find_a_gt(Sticker(Base(b), {1}))), std::string(ones[b - 2]),
            "find gt d=1 b=" + std::to_string(b));
  }
  const std::size_t counts[] = {2, 4, 8, 4, 21, 5, 45, 49, 83};
  for (unsigned b = 2; b <= 10; ++b) {
    const EnumerationResult r = enumerate_solutions(Sticker(Base(b), {1}));
    const std::string tag = "b=" + std::to_string(b);
    c.expect(r.complete, tag + " enumeration complete");
    c.equal(r.count(), counts[b - 2], "A165617 " + tag);
    c.equal(count_f1_solutions(Base(b)), counts[b - 2], "count_f1_solutions " + tag);
    c.equal(r.max ? r.max->to_string() : "-", largest_f1_solution(Base(b)).to_string(), "A226238 " + tag);
  }
}

// --- 7 -------------------------------------------------------------------

struct PowRow {
  unsigned p;
  const char* solution;  // empty: checked by shape only
  std::size_t bits;
  std::size_t count;
};

void check_power_row(Checker& c, const PowRow& row) {
  const Sticker d(Base(2), [&] {
    Digits ds{1};
    ds.resize(row.p + 1, 0);
    return ds;
  }());
  const std::string tag = "d=2^" + std::to_string(row.p);
  const EnumerationResult r = enumerate_solutions(d);
  c.expect(r.complete, tag + " complete");
  c.equal(r.count(), row.count, tag + " solution count");
  if (!r.solutions.empty()) {
    if (*row.solution) c.equal(r.solutions.front().to_string(), std::string(row.solution), tag + " solution");
    c.equal(r.solutions.front().bit_length(), row.bits, tag + " bits");
    bool consecutive = true;
    for (std::size_t i = 1; i < r.solutions.size(); ++i) consecutive &= r.solutions[i] == r.solutions[i - 1] + 1;
    c.expect(consecutive, tag + " solutions consecutive");
  }
}

void base_two_powers(Checker& c, bool long_mode) {
  const PowRow rows[] = {{1, "21", 5, 1},
                         {2, "610", 10, 1},
                         {3, "283187", 19, 1},
                         {4, "35609822115", 36, 1},
                         {5, "300185978028231432373", 69, 1}};
  for (const PowRow& row : rows) check_power_row(c, row);
  if (!long_mode) return;

  for (const PowRow& row : {PowRow{6, "", 134, 1}, PowRow{8, "", 520, 1}, PowRow{9, "", 1033, 1},
                            PowRow{10, "", 2058, 1023}}) {
    check_power_row(c, row);
  }
  // d = 128: nothing up to 1200 decimal digits, and beyond that the stop
  // rule certificate must hold.
  Digits ds{1};
  ds.resize(8, 0);
  const Sticker d128(Base(2), ds);
  SearchOptions to1200;
  to1200.bound = Natural::pow(10, 1200);
  const SearchOutcome scan = find_a_eq(d128, 1, to1200);
  c.expect(scan.status != Status::Found, "d=128 no solution below 10^1200");
  const SearchOutcome full = find_a_eq(d128, 1);
  c.equal(std::string(to_string(full.status)), std::string("NOT_EXISTS"), "d=128 status");
  if (full.certificate) {
    const Natural& y = *full.certificate;
    c.expect(stop_rule_fired(y, count_up_to(y, d128), d128), "d=128 certificate re-verified");
    c.note("d=128 certificate has " + std::to_string(y.bit_length()) + " bits");
  }
}

// --- 8 -------------------------------------------------------------------

void zero_across_bases(Checker& c, bool long_mode) {
  std::vector<std::pair<unsigned, const char*>> table = {
      {2, "8"}, {11, "3152738985031"}, {13, "3950024143546664"}, {16, "295764262988176583799"}};
  if (long_mode) {
    table.insert(table.end(), {{24, "32038681563209056709427351442469835"},
                               {26, "160182333966853031081693091544779177187"},
                               {28, "928688890453756699447122559347771300777482"},
                               {29, "74508769042363852559476397161338769391145562"},
                               {31, "529428987529739460369842168744635422842585510266"}});
  }
  for (const auto& [b, v] : table) c.equal(value_of(classify_zero(Base(b))), std::string(v), "a_eq(0, " + std::to_string(b) + ")");

  const std::vector<unsigned> listed{3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 17, 18, 19, 20};
  const unsigned top = long_mode ? 31 : 20;
  for (unsigned b = 2; b <= top; ++b) {
    const SearchOutcome o = classify_zero(Base(b));
    bool absent = std::find(listed.begin(), listed.end(), b) != listed.end();
    if (b > 20) absent = std::none_of(table.begin(), table.end(), [b](const auto& r) { return r.first == b; });
    c.equal(std::string(to_string(o.status)), std::string(absent ? "NOT_EXISTS" : "FOUND"), "zero status b=" + std::to_string(b));
    if (o.status == Status::NotExists) {
      c.expect(o.certificate && stop_rule_fired(*o.certificate, count_up_to(*o.certificate, Sticker(Base(b), {0})),
                                                Sticker(Base(b), {0})),
               "certificate b=" + std::to_string(b));
    }
  }
  c.equal(bases_without_zero_solution(20).size(), listed.size(), "A364972 terms <= 20");
}

// --- 9 -------------------------------------------------------------------

void table_six(Checker& c, bool) {
  const char* numerals[] = {"10101", "102222110", "103333333333210", "10444444444444444444310",
                            "105555555555555555555555555555410"};
  std::string observed;
  for (unsigned b = 2; b <= 6; ++b) {
    const Sticker d(Base(b), {1, 0});
    const SearchOutcome o = find_a_eq(d, 1);
    c.expect(o.status == Status::Found, "a_eq(10, " + std::to_string(b) + ") found");
    if (o.status != Status::Found) continue;
    const std::string got = format_numeral(*o.value, Base(b));
    c.equal(got, std::string(numerals[b - 2]), "a_eq(10, " + std::to_string(b) + ") numeral");
    if (b >= 3) {
      const std::size_t want = b * b + b + 3;
      observed += (observed.empty() ? "" : ", ") + std::to_string(b) + ":" + std::to_string(got.size());
      c.equal(got.size(), want, "digit length b=" + std::to_string(b) + " vs b^2+b+3");
    }
  }
  c.note("observed lengths " + observed);
}

// --- 10 ------------------------------------------------------------------

std::vector<Sticker> grid_stickers(unsigned b, std::mt19937_64& rng) {
  std::vector<Sticker> out;
  for (unsigned v = 0; v < b; ++v) out.emplace_back(Base(b), Digits{v});
  for (int i = 0; i < 20; ++i) {
    Digits ds{1 + static_cast<unsigned>(rng() % (b - 1))};
    const std::size_t n = 2 + rng() % 3;
    while (ds.size() < n) ds.push_back(static_cast<unsigned>(rng() % b));
    out.emplace_back(Base(b), ds);
  }
  return out;
}

void oracle_grid(Checker& c, std::mt19937_64& rng) {
  std::size_t mismatches = 0;
  std::uint64_t points = 0;
  for (unsigned b = 2; b <= 16; ++b) {
    for (const Sticker& d : grid_stickers(b, rng)) {
      std::vector<std::uint64_t> xs;
      for (int i = 0; i < 10'000; ++i) xs.push_back(1 + rng() % 10'000'000);
      std::sort(xs.begin(), xs.end());
      BruteScan scan(d);
      std::size_t next = 0;
      const std::uint64_t top = xs.back();
      for (std::uint64_t x = 1; x <= top; ++x) {
        scan.next();
        const bool sampled = next < xs.size() && xs[next] == x;
        if (x > 10'000 && !sampled) continue;
        while (next < xs.size() && xs[next] == x) ++next;
        ++points;
        if (count_up_to(x, d) != Natural(scan.total())) {
          if (mismatches++ < 5) c.expect(false, "f != f_brute at x=" + std::to_string(x) + " d=" + d.to_string() + " b=" + std::to_string(b));
        }
      }
    }
  }
  c.expect(mismatches == 0, "oracle grid mismatches: " + std::to_string(mismatches));
  c.note("oracle grid points " + std::to_string(points));
}

void small_base_properties(Checker& c, unsigned b) {
  const std::string tag = " b=" + std::to_string(b);
  const std::uint64_t limit = 20'000;
  std::vector<std::vector<std::uint64_t>> single;
  for (unsigned v = 0; v < b; ++v) single.push_back(oracle::brute_prefix(Sticker(Base(b), {v}), limit));

  bool additive = true, monotone = true, digit_sum = true, dominance = true;
  std::uint64_t digits = 0;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    digits += to_digits(x, Base(b)).size();
    Natural sum = 0;
    for (unsigned v = 0; v < b; ++v) {
      const Sticker d(Base(b), {v});
      const Natural fx = count_up_to(x, d);
      const Natural fp = count_up_to(x - 1, d);
      additive &= fx >= fp && fx - fp == occurrences_in(x, d);
      monotone &= fp <= fx;
      sum += fx;
      if (v >= 2) dominance &= single[v - 1][x] >= single[v][x];
    }
    digit_sum &= sum == Natural(digits);
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    std::vector<Sticker> same;
    const Natural lo = Natural::pow(b, n - 1), hi = Natural::pow(b, n);
    for (Natural v = lo; v < hi; ++v) same.emplace_back(Base(b), to_digits(v, Base(b)));
    for (std::uint64_t x = 1; x <= 5000; x += 3) {
      for (std::size_t i = 0; i + 1 < same.size(); ++i) dominance &= count_up_to(x, same[i]) >= count_up_to(x, same[i + 1]);
    }
  }
  c.expect(additive, "additivity" + tag);
  c.expect(monotone, "monotonicity" + tag);
  c.expect(digit_sum, "digit-sum identity" + tag);
  c.expect(dominance, "same-length dominance" + tag);

  const Natural block = Natural::pow(b, b);
  bool periodic = true;
  for (unsigned v = 1; v < b; ++v) {
    const Sticker d(Base(b), {v});
    const Natural end = Natural(v - 1) * block;
    for (Natural x = 0; x < end; ++x) periodic &= count_up_to(x + block, d) == count_up_to(x, d) + block;
  }
  c.expect(periodic, "periodicity" + tag);

  if (b <= 3) {
    const Sticker zero(Base(b), {0});
    bool step = true;
    for (Natural x = block + 1; x < block * 1000; ++x) step &= count_up_to(x + block, zero) >= count_up_to(x, zero) + block;
    c.expect(step, "block step" + tag);
  }
}

void base_ten_spot_checks(Checker& c, std::mt19937_64& rng) {
  const Natural block = Natural::pow(10, 10);
  bool periodic = true, step = true;
  for (unsigned v = 2; v < 10; ++v) {
    const Sticker d(Base(10), {v});
    for (int i = 0; i < 500; ++i) {
      const Natural x = Natural(rng() % (std::uint64_t{v - 1} * 10'000'000'000ULL));
      periodic &= count_up_to(x + block, d) == count_up_to(x, d) + block;
    }
  }
  const Sticker zero(Base(10), {0});
  for (int i = 0; i < 2000; ++i) {
    const Natural x = block + 1 + Natural(rng() % 1'000'000'000'000'000'000ULL);
    step &= count_up_to(x + block, zero) >= count_up_to(x, zero) + block;
  }
  c.expect(periodic, "periodicity spot checks b=10");
  c.expect(step, "block step spot checks b=10");
}

void search_vs_scan(Checker& c, unsigned b) {
  std::vector<Sticker> stickers;
  for (unsigned v = 0; v < b; ++v) stickers.emplace_back(Base(b), Digits{v});
  for (unsigned hi = 1; hi < b; ++hi)
    for (unsigned lo = 0; lo < b; ++lo) stickers.emplace_back(Base(b), Digits{hi, lo});

  for (const Sticker& d : stickers) {
    const std::string tag = " d=" + d.to_string() + " b=" + std::to_string(b);
    const std::uint64_t pb = proven_bound(d).to_u64().value();
    const std::uint64_t limit = std::max<std::uint64_t>(100'000, pb <= 1'000'000 ? pb : 0);
    const auto f = oracle::brute_prefix(d, limit);
    const auto scan = oracle::linear_scan(f, 1, 1);

    auto agree = [&](const SearchOutcome& o, const std::optional<std::uint64_t>& want, const std::string& what) {
      const bool found = o.status == Status::Found;
      if (want) c.expect(found && *o.value == Natural(*want), what + tag);
      else c.expect(found && *o.value > Natural(limit), what + tag);
    };
    agree(find_a_ge(d), scan.first_ge, "ge");
    agree(find_a_gt(d), scan.first_gt, "gt");
    const SearchOutcome eq = find_a_eq(d, 1);
    if (scan.first_eq) {
      agree(eq, scan.first_eq, "eq");
    } else if (pb <= limit) {
      c.expect(eq.status == Status::NotExists, "eq" + tag);
    } else {
      c.expect(eq.status != Status::Found || *eq.value > Natural(limit), "eq" + tag);
    }

    const EnumerationResult all = enumerate_solutions(d);
    std::vector<Natural> got;
    for (const Natural& s : all.solutions)
      if (s <= Natural(limit)) got.push_back(s);
    std::vector<Natural> want(scan.solutions.begin(), scan.solutions.end());
    c.expect(got == want, "enumerate" + tag);
    if (pb <= limit) c.expect(all.complete && all.solutions.size() == want.size(), "enumerate complete" + tag);
  }
}

void properties(Checker& c, bool) {
  std::mt19937_64 rng(20240613);
  oracle_grid(c, rng);
  for (unsigned b : {2u, 3u, 4u}) small_base_properties(c, b);
  base_ten_spot_checks(c, rng);
  for (unsigned b : {2u, 3u}) search_vs_scan(c, b);
}

// --- 11 ------------------------------------------------------------------

void erratum(Checker& c, bool long_mode) {
  const Sticker s11 = st("11");
  c.equal(f_brute(999, s11), Natural(20), "f_brute(999, 11)");
  c.expect(f_brute(999, s11) != Natural(30), "f_brute(999, 11) != 3 * 10^1");
  c.equal(boundary_count(3, s11), Natural(20), "boundary_count(3, 11)");
  for (unsigned b = 2; b <= 10; ++b) {
    for (std::size_t k = 2; k <= 6; ++k) {
      const Sticker d(Base(b), {1, 1});
      const Natural top = Natural::pow(b, k) - 1;
      if (top > Natural(1'000'000)) continue;
      c.equal(boundary_count(k, d), f_brute(top, d), "boundary b=" + std::to_string(b) + " k=" + std::to_string(k));
    }
  }
  c.equal(boundary_count(101, st("50")), Natural::pow(10, 101), "boundary_count(101, 50)");
  c.expect(find_a_eq(st("50"), 1).value == Natural::pow(10, 101), "a_eq(50) = 10^101");
  if (long_mode) {
    c.equal(boundary_count(1002, st("999")), Natural::pow(10, 1002), "boundary_count(1002, 999)");
    c.expect(find_a_eq(st("999"), 1).value == Natural::pow(10, 1002), "a_eq(999) = 10^1002");
  }
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "table T1_AEQ_AGT", 60, golden_table},
      {2, "puzzle chain 199981 / 199991", 1, puzzle_chain},
      {3, "zero sticker, base 10", 30, zero_base_ten},
      {4, "enumeration d=1..9", 600, enumeration},
      {5, "multi-digit stickers 10, 11, 12", 300, multi_digit},
      {6, "sequences across bases", 900, bases},
      {7, "base-2 powers of two", 600, base_two_powers},
      {8, "zero sticker across bases", 900, zero_across_bases},
      {9, "table T6_A10_BASES pattern", 300, table_six},
      {10, "property suite", 600, properties},
      {11, "erratum tripwire", 60, erratum},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool long_mode = false;
  app.add_option("--only", only, "Run a single criterion");
  app.add_flag("--long", long_mode, "Include long-running checks");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  int ran = 0;
  for (const Criterion& cr : criteria()) {
    if (only != 0 && cr.id != only) continue;
    ++ran;
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c, long_mode);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Long mode runs extra work, so the default-suite limit does not apply.
    if (!long_mode) c.expect(secs < cr.limit_seconds, "runtime over limit");
    std::cout << (c.ok() ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": " << cr.title << " (" << c.checks()
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s, limit " << cr.limit_seconds
              << " s)\n";
    for (const auto& n : c.notes()) std::cout << "       note: " << n << "\n";
    for (const auto& f : c.failures()) std::cout << "       fail: " << f << "\n";
    if (!c.ok()) ++failed;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
