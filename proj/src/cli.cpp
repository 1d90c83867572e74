#include "archive_label/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "archive_label/cache.hpp"
#include "archive_label/config.hpp"
#include "archive_label/counting.hpp"
#include "archive_label/errors.hpp"
#include "archive_label/search.hpp"
#include "archive_label/sequences.hpp"

namespace archive_label {

CliEnvironment CliEnvironment::from_process() {
  CliEnvironment env;
  if (const char* v = std::getenv(kCacheEnvVar); v != nullptr && *v != '\0') env.cache_path = v;
  return env;
}

namespace {

constexpr std::uint64_t kBruteGuard = 10'000'000;

// Exit with a code after printing a message to stderr.
struct CliFailure {
  int code;
  std::string message;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  Base base{10};
  Config config;
  bool progress = false;
  std::unique_ptr<ResultCache> cache;
};

Natural parse_natural(const std::string& text, const char* what) {
  try {
    return Natural::parse(text);
  } catch (const std::invalid_argument&) {
    throw CliFailure{kExitUsage, std::string("malformed ") + what + " '" + text + "'"};
  }
}

Sticker parse_sticker(const std::string& text, Base base) {
  try {
    return Sticker::parse(text, base);
  } catch (const InvalidSticker& e) {
    throw CliFailure{kExitUsage, e.what()};
  }
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

SearchOptions make_options(Context& ctx, RecordKind kind, const Sticker& d) {
  SearchOptions opts;
  opts.progress_interval = ctx.config.progress_interval;
  if (ctx.progress) {
    std::ostream& err = ctx.err;
    const std::string prefix = "PROGRESS kind=" + std::string(to_string(kind)) +
                               " base=" + std::to_string(d.base().value()) + " sticker=" + d.to_string();
    opts.progress = [&err, prefix](const SearchProgress& p) {
      err << prefix << " digits=" << p.digits << " evals=" << p.evaluations
          << " elapsed=" << fmt_seconds(p.elapsed) << "\n";
    };
  }
  return opts;
}

std::string render_value(const Natural& v, Base base, bool base_format) {
  return base_format ? format_numeral(v, base) : v.to_string();
}

// STATUS value digits=N evals=M [certificate=Y | bound=B]; elapsed goes to
// stderr so stdout stays reproducible.
void print_outcome(Context& ctx, const SearchOutcome& o, bool base_format) {
  switch (o.status) {
    case Status::Found:
      ctx.out << "FOUND " << render_value(*o.value, ctx.base, base_format)
              << " digits=" << o.value->digit_count(base_format ? ctx.base.value() : 10);
      break;
    case Status::NotExists: ctx.out << "NOT_EXISTS - digits=0"; break;
    case Status::Unresolved: ctx.out << "UNRESOLVED - digits=0"; break;
  }
  ctx.out << " evals=" << o.evaluations;
  if (o.certificate) ctx.out << " certificate=" << render_value(*o.certificate, ctx.base, base_format);
  if (o.status == Status::Unresolved) ctx.out << " bound=" << o.bound_used;
  ctx.out << "\n";
  ctx.err << "elapsed=" << fmt_seconds(o.elapsed) << "\n";
}

SearchOutcome outcome_from_record(const CacheRecord& r) {
  SearchOutcome o;
  o.status = r.status;
  if (r.value != "-") {
    if (r.status == Status::Found) o.value = Natural::parse(r.value);
    if (r.status == Status::NotExists) o.certificate = Natural::parse(r.value);
  }
  o.bound_used = r.bound;
  o.elapsed = r.elapsed;
  return o;
}

CacheRecord record_from_outcome(RecordKind kind, const Sticker& d, const SearchOutcome& o) {
  CacheRecord r;
  r.kind = kind;
  r.base = d.base().value();
  r.sticker = d.to_string();
  r.status = o.status;
  if (o.value) r.value = o.value->to_string();
  if (o.certificate) r.value = o.certificate->to_string();
  r.bound = o.bound_used;
  r.elapsed = o.elapsed;
  return r;
}

// Runs (or replays) one search and prints its outcome line.
template <class Run>
int cached_search(Context& ctx, RecordKind kind, const Sticker& d, const Natural& bound, bool use_cache,
                  bool base_format, Run run) {
  if (use_cache && ctx.cache) {
    if (auto hit = ctx.cache->lookup(kind, d.base().value(), d.to_string(), bound)) {
      ctx.err << "cache hit " << ctx.cache->path().string() << "\n";
      const SearchOutcome o = outcome_from_record(*hit);
      print_outcome(ctx, o, base_format);
      return o.status == Status::Unresolved ? kExitUnresolved : kExitOk;
    }
  }
  const SearchOutcome o = run();
  if (use_cache && ctx.cache) ctx.cache->append(record_from_outcome(kind, d, o));
  print_outcome(ctx, o, base_format);
  return o.status == Status::Unresolved ? kExitUnresolved : kExitOk;
}

std::vector<unsigned> parse_bases(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string part;
  try {
    while (std::getline(ss, part, ',')) {
      const auto dots = part.find("..");
      if (dots == std::string::npos) {
        out.push_back(static_cast<unsigned>(std::stoul(part)));
      } else {
        const unsigned lo = static_cast<unsigned>(std::stoul(part.substr(0, dots)));
        const unsigned hi = static_cast<unsigned>(std::stoul(part.substr(dots + 2)));
        for (unsigned b = lo; b <= hi; ++b) out.push_back(b);
      }
    }
  } catch (const std::exception&) {
    throw CliFailure{kExitUsage, "malformed base list '" + text + "'"};
  }
  for (unsigned b : out) {
    if (b < 2) throw CliFailure{kExitUsage, "bases must be >= 2"};
  }
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

int cmd_verify(Context& ctx, std::uint64_t max, const std::string& bases_text, const std::string& stickers_text) {
  if (max > kBruteGuard) {
    throw CliFailure{kExitGuard, "verify --max is limited to " + std::to_string(kBruteGuard)};
  }
  const std::vector<unsigned> bases =
      bases_text.empty() ? std::vector<unsigned>{ctx.base.value()} : parse_bases(bases_text);
  const std::vector<std::string> sticker_texts = split_list(stickers_text);
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  for (unsigned b : bases) {
    const Base base(b);
    std::vector<Sticker> stickers;
    if (sticker_texts.empty()) {
      for (unsigned digit = 0; digit < b; ++digit) stickers.emplace_back(base, Digits{digit});
    } else {
      for (const std::string& t : sticker_texts) {
        try {
          stickers.push_back(Sticker::parse(t, base));
        } catch (const InvalidSticker&) {
          // Not expressible in this base.
        }
      }
    }
    for (const Sticker& d : stickers) {
      BruteScan scan(d);
      for (std::uint64_t x = 1; x <= max; ++x) {
        scan.next();
        const Natural fast = count_up_to(x, d);
        ++checked;
        if (fast != Natural(scan.total())) {
          ++mismatches;
          ctx.out << "MISMATCH base=" << b << " sticker=" << d.to_string() << " x=" << x << " f=" << fast
                  << " brute=" << scan.total() << "\n";
        }
      }
    }
  }
  if (mismatches > 0) {
    ctx.out << "FAIL mismatches=" << mismatches << " checked=" << checked << "\n";
    return kExitMismatch;
  }
  ctx.out << "OK checked=" << checked << "\n";
  return kExitOk;
}

int run_parsed(CLI::App& app, const std::map<std::string, std::function<int()>>& commands) {
  for (const auto& [name, fn] : commands) {
    if (app.got_subcommand(name)) return fn();
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliEnvironment& env) {
  CLI::App app{"Digit and substring occurrence counting with self-counting sequence search", "archive-label"};
  app.fallthrough();
  app.require_subcommand(1);

  unsigned base = 10;
  std::string cache_flag;
  std::string config_flag;
  bool progress = false;
  app.add_option("--base", base, "Numeral base (>= 2)")->check(CLI::Range(2u, 1u << 24));
  app.add_option("--cache", cache_flag, "Result cache file (tab-separated, append-only)");
  app.add_option("--config", config_flag, "key = value configuration file");
  app.add_flag("--progress", progress, "Report search progress on stderr");

  std::string sticker_text;
  std::string bound_text;
  std::string min_text;
  std::string format = "decimal";

  auto* count = app.add_subcommand("count", "Print f(x, d) for the given base");
  std::string count_x;
  bool brute = false;
  count->add_option("x", count_x, "Upper end of the range 1..x")->required();
  count->add_option("--sticker", sticker_text, "Sticker digits")->required();
  count->add_flag("--brute", brute, "Use the direct enumeration oracle (x <= 10^7)");

  auto* find = app.add_subcommand("find", "First x with f(x) >= x, f(x) > x or f(x) = x");
  std::string relation;
  find->add_option("relation", relation, "ge, gt or eq")->required()->check(CLI::IsMember({"ge", "gt", "eq"}));
  find->add_option("--sticker", sticker_text, "Sticker digits")->required();
  find->add_option("--min", min_text, "Least candidate (default 1 for ge, 2 for eq)");
  find->add_option("--bound", bound_text, "Search ceiling");
  find->add_option("--format", format, "decimal or base")->check(CLI::IsMember({"decimal", "base"}));

  auto* enumerate = app.add_subcommand("enumerate", "All x with f(x) = x");
  std::size_t limit = 0;
  enumerate->add_option("--sticker", sticker_text, "Sticker digits")->required();
  enumerate->add_option("--bound", bound_text, "Search ceiling (default: proven bound)");
  enumerate->add_option("--limit", limit, "Print at most this many solutions");
  enumerate->add_option("--format", format, "decimal or base")->check(CLI::IsMember({"decimal", "base"}));

  auto* table = app.add_subcommand("table", "Recompute one of the reference tables");
  std::string table_name;
  bool long_jobs = false;
  table->add_option("name", table_name, "T1_AEQ_AGT, T2_ED_LENGTHS, T3_ED_MAX, T4_ZERO_BASES, T5_BASE2_POW2, T6_A10_BASES")
      ->required();
  table->add_flag("--long", long_jobs, "Include long-running cells");

  auto* bfile = app.add_subcommand("bfile", "Write an OEIS b-file");
  std::string seq_id;
  std::string out_path;
  std::optional<std::int64_t> first;
  std::optional<std::size_t> terms;
  bfile->add_option("id", seq_id, "Sequence id, e.g. A163500")->required();
  bfile->add_option("--out", out_path, "Output path (default stdout)");
  bfile->add_option("--first", first, "First index");
  bfile->add_option("--count", terms, "Number of terms");

  app.add_subcommand("zero-status", "Classify f_0(x, b) = x for the base");

  auto* verify = app.add_subcommand("verify", "Cross-check f against the brute-force oracle");
  std::uint64_t verify_max = 10'000;
  std::string bases_text;
  std::string stickers_text;
  verify->add_option("--max", verify_max, "Check x = 1..max");
  verify->add_option("--bases", bases_text, "Bases, e.g. 2..12 or 2,3,10 (default --base)");
  verify->add_option("--stickers", stickers_text, "Comma-separated stickers (default all single digits)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx{out, err, Base(base), {}, progress, nullptr};
  try {
    if (!config_flag.empty()) ctx.config = load_config_file(config_flag, ctx.config);
    if (env.cache_path) ctx.config.cache_path = *env.cache_path;
    if (!cache_flag.empty()) ctx.config.cache_path = cache_flag;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!ctx.config.cache_path.empty()) ctx.cache = std::make_unique<ResultCache>(ctx.config.cache_path);
  const bool base_format = format == "base";

  const std::map<std::string, std::function<int()>> commands = {
      {"count",
       [&] {
         const Natural x = parse_natural(count_x, "numeral");
         const Sticker d = parse_sticker(sticker_text, ctx.base);
         if (brute) {
           if (x > Natural(kBruteGuard)) {
             throw CliFailure{kExitGuard, "--brute is limited to x <= " + std::to_string(kBruteGuard)};
           }
           out << f_brute(x, d) << "\n";
         } else {
           out << count_up_to(x, d) << "\n";
         }
         return kExitOk;
       }},
      {"find",
       [&] {
         const Sticker d = parse_sticker(sticker_text, ctx.base);
         const RecordKind kind = relation == "ge" ? RecordKind::GE : relation == "gt" ? RecordKind::GT : RecordKind::EQ;
         SearchOptions opts = make_options(ctx, kind, d);
         if (!bound_text.empty()) {
           opts.bound = parse_natural(bound_text, "bound");
         } else if (ctx.config.default_bound_override) {
           opts.bound = ctx.config.default_bound_override;
         }
         const bool default_min = min_text.empty();
         const Natural min_x = default_min ? Natural(kind == RecordKind::EQ ? 2 : 1) : parse_natural(min_text, "minimum");
         if (min_x.is_zero()) throw CliFailure{kExitUsage, "--min must be >= 1"};
         if (kind == RecordKind::GT && !default_min) throw CliFailure{kExitUsage, "--min is not supported for gt"};
         const Natural bound = opts.bound ? *opts.bound : solution_bound(d, opts.power_of_two_cap);
         if (kind == RecordKind::EQ && min_x > bound) {
           throw CliFailure{kExitUsage, "--min exceeds the search bound " + bound.to_string()};
         }
         return cached_search(ctx, kind, d, bound, default_min, base_format, [&] {
           switch (kind) {
             case RecordKind::GE: return find_a_ge(d, min_x, opts);
             case RecordKind::GT: return find_a_gt(d, opts);
             default: return find_a_eq(d, min_x, opts);
           }
         });
       }},
      {"enumerate",
       [&] {
         const Sticker d = parse_sticker(sticker_text, ctx.base);
         SearchOptions opts = make_options(ctx, RecordKind::ENUM, d);
         if (!bound_text.empty()) {
           opts.bound = parse_natural(bound_text, "bound");
         } else if (ctx.config.default_bound_override) {
           opts.bound = ctx.config.default_bound_override;
         }
         const Natural bound = opts.bound ? *opts.bound : proven_bound(d);
         EnumerationResult e;
         bool hit = false;
         if (ctx.cache) {
           if (auto r = ctx.cache->lookup(RecordKind::ENUM, d.base().value(), d.to_string(), bound)) {
             err << "cache hit " << ctx.cache->path().string() << "\n";
             std::stringstream ss(r->value == "-" ? std::string() : r->value);
             std::string part;
             while (std::getline(ss, part, ',')) e.solutions.push_back(Natural::parse(part));
             e.complete = r->status == Status::Found;
             e.bound_used = r->bound;
             e.elapsed = r->elapsed;
             hit = true;
           }
         }
         if (!hit) {
           e = enumerate_solutions(d, opts);
           if (ctx.cache) {
             CacheRecord r;
             r.kind = RecordKind::ENUM;
             r.base = d.base().value();
             r.sticker = d.to_string();
             r.status = e.complete ? Status::Found : Status::Unresolved;
             std::string joined;
             for (const Natural& s : e.solutions) joined += (joined.empty() ? "" : ",") + s.to_string();
             r.value = joined.empty() ? "-" : joined;
             r.bound = e.bound_used;
             r.elapsed = e.elapsed;
             ctx.cache->append(r);
           }
         }
         if (!e.solutions.empty()) e.max = e.solutions.back();
         const std::size_t shown = limit == 0 ? e.count() : std::min(limit, e.count());
         for (std::size_t i = 0; i < shown; ++i) out << render_value(e.solutions[i], ctx.base, base_format) << "\n";
         out << "count=" << e.count() << " max=" << (e.max ? render_value(*e.max, ctx.base, base_format) : "-")
             << " complete=" << (e.complete ? "yes" : "no") << " bound=" << e.bound_used
             << " evals=" << e.evaluations << "\n";
         err << "elapsed=" << fmt_seconds(e.elapsed) << "\n";
         return e.complete ? kExitOk : kExitUnresolved;
       }},
      {"table",
       [&] {
         const auto name = parse_table_name(table_name);
         if (!name) throw CliFailure{kExitUsage, "unknown table '" + table_name + "'"};
         const Table t = make_table(*name, long_jobs || ctx.config.long_jobs_enabled);
         out << t.render();
         return kExitOk;
       }},
      {"bfile",
       [&] {
         const SequenceSpec* spec = nullptr;
         try {
           spec = &find_sequence(seq_id);
         } catch (const std::out_of_range& e) {
           throw CliFailure{kExitUsage, e.what()};
         }
         try {
           if (out_path.empty()) {
             export_bfile(*spec, out, first, terms);
           } else {
             std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
             if (!file) throw ExportError("cannot open " + out_path);
             export_bfile(*spec, file, first, terms);
           }
         } catch (const ExportError& e) {
           throw CliFailure{kExitIo, e.what()};
         }
         return kExitOk;
       }},
      {"zero-status",
       [&] {
         const Sticker d(ctx.base, {0});
         SearchOptions opts = make_options(ctx, RecordKind::ZERO, d);
         return cached_search(ctx, RecordKind::ZERO, d, solution_bound(d), true, base_format,
                              [&] { return classify_zero(ctx.base, opts); });
       }},
      {"verify", [&] { return cmd_verify(ctx, verify_max, bases_text, stickers_text); }},
  };

  try {
    return run_parsed(app, commands);
  } catch (const CliFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const SearchUnresolved& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnresolved;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace archive_label
