#include "archive_label/cache.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "archive_label/counting.hpp"

namespace archive_label {

std::string_view to_string(RecordKind k) {
  switch (k) {
    case RecordKind::GE: return "GE";
    case RecordKind::GT: return "GT";
    case RecordKind::EQ: return "EQ";
    case RecordKind::ENUM: return "ENUM";
    case RecordKind::ZERO: return "ZERO";
  }
  return "EQ";
}

std::optional<RecordKind> parse_record_kind(std::string_view s) {
  for (RecordKind k : {RecordKind::GE, RecordKind::GT, RecordKind::EQ, RecordKind::ENUM, RecordKind::ZERO}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

namespace {

std::optional<Status> parse_status(std::string_view s) {
  for (Status st : {Status::Found, Status::NotExists, Status::Unresolved}) {
    if (to_string(st) == s) return st;
  }
  return std::nullopt;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<Natural> parse_values(std::string_view v) {
  std::vector<Natural> out;
  if (v == "-" || v.empty()) return out;
  for (std::string_view part : split(v, ',')) out.push_back(Natural::parse(part));
  return out;
}

}  // namespace

std::string format_record(const CacheRecord& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.6f", r.elapsed);
  std::string line;
  line += to_string(r.kind);
  line += '\t' + std::to_string(r.base);
  line += '\t' + r.sticker;
  line += '\t';
  line += to_string(r.status);
  line += '\t' + (r.value.empty() ? std::string("-") : r.value);
  line += '\t' + r.bound.to_string();
  line += '\t';
  line += elapsed;
  return line;
}

std::optional<CacheRecord> parse_record(std::string_view line) {
  const auto fields = split(line, '\t');
  if (fields.size() != 7) return std::nullopt;
  try {
    CacheRecord r;
    const auto kind = parse_record_kind(fields[0]);
    const auto status = parse_status(fields[3]);
    if (!kind || !status) return std::nullopt;
    r.kind = *kind;
    r.status = *status;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), r.base);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size() || r.base < 2) return std::nullopt;
    r.sticker = std::string(fields[2]);
    Sticker::parse(r.sticker, Base(r.base));
    r.value = std::string(fields[4]);
    parse_values(r.value);
    r.bound = Natural::parse(fields[5]);
    r.elapsed = std::stod(std::string(fields[6]));
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool revalidate(const CacheRecord& r) {
  try {
    const Sticker d = Sticker::parse(r.sticker, Base(r.base));
    const std::vector<Natural> values = parse_values(r.value);
    if (r.status == Status::Unresolved) return true;
    if (r.status == Status::NotExists) {
      if (r.kind == RecordKind::ENUM || values.empty()) return true;
      const Natural& y = values.front();
      return stop_rule_fired(y, count_up_to(y, d), d);
    }
    if (r.kind == RecordKind::ENUM) {
      for (const Natural& x : values) {
        if (count_up_to(x, d) != x) return false;
      }
      return true;
    }
    if (values.size() != 1) return false;
    const Natural& x = values.front();
    const Natural fx = count_up_to(x, d);
    switch (r.kind) {
      case RecordKind::GE: return fx >= x;
      case RecordKind::GT: return fx > x;
      default: return fx == x;
    }
  } catch (const std::exception&) {
    return false;
  }
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<CacheRecord> ResultCache::read_all() const {
  std::vector<CacheRecord> out;
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (auto r = parse_record(line)) out.push_back(std::move(*r));
  }
  return out;
}

std::optional<CacheRecord> ResultCache::lookup(RecordKind kind, unsigned base, std::string_view sticker,
                                               const Natural& bound) const {
  std::lock_guard lock(mutex_);
  const std::vector<CacheRecord> records = read_all();
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const CacheRecord& r = *it;
    if (r.kind != kind || r.base != base || r.sticker != sticker) continue;
    bool usable = false;
    switch (r.status) {
      case Status::Found:
        if (r.kind == RecordKind::ENUM) {
          usable = r.bound == bound;
        } else {
          usable = Natural::parse(r.value) <= bound;
        }
        break;
      case Status::NotExists: usable = r.kind != RecordKind::ENUM || r.bound == bound; break;
      case Status::Unresolved:
        usable = r.kind == RecordKind::ENUM ? r.bound == bound : r.bound >= bound;
        break;
    }
    if (usable && revalidate(r)) return r;
  }
  return std::nullopt;
}

void ResultCache::append(const CacheRecord& r) {
  std::lock_guard lock(mutex_);
  const std::string line = format_record(r) + "\n";
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
}

}  // namespace archive_label
