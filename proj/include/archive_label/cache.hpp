#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archive_label/natural.hpp"
#include "archive_label/numerals.hpp"
#include "archive_label/search.hpp"

namespace archive_label {

enum class RecordKind { GE, GT, EQ, ENUM, ZERO };

std::string_view to_string(RecordKind k);
std::optional<RecordKind> parse_record_kind(std::string_view s);

// One completed search, stored as a tab-separated line:
//   kind  base  sticker  status  value  bound  elapsed
// value is decimal; "-" when absent; for NOT_EXISTS it is the certificate;
// for ENUM it is the comma-separated solution list.
struct CacheRecord {
  RecordKind kind = RecordKind::EQ;
  unsigned base = 10;
  std::string sticker;
  Status status = Status::Unresolved;
  std::string value = "-";
  Natural bound;
  double elapsed = 0.0;
};

std::string format_record(const CacheRecord& r);
// Nullopt for malformed or truncated lines.
std::optional<CacheRecord> parse_record(std::string_view line);

// Whether a FOUND / NOT_EXISTS record still holds when replayed through the
// counting function (one evaluation per value).
bool revalidate(const CacheRecord& r);

// Append-only result store. Every append is a single line write; readers
// skip lines they cannot parse, so a concurrent partial append is harmless.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  // The newest record usable for a query with the given bound:
  //   FOUND whose value <= bound, any NOT_EXISTS, or UNRESOLVED at a bound
  //   >= the query's. Records failing revalidate() are skipped.
  std::optional<CacheRecord> lookup(RecordKind kind, unsigned base, std::string_view sticker,
                                    const Natural& bound) const;

  void append(const CacheRecord& r);

  const std::filesystem::path& path() const { return path_; }

 private:
  std::vector<CacheRecord> read_all() const;

  std::filesystem::path path_;
  mutable std::mutex mutex_;
};

}  // namespace archive_label
