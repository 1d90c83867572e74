#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>

#include "archive_label/natural.hpp"

namespace archive_label {

struct Config {
  std::filesystem::path cache_path;  // empty: caching disabled
  std::optional<Natural> default_bound_override;
  std::uint64_t progress_interval = 10'000;
  bool long_jobs_enabled = false;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `key = value` lines; blank lines and lines starting with '#' are ignored.
// Keys: cache_path, default_bound_override, progress_interval,
// long_jobs_enabled.
Config parse_config(std::istream& in, Config base = {});
Config load_config_file(const std::filesystem::path& path, Config base = {});

inline constexpr const char* kCacheEnvVar = "ARCHIVE_LABEL_CACHE";

}  // namespace archive_label
