#include "archive_label/config.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace archive_label {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("line " + std::to_string(line) + ": expected a boolean, got '" + v + "'");
}

}  // namespace

Config parse_config(std::istream& in, Config cfg) {
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    try {
      if (key == "cache_path") {
        cfg.cache_path = value;
      } else if (key == "default_bound_override") {
        if (value.empty()) {
          cfg.default_bound_override.reset();
        } else {
          cfg.default_bound_override = Natural::parse(value);
        }
      } else if (key == "progress_interval") {
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (ec != std::errc() || ptr != value.data() + value.size() || n == 0) {
          throw ConfigError("progress_interval must be a positive integer");
        }
        cfg.progress_interval = n;
      } else if (key == "long_jobs_enabled") {
        cfg.long_jobs_enabled = parse_bool(value, line_no);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

Config load_config_file(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  return parse_config(in, std::move(base));
}

}  // namespace archive_label
