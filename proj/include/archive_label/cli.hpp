#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace archive_label {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,    // verify found f != f_brute
  kExitUsage = 2,       // malformed sticker, numeral, option or config
  kExitGuard = 3,       // brute-force oracle asked beyond its guard
  kExitUnresolved = 4,  // search hit its bound undecided
  kExitIo = 5,          // b-file / output failure
};

// Process environment the CLI reads; injectable for tests.
struct CliEnvironment {
  std::optional<std::string> cache_path;  // ARCHIVE_LABEL_CACHE

  static CliEnvironment from_process();
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliEnvironment& env = {});

}  // namespace archive_label
