#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "kncrystal/enumerate.hpp"
#include "kncrystal/partition.hpp"

namespace kn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

enum class Format { json, table, dot };

struct RunConfig {
  std::string command;
  Partition shape;
  int m = 0;
  Format format = Format::json;
  std::string out_path;
  std::size_t cap = kDefaultEnumerationCap;
};

/// Parses argv-style arguments (without the program name) and runs the
/// command, writing the report to `out` (or --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kn::cli
