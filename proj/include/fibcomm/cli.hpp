#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace fibcomm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

struct Report {
  std::string table;       // human-readable
  nlohmann::json payload;  // what --json prints
};

struct Outcome {
  int exit_code = kExitOk;
  bool json_output = false;
  Report report;
  std::string diagnostic; // for stderr; empty on success
};

/// args excludes the program name.
Outcome run_command(const std::vector<std::string>& args);

/// 12 significant digits, the precision of every table.
std::string format_number(double x);

/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

} // namespace fibcomm::cli
