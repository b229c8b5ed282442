#include "fibcomm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto out = fibcomm::cli::run_command(args);
  if (out.json_output && !out.report.payload.is_null())
    std::cout << out.report.payload.dump(2) << '\n';
  else
    std::cout << out.report.table;
  if (!out.diagnostic.empty()) std::cerr << out.diagnostic << '\n';
  return out.exit_code;
}
