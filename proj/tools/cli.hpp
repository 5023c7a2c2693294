#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cw::cli {

enum ExitCode : int { pass = 0, fail = 1, usage = 2, internal = 3 };

struct CliConfig {
  std::string algebra;
  std::string polynomial = "metric";
  std::string format = "text";  ///< text, json or latex
  std::uint64_t seed = 1;
  int samples = 8;
  int elements = 20;  ///< random elements per property check in verify
  bool timing = false;
};

/// Runs the command line; argv[0] is the program name. CARTANWEIL_SEED overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cw::cli
