#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cw {

/// Outcome of one verification check.
struct Report {
  std::string claim;
  std::string algebra;
  std::string polynomial;
  bool pass = false;
  std::string detail;
  std::optional<std::string> witness;  ///< JSON object text
  std::optional<double> runtime_ms;
};

std::string to_json(const Report& r);
/// Array of reports sorted by claim name.
std::string to_json(std::vector<Report> reports);

}  // namespace cw
