#include "cartanweil/report.hpp"

#include "json.hpp"

#include <algorithm>

namespace cw {

namespace {

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["claim"] = r.claim;
  doc["algebra"] = r.algebra;
  doc["polynomial"] = r.polynomial;
  doc["pass"] = r.pass;
  if (!r.detail.empty()) doc["detail"] = r.detail;
  if (r.witness) doc["witness"] = nlohmann::ordered_json::parse(*r.witness);
  if (r.runtime_ms) doc["runtime_ms"] = *r.runtime_ms;
  return doc;
}

}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(); }

std::string to_json(std::vector<Report> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) { return a.claim < b.claim; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

}  // namespace cw
