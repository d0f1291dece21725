#ifndef CURVELAB_REPORT_HPP
#define CURVELAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace curvelab {

// Rectangular table of named real columns. Non-finite cells serialize to
// JSON null and empty CSV fields.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct RunReport {
  std::string command;
  std::string curve_spec;  // empty when the input was a point set
  nlohmann::json params = nlohmann::json::object();
  std::vector<Table> tables;
  std::optional<nlohmann::json> verdict;
  std::vector<std::string> notes;
  double timing_ms = 0.0;
};

nlohmann::json report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);
std::string report_to_text(const RunReport& report);

}  // namespace curvelab

#endif
