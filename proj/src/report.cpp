#include "curvelab/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace curvelab {

namespace {

std::string cell(double v) {
  if (!std::isfinite(v)) return "";
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

}  // namespace

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json j;
  j["command"] = report.command;
  j["curve"] = report.curve_spec.empty() ? nlohmann::json(nullptr)
                                         : nlohmann::json(report.curve_spec);
  j["params"] = report.params;
  j["tables"] = nlohmann::json::array();
  for (const auto& table : report.tables) {
    nlohmann::json t;
    t["name"] = table.name;
    t["columns"] = table.columns;
    t["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json r = nlohmann::json::array();
      for (double v : row) {
        if (std::isfinite(v))
          r.push_back(v);
        else
          r.push_back(nullptr);
      }
      t["rows"].push_back(std::move(r));
    }
    j["tables"].push_back(std::move(t));
  }
  if (report.verdict) j["verdict"] = *report.verdict;
  j["notes"] = report.notes;
  j["timing_ms"] = report.timing_ms;
  return j;
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream os;
  os << "# command: " << report.command << "\n";
  if (!report.curve_spec.empty()) os << "# curve: " << report.curve_spec << "\n";
  for (const auto& table : report.tables) {
    os << "# table: " << table.name << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
      os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
      os << "\n";
    }
  }
  if (report.verdict)
    os << "# verdict: " << (*report.verdict)["decision"].get<std::string>() << "\n";
  return os.str();
}

std::string report_to_text(const RunReport& report) {
  std::ostringstream os;
  os << report.command;
  if (!report.curve_spec.empty()) os << "  curve: " << report.curve_spec;
  os << "\n";
  for (const auto& table : report.tables) {
    os << "\n[" << table.name << "]\n";
    const int width = 16;
    for (const auto& col : table.columns) os << std::setw(width) << col;
    os << "\n";
    for (const auto& row : table.rows) {
      for (double v : row) {
        if (std::isfinite(v))
          os << std::setw(width) << std::setprecision(8) << v;
        else
          os << std::setw(width) << "-";
      }
      os << "\n";
    }
  }
  if (report.verdict) {
    os << "\nverdict: " << (*report.verdict)["decision"].get<std::string>() << "\n";
    for (auto it = report.verdict->begin(); it != report.verdict->end(); ++it) {
      if (it.key() == "decision") continue;
      os << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
  }
  for (const auto& note : report.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace curvelab
