#pragma once

#include <string>

#include <json.hpp>

#include "uniserial/classifier.hpp"

namespace uniserial {

enum class ReportFormat { json, csv, md };

ReportFormat parse_report_format(const std::string& name);

nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const Length4Report& report);
nlohmann::json to_json(const LengthGe5Report& report);

std::string to_csv(const ClassificationReport& report);
std::string to_csv(const Length4Report& report);
std::string to_csv(const LengthGe5Report& report);

/// Length 3: one row per socle sequence found, in the layout m | factors.
std::string to_markdown(const ClassificationReport& report);
std::string to_markdown(const Length4Report& report);
std::string to_markdown(const LengthGe5Report& report);

template <class Report>
std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: return to_json(report).dump(2) + "\n";
    case ReportFormat::csv: return to_csv(report);
    case ReportFormat::md: return to_markdown(report);
  }
  return {};
}

}  // namespace uniserial
