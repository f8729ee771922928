#include "logcone/report.hpp"

#include <json.hpp>

#include <sstream>

namespace logcone {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::out_of_scope: return "out_of_scope";
    case CheckStatus::error: return "error";
  }
  return "error";
}

void Report::add(const std::string& name, bool ok, const std::string& details) {
  entries.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, details});
}

void Report::add_status(const std::string& name, CheckStatus status,
                        const std::string& details) {
  entries.push_back({name, status, details});
}

bool Report::overall() const {
  for (const ReportEntry& e : entries) {
    if (e.status == CheckStatus::fail || e.status == CheckStatus::error) {
      return false;
    }
  }
  return true;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << "# " << r.command << "\n";
  for (const ReportEntry& e : r.entries) {
    out << status_name(e.status) << "  " << e.name;
    if (!e.details.empty()) out << "  (" << e.details << ")";
    out << "\n";
  }
  out << "overall: " << (r.overall() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string report_json(const Report& r) {
  nlohmann::json j;
  j["command"] = r.command;
  j["entries"] = nlohmann::json::array();
  for (const ReportEntry& e : r.entries) {
    nlohmann::json je;
    je["details"] = e.details;
    je["name"] = e.name;
    je["status"] = status_name(e.status);
    j["entries"].push_back(je);
  }
  j["overall"] = r.overall() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

}  // namespace logcone
