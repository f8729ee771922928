#pragma once

#include <string>
#include <vector>

namespace logcone {

enum class CheckStatus { pass, fail, out_of_scope, error };

std::string status_name(CheckStatus s);

struct ReportEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;
};

// Check list with an overall verdict: pass unless some entry failed or errored.
struct Report {
  std::string command;
  std::vector<ReportEntry> entries;

  void add(const std::string& name, bool ok, const std::string& details = "");
  void add_status(const std::string& name, CheckStatus status,
                  const std::string& details = "");
  bool overall() const;
};

std::string report_text(const Report& r);

// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string report_json(const Report& r);

}  // namespace logcone
