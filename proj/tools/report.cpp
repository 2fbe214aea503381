#include "report.hpp"

#include <sstream>

namespace diagbr::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

std::string cell(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  for (auto& c : s)
    if (c == '|') c = '/';
  return s;
}

void md_object(std::ostringstream& os, const Json& obj) {
  if (obj.empty()) {
    os << "_none_\n";
    return;
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (it->is_structured() && it->dump().size() > 80) {
      os << "- **" << it.key() << "**:\n\n```json\n" << it->dump(2) << "\n```\n";
    } else {
      os << "- **" << it.key() << "**: `" << cell(*it) << "`\n";
    }
  }
}

}  // namespace

void Report::check(std::string name, bool ok, Json expected, Json actual) {
  checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(expected), std::move(actual)});
}

void Report::note(std::string name, Json expected, Json actual) {
  checks.push_back({std::move(name), "note", std::move(expected), std::move(actual)});
}

bool Report::failed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return true;
  return false;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["toolkit"] = {{"name", "diagbr"}, {"version", kVersion}};
  j["seed"] = "none: every computation is deterministic";
  j["inputs"] = r.inputs;
  j["assumptions"] = r.assumptions;
  j["results"] = r.results;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", c.status}, {"expected", c.expected}, {"actual", c.actual}});
  j["checks"] = checks;
  j["timing_ms"] = r.timing_ms ? *r.timing_ms : Json(nullptr);
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_markdown(const Report& r) {
  std::ostringstream os;
  os << "# diagbr " << r.command << "\n\n";
  os << "toolkit " << kVersion << ", deterministic (no seed)\n\n";
  os << "## Inputs\n\n";
  md_object(os, r.inputs);
  os << "\n## Assumptions\n\n";
  md_object(os, r.assumptions);
  os << "\n## Results\n\n";
  md_object(os, r.results);
  os << "\n## Checks\n\n";
  if (r.checks.empty()) {
    os << "_none_\n";
  } else {
    os << "| name | status | expected | actual |\n|---|---|---|---|\n";
    for (const auto& c : r.checks)
      os << "| " << c.name << " | " << c.status << " | " << cell(c.expected) << " | " << cell(c.actual) << " |\n";
  }
  if (r.timing_ms) os << "\n## Timing (ms)\n\n```json\n" << r.timing_ms->dump(2) << "\n```\n";
  return os.str();
}

}  // namespace diagbr::cli
