#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace diagbr::cli {

using Json = nlohmann::ordered_json;

// "pass" and "fail" decide the exit code; "note" records a known discrepancy.
struct Check {
  std::string name;
  std::string status;
  Json expected;
  Json actual;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json assumptions = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::optional<Json> timing_ms;

  void check(std::string name, bool ok, Json expected, Json actual);
  void note(std::string name, Json expected, Json actual);
  bool failed() const;
};

Json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_markdown(const Report& r);

}  // namespace diagbr::cli
