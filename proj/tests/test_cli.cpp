#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli_app.hpp"

namespace {

struct Run {
  int code;
  nlohmann::json json;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = diagbr::cli::run(args, out, err);
  Run r{code, nullptr, out.str(), err.str()};
  if (!r.out.empty() && r.out[0] == '{') r.json = nlohmann::json::parse(r.out);
  return r;
}

std::string check_status(const nlohmann::json& j, const std::string& name) {
  for (const auto& c : j["checks"])
    if (c["name"] == name) return c["status"];
  return "missing";
}

}  // namespace

TEST_CASE("report schema") {
  const auto r = run({"fermat", "picard", "3"});
  CHECK(r.code == 0);
  for (const char* key : {"command", "inputs", "assumptions", "results", "checks", "timing_ms"})
    CHECK(r.json.contains(key));
  CHECK(r.json["results"]["picard_number"] == 7);
  CHECK(r.json["timing_ms"].is_null());
}

TEST_CASE("identical inputs give identical bytes") {
  CHECK(run({"jacobi", "4", "--prime-bound", "100"}).out == run({"jacobi", "4", "--prime-bound", "100", "--jobs", "1"}).out);
}

TEST_CASE("pi and diagonal commands") {
  auto r = run({"pi", "--group-f", "family:cyclic", "--group-g", "family:cyclic", "--d", "5"});
  CHECK(r.json["results"]["pi"]["group"] == "Z/5");
  r = run({"pi", "--group-f", "family:symmetric", "--group-g", "family:cyclic", "--d", "3"});
  CHECK(r.json["results"]["pi"]["group"] == "0");
  CHECK(run({"pi", "--group-f", "family:nope", "--group-g", "family:cyclic", "--d", "3"}).code == 2);
  r = run({"diagonal", "--d", "8", "--units", "1"});
  CHECK(r.json["results"]["br1_quotient"]["group"] == "Z/4");
  r = run({"diagonal", "--d", "7"});
  CHECK(r.json["results"]["br1_quotient"]["group"] == "0");
  r = run({"diagonal", "--d", "6", "--regime", "generic_function_field"});
  CHECK(r.json["results"]["br1_quotient"]["group"] == "0");
  r = run({"diagonal", "--d", "16"});
  CHECK(r.code == 0);
  CHECK(check_status(r.json, "k_rational_rule_matches_theorem") == "note");
  CHECK(run({"diagonal", "--d", "8", "--units", "2"}).code == 2);
}

TEST_CASE("crosscheck command") {
  auto r = run({"crosscheck", "--group-f", "family:dihedral", "--group-g", "family:cyclic", "--d", "4"});
  CHECK(r.code == 0);
  CHECK(check_status(r.json, "oracle_equals_formula") == "pass");
  r = run({"crosscheck", "--mode", "split", "--d", "3"});
  CHECK(r.json["results"]["verdict"]["oracle"]["group"] == "Z/3");
  CHECK(run({"crosscheck", "--mode", "sideways", "--d", "3"}).code == 2);
}

TEST_CASE("fermat commands") {
  auto r = run({"fermat", "field", "5"});
  CHECK(r.json["results"]["field_report"]["field"] == "Q(mu_10)");
  r = run({"fermat", "field", "24", "--table", "/nonexistent/table.json"});
  CHECK(r.code == 0);
  CHECK(r.json["results"]["field_report"]["table_missing"] == true);
  r = run({"fermat", "lattice-check", "4"});
  CHECK(r.code == 0);
  CHECK(r.json["results"]["omega_pairings"][0]["value"] == "-64");
  r = run({"fermat", "chars", "6"});
  CHECK(r.json["results"]["counts"]["s_flat"] == 85);
}

TEST_CASE("jacobi command") {
  auto r = run({"jacobi", "3", "--prime-bound", "100"});
  CHECK(r.code == 0);
  for (const auto& row : r.json["results"]["h_values"])
    for (const auto& h : row["h_eta_exponents"]) CHECK(h == 0);
  r = run({"jacobi", "4", "--prime-bound", "100"});
  for (const auto& row : r.json["results"]["h_values"]) {
    bool all = true;
    for (const auto& h : row["h_eta_exponents"]) all = all && h == 0;
    CHECK(all == (row["p"].get<int>() % 8 == 1));
  }
  CHECK(run({"jacobi", "4", "--chi", "1,1,1"}).code == 2);
}

TEST_CASE("usage errors and formats") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"fermat", "picard", "3", "--format", "yaml"}).code == 2);
  const auto md = run({"fermat", "picard", "3", "--format", "markdown"});
  CHECK(md.out.rfind("# diagbr fermat picard", 0) == 0);
  CHECK(run({"fermat", "picard", "3", "--config", "/nonexistent.json"}).code == 2);
}
