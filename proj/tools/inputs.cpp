#include "inputs.hpp"

#include <fstream>
#include <sstream>

#include "diagbr/errors.hpp"

namespace diagbr::cli {

namespace {

Json read_json_file(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(std::string("cannot open ") + what + ": " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " " + path + ": " + e.what());
  }
}

}  // namespace

RunConfig load_config(const std::string& path) {
  const Json j = read_json_file(path, "config");
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  RunConfig c;
  try {
    if (j.contains("prime_bound")) c.prime_bound = j["prime_bound"].get<std::uint64_t>();
    if (j.contains("group_order_budget")) c.group_order_budget = j["group_order_budget"].get<std::size_t>();
    if (j.contains("exceptional_table_path")) c.exceptional_table_path = j["exceptional_table_path"].get<std::string>();
    if (j.contains("output_format")) c.output_format = j["output_format"].get<std::string>();
    if (j.contains("jobs")) c.jobs = j["jobs"].get<int>();
    if (j.contains("delta_overrides"))
      for (auto it = j["delta_overrides"].begin(); it != j["delta_overrides"].end(); ++it)
        c.delta_overrides[std::stoi(it.key())] = it->get<std::vector<std::vector<long>>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  } catch (const std::logic_error& e) {
    throw InvalidInput(std::string("bad config key: ") + e.what());
  }
  if (c.prime_bound < 2 || c.group_order_budget < 1 || c.jobs < 0) throw InvalidInput("config bounds must be positive");
  if (c.output_format != "json" && c.output_format != "markdown") throw InvalidInput("output_format must be json or markdown");
  return c;
}

GroupPtr load_group(const std::string& spec, int d, std::size_t order_budget) {
  auto expand = [&](const std::string& family, int degree) {
    if (degree < 1) throw InvalidInput("family groups need a positive degree");
    auto g = families::by_name(family, static_cast<std::size_t>(degree));
    if (g.order() > order_budget) throw BudgetExceeded("group order exceeds the budget");
    return std::make_shared<const FiniteGroup>(std::move(g));
  };
  if (spec.rfind("family:", 0) == 0) return expand(spec.substr(7), d);
  const Json j = read_json_file(spec, "group spec");
  try {
    if (j.contains("family")) return expand(j["family"].get<std::string>(), j.value("degree", d));
    const auto degree = j.at("degree").get<std::size_t>();
    std::vector<Perm> gens;
    for (const auto& row : j.at("generators")) {
      Perm p;
      for (const auto& x : row) {
        const long v = x.get<long>();
        if (v < 0 || static_cast<std::size_t>(v) >= degree) throw InvalidInput("permutation entry out of range");
        p.push_back(static_cast<std::uint16_t>(v));
      }
      gens.push_back(std::move(p));
    }
    return std::make_shared<const FiniteGroup>(
        FiniteGroup::from_permutations(degree, gens, order_budget, j.value("name", std::string("custom"))));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad group spec: ") + e.what());
  }
}

Json group_summary(const FiniteGroup& g) {
  return {{"name", g.name()}, {"degree", g.degree()}, {"order", g.order()}};
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("not an integer: " + tok);
    }
    if (pos != tok.size()) throw InvalidInput("not an integer: " + tok);
    out.push_back(v);
  }
  return out;
}

}  // namespace diagbr::cli
