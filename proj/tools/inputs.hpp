#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagbr/groups.hpp"
#include "report.hpp"

namespace diagbr::cli {

struct RunConfig {
  std::uint64_t prime_bound = 1000;
  std::size_t group_order_budget = kDefaultOrderBound;
  std::map<int, std::vector<std::vector<long>>> delta_overrides;
  std::string exceptional_table_path;
  std::string output_format = "json";
  int jobs = 0;  // 0: OpenMP default
};

// Missing keys keep their defaults.
RunConfig load_config(const std::string& path);

// "family:<name>" expands on d points; anything else is a group-spec JSON file
// {"degree": n, "generators": [[...], ...], "name": "..."} or {"family": "...", "degree": n}.
GroupPtr load_group(const std::string& spec, int d, std::size_t order_budget);
Json group_summary(const FiniteGroup& g);

std::vector<int> parse_int_list(const std::string& s);

}  // namespace diagbr::cli
