#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mot2/groups.hpp"
#include "mot2/scalar.hpp"

namespace mot2::cli {

inline const std::vector<std::string> kSuiteNames = {"biequivalence", "adjunctions", "yoshida",
                                                     "mackey-axioms", "decat",       "blocks"};

struct RunConfig {
  std::string group = "S3";  // catalog name or inline definition
  std::string group_file;    // overrides group when set
  std::string field = "Q";
  std::vector<std::string> suites;
  std::uint64_t seed = 1;
  std::string json_path;
  std::size_t max_order = 24;
  std::size_t samples = 200;  // per sampled property
  bool timings = false;       // include wall times in the JSON report
  // export mackey: X = G/from, Y = G/to by position among subgroup classes
  std::size_t from = 0, to = 0;
};

/// Throws std::invalid_argument for unknown or malformed groups and
/// std::length_error above max_order.
FiniteGroup resolve_group(const RunConfig& config);
/// Throws std::invalid_argument for a bad field spec.
Field resolve_field(const RunConfig& config);
/// Expands "all", splits comma lists, keeps the canonical suite order and
/// drops repeats. Throws std::invalid_argument when empty or unknown.
std::vector<std::string> resolve_suites(const std::vector<std::string>& names);

}  // namespace mot2::cli
