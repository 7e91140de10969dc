#include "config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mot2::cli {

FiniteGroup resolve_group(const RunConfig& config) {
  std::string text = config.group;
  if (!config.group_file.empty()) {
    std::ifstream in(config.group_file);
    if (!in) throw std::invalid_argument("cannot read group file '" + config.group_file + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  FiniteGroup g = parse_group_definition(text, config.max_order);
  if (g.order() > config.max_order)
    throw std::length_error("group of order " + std::to_string(g.order()) + " exceeds --max-order " +
                            std::to_string(config.max_order));
  return g;
}

Field resolve_field(const RunConfig& config) { return Field::parse(config.field); }

std::vector<std::string> resolve_suites(const std::vector<std::string>& names) {
  std::vector<bool> chosen(kSuiteNames.size(), false);
  bool any = false;
  for (const auto& entry : names) {
    std::stringstream parts(entry);
    std::string name;
    while (std::getline(parts, name, ',')) {
      if (name.empty()) continue;
      any = true;
      if (name == "all") {
        chosen.assign(kSuiteNames.size(), true);
        continue;
      }
      auto it = std::find(kSuiteNames.begin(), kSuiteNames.end(), name);
      if (it == kSuiteNames.end()) throw std::invalid_argument("unknown suite '" + name + "'");
      chosen[static_cast<std::size_t>(it - kSuiteNames.begin())] = true;
    }
  }
  if (!any) throw std::invalid_argument("no suites selected");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
    if (chosen[i]) out.push_back(kSuiteNames[i]);
  return out;
}

}  // namespace mot2::cli
