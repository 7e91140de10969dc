#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "serialize.hpp"

namespace mot2::cli {

struct CommandOutput {
  int exit_code = 0;
  Json report;          // full detail, deterministic for a fixed config
  std::string summary;  // short human text
};

inline const std::vector<std::string> kExportKinds = {"group", "xburnside", "center", "rho", "burnside", "mackey"};

/// Block idempotents of kG, their lifts and the Hom splittings; exit code 1
/// if any invariant fails.
CommandOutput cmd_blocks(const RunConfig& config);
/// The selected suites; exit code 0 iff every check passes.
CommandOutput cmd_verify(const RunConfig& config);
/// Throws std::invalid_argument for an unknown kind.
CommandOutput cmd_export(const RunConfig& config, const std::string& kind);

}  // namespace mot2::cli
