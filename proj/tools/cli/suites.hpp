#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace mot2::cli {

struct Check {
  std::string name;
  bool passed = false;
  bool skipped = false;  // not run because of a size bound; never counts as passed
  Json detail;
};

struct SuiteResult {
  std::string name;
  std::vector<Check> checks;
  double seconds = 0;
  /// No check failed (skipped checks do not fail).
  bool passed() const;
  std::size_t skipped() const;
};

/// The mackey-axioms suite skips pairs G/K, G/L with [G:K][G:L] above this.
inline constexpr std::size_t kMackeyPairBound = 64;

struct SuiteContext {
  FiniteGroup group;
  Field field;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

/// Subgroups of the context group are taken up to conjugacy, in the order of
/// conjugacy_classes_of_subgroups, and named H0, H1, ... in check names.
/// Sampled suites draw from a generator seeded by (seed, suite name), so the
/// samples of one suite do not depend on which other suites run.
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteContext& context);

}  // namespace mot2::cli
