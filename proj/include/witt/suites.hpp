#pragma once

#include <string>
#include <vector>

#include "witt/bialgebra.hpp"

namespace witt {

/// Result of one seeded invariant suite. Failures hold the offending inputs
/// verbatim in canonical text form.
struct SuiteReport {
  std::string name;
  int rank = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  long checks = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();

/// Runs the named suite; throws Error for unknown names.
SuiteReport run_suite(const std::string& name, const AlgebraConfig& cfg,
                      int samples);

}  // namespace witt
