#pragma once

#include <string>
#include <vector>

namespace qident {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  double timing_ms = 0.0;
  std::string note;  // short human-readable summary of what was checked
};

/// Runs the full verification battery (all ten criteria) and reports one
/// result per criterion. Failures are collected, not thrown.
std::vector<CriterionResult> run_acceptance(int threads = 1);

}  // namespace qident
