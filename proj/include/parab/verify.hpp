#pragma once

#include <string>
#include <vector>

namespace parab {

// one acceptance criterion: pinned bounds, exact expectations, no tolerances
// beyond the single calibrated ratio-convergence threshold
struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;  // counts on success, first counterexample on failure
  double seconds = 0.0;
};

CriterionResult run_criterion(int id, unsigned threads);
std::vector<CriterionResult> run_all_criteria(unsigned threads);

// property suite for the CLI: named family of checks over a (p, q) sweep
struct SuiteReport {
  std::string suite;
  long checked = 0;
  long failed = 0;
  std::string first_counterexample;
  bool pass() const { return failed == 0; }
};

// names: identities, torsion, sums, reciprocity, asymptotics
SuiteReport run_suite(const std::string& name, long pmax, unsigned threads);

}  // namespace parab
