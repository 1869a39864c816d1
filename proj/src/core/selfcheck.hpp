#pragma once

#include <string>
#include <vector>

#include "core/medium.hpp"

namespace dsp {

struct CheckResult {
  std::string id;
  std::string name;
  bool pass = false;
  double margin = 0;  // badness / allowance; <= 1 passes
  std::string detail;
};

// Release-gate checks. Each id reproduces a pinned quantitative claim at the
// tolerances fixed in code; ids with letter suffixes are clauses of one check
// that share a propagation run.
const std::vector<std::string>& all_check_ids();

std::vector<CheckResult> run_subchecks(const std::string& id);
std::vector<CheckResult> run_selfcheck();

std::string format_report(const std::vector<CheckResult>& results);
bool all_pass(const std::vector<CheckResult>& results);

// Pure input checks, separated so broken coefficients are detectable.
CheckResult check_dispersion(const Coefficients& c);
CheckResult check_group_velocity(const Coefficients& c);

}  // namespace dsp
