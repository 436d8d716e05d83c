// Copyright 2026 The Zenolie Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zenolie/lie.hpp"
#include "zenolie/report.hpp"

namespace zenolie {

struct SuiteConfig {
  double tol = kDefaultRankTol;
  std::uint64_t seed = 20140101;
  std::size_t genericity_trials = 50;
  std::size_t workers = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Measured values, e.g. "naked=2 zeno=3".
  Record measured;
  std::string expectation;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  /// One `PASS|FAIL <name> <measured> (<expectation>)` line per check.
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every reproduction check in a fixed order. Output carries no
/// timings, so two runs with the same config are byte-identical.
SuiteReport run_paper_suite(const SuiteConfig& config = {});

// Individual checks, exposed for the acceptance tests.
CheckResult check_intro_dimensions(double tol);
CheckResult check_commutator_identity();
CheckResult check_commutator_identity_sign_corrected();
CheckResult check_example_a_dimensions(std::size_t n, double tol);
CheckResult check_example_b_dimensions(std::size_t n, double tol);
CheckResult check_purification(std::uint64_t seed, double tol);
CheckResult check_zeno_convergence();
CheckResult check_damping_vs_analytic(std::uint64_t seed);
CheckResult check_strong_damping(std::size_t workers = 0);
CheckResult check_genericity(std::size_t trials, std::uint64_t seed, double tol,
                             std::size_t workers);

}  // namespace zenolie
