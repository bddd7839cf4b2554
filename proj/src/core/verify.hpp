/*
 * Copyright (c) 2026 The heckop authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace heckop {

struct CheckRecord {
  std::string name;
  std::string anchor;  // the identity or bound this row checks
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool asserted = true;  // report-only rows never fail a run
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  int failed_asserted() const {
    int f = 0;
    for (const auto &c : checks)
      if (c.asserted && !c.pass) ++f;
    return f;
  }
};

struct VerifyConfig {
  uint64_t seed = 7;
  int N = 512;          // rank-1 section grid
  double eps = 0.3;     // torus-domain margin for the estimate sweep
  std::string space;    // optional space override where meaningful
  int l = 1;            // bundle index override
  std::string catalog;  // optional catalog file
  std::string grid_out; // estimate suite: per-point CSV dump path
};

/* Suites: c-normalization, degenerate-f, weyl-invariance, bridge,
 * rank1-oracle, estimate, eta-bound, jacobi, psi-bound, dimensions,
 * plancherel, lattice, pw-type, determinism. */
SuiteReport run_suite(const std::string &name, const VerifyConfig &cfg);

std::vector<std::string> suite_names();

std::vector<SuiteReport> run_all(const VerifyConfig &cfg);

std::string report_json(const std::vector<SuiteReport> &reports,
                        const VerifyConfig &cfg);
std::string report_csv(const std::vector<SuiteReport> &reports);

bool all_passed(const std::vector<SuiteReport> &reports);

}  // namespace heckop
