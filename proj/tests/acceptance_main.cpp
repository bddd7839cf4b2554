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

/* Full verification gate: runs every suite at the pinned tolerances and
 * prints one line per criterion. Exits nonzero if an asserted check fails
 * or the run exceeds the ten-minute budget. */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "core/verify.hpp"

using namespace heckop;

int main(int argc, char **argv) {
  VerifyConfig cfg;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() -> std::string {
      return i + 1 < argc ? argv[++i] : "";
    };
    if (arg == "--seed") cfg.seed = std::stoull(next());
    else if (arg == "--N") cfg.N = std::stoi(next());
    else if (arg == "--eps") cfg.eps = std::stod(next());
  }

  struct Criterion {
    int id;
    const char *suite;
    const char *title;
  };
  const std::vector<Criterion> criteria = {
      {1, "c-normalization", "normalized c-function Weyl sums"},
      {2, "degenerate-f", "zero-multiplicity closed form"},
      {3, "weyl-invariance", "spectral Weyl invariance of F"},
      {4, "bridge", "eta^2 bridge between shifted multiplicities"},
      {5, "rank1-oracle", "series vs Gauss-2F1 backend"},
      {6, "estimate", "uniform growth bound incl. negative multiplicities"},
      {7, "eta-bound", "torus bound for the eta twist"},
      {8, "jacobi", "orthogonality + eigen-residual certification"},
      {9, "psi-bound", "spherical function normalization and bound"},
      {10, "dimensions", "empirical dimensions vs weight-count oracle"},
      {11, "plancherel", "Plancherel/Parseval roundtrip"},
      {12, "lattice", "weight-lattice shift identity"},
      {13, "pw-type", "exponential type of compactly supported sections"},
      {14, "determinism", "seeded reports are byte-identical"},
  };

  auto t0 = std::chrono::steady_clock::now();
  std::vector<SuiteReport> reports;
  bool ok = true;
  for (const Criterion &cr : criteria) {
    SuiteReport rep = run_suite(cr.suite, cfg);
    int bad = rep.failed_asserted();
    double worst_margin = 0.0;
    for (const CheckRecord &c : rep.checks)
      if (c.asserted && c.bound > 0)
        worst_margin = std::max(worst_margin, c.measured / c.bound);
    std::printf("[%2d] %s  %-52s (%zu checks, worst margin %.3g)\n", cr.id,
                bad == 0 ? "PASS" : "FAIL", cr.title, rep.checks.size(),
                worst_margin);
    for (const CheckRecord &c : rep.checks)
      if (c.asserted && !c.pass)
        std::printf("      failed: %s  measured %.6g  bound %.6g\n",
                    c.name.c_str(), c.measured, c.bound);
    if (bad > 0) ok = false;
    reports.push_back(std::move(rep));
  }

  auto t1 = std::chrono::steady_clock::now();
  double elapsed = std::chrono::duration<double>(t1 - t0).count();
  bool in_budget = elapsed < 600.0;
  std::printf("[14] %s  wall time %.1f s (budget 600 s)\n",
              in_budget ? "PASS" : "FAIL", elapsed);
  if (!in_budget) ok = false;

  std::printf("%s\n", ok ? "acceptance: all criteria met"
                         : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
