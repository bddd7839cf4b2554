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

#include <memory>
#include <unordered_map>

#include "rootdata.hpp"

namespace heckop {

/* Exponent lattice of the series: nonnegative combinations of doubled
 * positive carrier roots, graded by the simple-root height
 * ht(kappa) = (sum_j j kappa_j) / 2 (1-based j). */
struct ConeIndex {
  std::vector<IVec> kappas;               // sorted by (height, lex)
  std::vector<int> heights;               // parallel
  std::vector<std::pair<int, int>> bands; // [begin,end) per height
  std::unordered_map<uint64_t, int> pos;  // packed kappa -> index
  int max_height = 0;

  static uint64_t pack(const IVec &kappa);
  int find(const IVec &kappa) const;  // -1 when absent
};

std::shared_ptr<const ConeIndex> cone_index(int rank, int max_height);

int default_series_height(int rank);

/* Recursion coefficients of the Harish-Chandra series
 * Phi(lambda, m; exp Z) = sum_kappa Gamma_kappa e^{<lambda - rho(m) - kappa, Z>},
 * filled by increasing height from
 *   (2<kappa,lambda> - <kappa,kappa>) Gamma_kappa =
 *     2 sum_alpha m_alpha sum_{k>=1} <lambda - rho - kappa + 2k alpha, alpha>
 *       Gamma_{kappa - 2k alpha}. */
struct GammaTable {
  const RootDatum *rd = nullptr;
  Mult m;
  CVec lambda;
  Vec rho_m;
  std::shared_ptr<const ConeIndex> cone;
  CVec gamma;
};

GammaTable gamma_table(const RootDatum &rd, const Mult &m, const CVec &lambda,
                       int max_height, double resonance_tol = 1e-10);

struct EvalReport {
  cplx value{0.0, 0.0};
  double achieved_tol = 0.0;
  int height_used = 0;
  bool perturbed = false;
};

/* Series sum at exp(X + iY); requires alpha(X) >= x_min on positive carrier
 * roots. Stops when two consecutive height blocks move the partial sum by
 * less than tol * (1 + |value|). */
EvalReport phi_eval(const GammaTable &t, const Vec &X, const Vec &Y,
                    double tol, double x_min = 0.2);

/* Gamma-ratio product over the positive carrier roots,
 *   prod_alpha Gamma(lambda_alpha + m_{alpha/2}/4) /
 *              Gamma(lambda_alpha + m_{alpha/2}/4 + m_alpha/2),
 * with m_{alpha/2} = 0 unless alpha is long. */
cplx c_tilde(const RootDatum &rd, const Mult &m, const CVec &lambda);

/* Connection weights of the symmetrized sum: c_tilde(lambda)/c_tilde(rho(m)),
 * with the m = 0 limit 1/|W|. These make F(lambda, m; e) = 1. */
cplx c_connection(const RootDatum &rd, const Mult &m, const CVec &lambda);

/* c_tilde(lambda) / sum_w c_tilde(w lambda): Weyl sums to 1 by construction;
 * raises PoleError when the Weyl sum degenerates. */
cplx c_normalized(const RootDatum &rd, const Mult &m, const CVec &lambda);

/* F(lambda, m; exp Z) = sum_w c(w lambda) Phi(w lambda, m; exp Z), with one
 * deterministic retry (lambda + 1e-6 * (1,...,n)/|(1,...,n)|) on resonance
 * or pole; the retry is flagged in the report. */
class FEvaluator {
 public:
  FEvaluator(const RootDatum &rd, const Mult &m, const CVec &lambda,
             int max_height = 0 /* 0: rank default */);
  EvalReport eval(const Vec &X, const Vec &Y, double tol = 1e-11,
                  double x_min = 0.2) const;
  bool perturbed() const { return perturbed_; }
  const CVec &lambda_used() const { return lambda_; }
  /* weight and series of one Weyl branch (for oracle-side tests) */
  const GammaTable &branch_table(int w) const { return tables_[w]; }
  cplx branch_weight(int w) const { return weights_[w]; }

 private:
  const RootDatum *rd_;
  Mult m_;
  CVec lambda_;
  std::vector<GammaTable> tables_;
  CVec weights_;
  bool perturbed_ = false;
  void build(const CVec &lambda, int max_height);
};

EvalReport f_eval(const RootDatum &rd, const Mult &m, const CVec &lambda,
                  const Vec &X, const Vec &Y, double tol = 1e-11,
                  int max_height = 0);

/* |W|^{1/2} exp(-min_w Im(w lambda)(Y) + C/2 max_w (w rho~)(Y)
 *              + max_w Re(w lambda)(X)) with C = 2 + 2 tan((pi - eps)/2);
 * requires |alpha(Y)| <= pi - eps over the root system. */
double estimate_bound(const RootDatum &rd, const Mult &m, const CVec &lambda,
                      const Vec &X, const Vec &Y, double eps);

bool in_omega_eps(const RootDatum &rd, const Vec &Y, double eps);

}  // namespace heckop
