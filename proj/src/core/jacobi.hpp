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

#include "hypergeom.hpp"
#include "weights.hpp"

namespace heckop {

/* Full-group orbit sum sum_{w in W} e^{i <w nu, Y>} (real; repetitions for
 * non-regular nu included). */
double orbit_sum_eval(const RootDatum &rd, const IVec &nu, const Vec &Y);
/* Holomorphic continuation sum_w e^{<w nu, X + iY>}. */
cplx orbit_sum_eval_c(const RootDatum &rd, const IVec &nu, const Vec &X,
                      const Vec &Y);

/* Dominant integer vectors nu with mu - nu a nonnegative combination of
 * positive carrier roots, sorted by (height, lex); includes mu itself. */
std::vector<IVec> dominated_weights(const RootDatum &rd, const IVec &mu);

/* Monic (in the top orbit sum) polynomial orthogonal to all lower orbit
 * sums under the delta_m inner product. */
struct JacobiPoly {
  IVec mu;
  Mult m;
  std::vector<std::pair<IVec, double>> coeffs;  // (nu, coefficient)
  double value0 = 0.0;                          // value at Y = 0
  double gram_condition = 1.0;

  double eval(const RootDatum &rd, const Vec &Y) const;
  cplx eval_c(const RootDatum &rd, const Vec &X, const Vec &Y) const;
};

/* Gram-Schmidt under <f,g> = int f g delta_m; kink-panel Gauss-Legendre
 * quadrature (exact to roundoff for integer multiplicities). Results are
 * cached per (datum, m, mu). nodes_per_panel doubles as the refinement
 * knob for re-checks. */
const JacobiPoly &jacobi_poly(const RootDatum &rd, const Mult &m,
                              const IVec &mu, int nodes_per_panel = 32,
                              double cond_limit = 1e12);

/* eta twist prod_{short carrier alpha} cosh(alpha(X+iY))^(sign 2|l|). */
cplx eta_eval(const RootDatum &rd, int l, int sign, const Vec &X,
              const Vec &Y);
/* Torus restriction prod cos(y_j)^{2|l|} (nonnegative). */
double eta_torus(const RootDatum &rd, int l, const Vec &Y);

/* phi_{lambda,l} = eta^variant * F(lambda, m_variant(l); .) at exp(X+iY).
 * The poly backend requires lambda = mu + rho(m) with mu in the l-lattice
 * and evaluates through the polynomial (variant-independent). */
cplx phi_spherical(const RootDatum &rd, const Mult &geom, int l,
                   const CVec &lambda, const Vec &X, const Vec &Y,
                   int variant, Backend backend);

/* psi_{mu,l} on the torus: eta_l(exp iY) P_{mu - 2|l| rho_s}(m_+(l); Y)
 * / P(0); exactly 1 at Y = 0. */
cplx psi_spherical(const RootDatum &rd, const Mult &geom, int l,
                   const IVec &mu, const Vec &Y);

/* Scalar part of psi (psi = eta * psi_scalar). */
double psi_scalar(const RootDatum &rd, const Mult &geom, int l,
                  const IVec &mu, const Vec &Y);

}  // namespace heckop
