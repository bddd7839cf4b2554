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

#include <map>

#include "quadrature.hpp"
#include "weights.hpp"

namespace heckop {

/* Cartan integration density prod_alpha |sin(alpha(Y))|^{m_alpha}. The
 * short and long factors are grouped as |sin y|^{m_s+m_l} |2 cos y|^{m_l}
 * so that shifted multiplicities with negative short entries stay finite
 * pointwise. */
double delta_density(const RootDatum &rd, const Mult &m, const Vec &Y);

/* W-invariant scalar part g of a section f = eta_l * g, sampled on a
 * uniform torus grid. */
struct SampledSection {
  const RootDatum *rd = nullptr;
  Mult geom;  // geometric multiplicity of the space
  int l = 0;
  TorusGrid grid;
  CVec values;
  double support_radius = -1.0;  // < 0: unknown

  /* band-limited upsampling cache used by the quadrature */
  mutable CVec fine;
  mutable int fine_factor = 0;

  const CVec &fine_values(int factor) const;
};

int default_oversample(int rank);

/* Mass-one inner product <a,b> = sum (eta a)(eta b)* delta_m / sum delta_m
 * by the periodic trapezoid rule on a trig-upsampled grid. */
cplx inner_product(const SampledSection &a, const SampledSection &b);

using CoefficientVector = std::map<IVec, cplx>;

double empirical_dimension(const RootDatum &rd, const Mult &geom, int l,
                           const IVec &mu, const TorusGrid &grid);

/* psi_{mu,l} sampled as a section (scalar part). */
SampledSection sample_psi(const RootDatum &rd, const Mult &geom, int l,
                          const IVec &mu, const TorusGrid &grid);

/* S_l(f)(mu) = <f, psi_mu> for each mu in mus. */
CoefficientVector forward_transform(const SampledSection &f,
                                    const std::vector<DominantWeight> &mus);
CoefficientVector forward_transform(const SampledSection &f, int max_height);

SampledSection synthesize(const RootDatum &rd, const Mult &geom, int l,
                          const CoefficientVector &coeffs,
                          const TorusGrid &grid);

/* W-symmetrized smooth bump of support radius r (Euclidean in Y). */
SampledSection make_bump(const RootDatum &rd, const Mult &geom, int l,
                         double r, const TorusGrid &grid);

/* S_l(f)(lambda): quadrature of f delta against phi_{lambda+rho,l} on the
 * torus. Backend "rank1" for general lambda at rank 1, "poly" for lattice
 * lambda. */
cplx extended_transform(const SampledSection &f, const CVec &lambda,
                        Backend backend);

struct TypeFit {
  double type = 0.0;
  double residual = 0.0;
  int samples = 0;
};

/* Least-squares slope of log |S_l(f)(i t)| over t in [t_min, t_max]. */
TypeFit fit_exponential_type(const SampledSection &f, double t_min,
                             double t_max, int samples, Backend backend);

}  // namespace heckop
