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

#include "gauss2f1.hpp"
#include "rootdata.hpp"

namespace heckop {

/* Gauss parameters realizing the BC_1 radial eigenfunction: with
 * rho = m_s/2 + m_l the equation matches the hypergeometric ODE in
 * u = -sinh^2(z), giving
 *   F(lambda, m; exp z) = 2F1((rho+lambda)/2, (rho-lambda)/2;
 *                             (m_s+m_l+1)/2; -sinh^2 z),
 * normalized to 1 at z = 0. The mapping is frozen behind the cross-backend
 * equivalence tests. */
struct GaussParams {
  cplx a, b, c;
  double rho;
};

GaussParams rank1_params(const Mult &m, cplx lambda);

/* F(lambda, m; exp(x + iy)) on the full tube including x = 0; the torus
 * wall |2y| = pi is excluded. */
cplx f_rank1(const Mult &m, cplx lambda, double x, double y,
             double tol = 1e-12);

}  // namespace heckop
