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

#include "rank1.hpp"

#include <cmath>

namespace heckop {

GaussParams rank1_params(const Mult &m, cplx lambda) {
  GaussParams p;
  p.rho = m.s / 2 + m.l;
  p.a = (p.rho + lambda) / 2.0;
  p.b = (p.rho - lambda) / 2.0;
  p.c = (m.s + m.l + 1.0) / 2.0;
  return p;
}

cplx f_rank1(const Mult &m, cplx lambda, double x, double y, double tol) {
  GaussParams p = rank1_params(m, lambda);
  cplx z(x, y);
  cplx sh = std::sinh(z);
  cplx u = -sh * sh;
  if (std::abs(u.imag()) < 1e-13 && u.real() >= 1.0 - 1e-13)
    throw DomainError("rank-1 evaluation at or beyond the torus wall");
  return gauss_2f1(p.a, p.b, p.c, u, tol);
}

}  // namespace heckop
