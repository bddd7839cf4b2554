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

#include "common.hpp"

namespace heckop {

/* log Gamma on the complex plane (Lanczos g=7 plus reflection). The branch
 * is only consistent up to 2*pi*i, which is fine for exp(differences). */
cplx lgamma_c(cplx z);

/* Distance from z to the nearest pole of Gamma (nonpositive integers);
 * +inf-ish when Re z is safely positive. */
double gamma_pole_distance(cplx z);

inline bool near_gamma_pole(cplx z, double tol = 1e-9) {
  return gamma_pole_distance(z) < tol;
}

}  // namespace heckop
