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

/* Gauss hypergeometric function for complex parameters on the cut plane
 * C \ [1, inf). Power series inside |z| <= 0.85, Pfaff and the standard
 * linear transformations outside; terminating cases (a or b a nonpositive
 * integer) are summed exactly. Degenerate connection parameters
 * (c-a-b or a-b integral) fall back to an epsilon-offset average, which
 * costs a few digits and is reported via *degenerate_or_null. */
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol = 1e-12,
               int *degenerate_or_null = nullptr);

}  // namespace heckop
