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

#include "gammafn.hpp"

#include <cmath>

namespace heckop {

namespace {

const double kLanczos[9] = {0.99999999999980993,
                            676.5203681218851,
                            -1259.1392167224028,
                            771.32342877765313,
                            -176.61502916214059,
                            12.507343278686905,
                            -0.13857109526572012,
                            9.9843695780195716e-6,
                            1.5056327351493116e-7};

/* log(sin(pi z)) without overflow for large |Im z|: peel off the dominant
 * exponential before calling log1p. */
cplx log_sin_pi(cplx z) {
  const cplx ipz = cplx(0, 1) * kPi * z;
  if (z.imag() > 0) {
    // |e^{-i pi z}| dominates
    return -ipz + std::log(cplx(0, 0.5)) + std::log(1.0 - std::exp(2.0 * ipz));
  }
  return ipz + std::log(cplx(0, -0.5)) + std::log(1.0 - std::exp(-2.0 * ipz));
}

}  // namespace

cplx lgamma_c(cplx z) {
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(cplx(kPi)) - log_sin_pi(z) - lgamma_c(1.0 - z);
  }
  z -= 1.0;
  cplx x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  cplx t = z + 7.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

double gamma_pole_distance(cplx z) {
  if (z.real() > 0.5) return 1.0;
  double r = std::round(z.real());
  if (r > 0.5) return 1.0;
  return std::hypot(z.real() - r, z.imag());
}

}  // namespace heckop
