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

#include "rootdata.hpp"

namespace heckop {

/* Highest restricted weight mu of a chi_l-spherical representation; mu0 is
 * fixed by l and the case and never enters torus-side evaluations. */
struct DominantWeight {
  IVec mu;
  int l = 0;
  int mu0 = 0;
  int height() const {
    int h = 0;
    for (int v : mu) h += v;
    return h;
  }
  bool operator==(const DominantWeight &o) const {
    return mu == o.mu && l == o.l;
  }
  bool operator<(const DominantWeight &o) const {
    if (height() != o.height()) return height() < o.height();
    return mu < o.mu;
  }
};

/* mu_1 in |l| + 2Z+, mu_j - mu_i in 2Z+ for i < j. */
bool is_in_lambda_l(const RootDatum &rd, const IVec &mu, int l);

/* All lattice points of height <= max_height, sorted by height then lex. */
std::vector<DominantWeight> enumerate_lambda_l(const RootDatum &rd, int l,
                                               int max_height);

/* Fundamental weights dual to the simple system of the unmultiplicable
 * roots: omega_j = 2 (eps_j + ... + eps_n). */
std::vector<Vec> fundamental_weights(const RootDatum &rd);

inline int mu0_for(const RootDatum &rd, int l) {
  return rd.space_case() == Case::I ? 0 : l;
}

}  // namespace heckop
