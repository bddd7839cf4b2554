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

#include "weights.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace heckop {

bool is_in_lambda_l(const RootDatum &rd, const IVec &mu, int l) {
  int n = rd.rank();
  if ((int)mu.size() != n) return false;
  int d0 = mu[0] - std::abs(l);
  if (d0 < 0 || d0 % 2 != 0) return false;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int d = mu[j] - mu[i];
      if (d < 0 || d % 2 != 0) return false;
    }
  return true;
}

std::vector<DominantWeight> enumerate_lambda_l(const RootDatum &rd, int l,
                                               int max_height) {
  if (max_height < 0) throw UsageError("max_height must be >= 0");
  int n = rd.rank();
  std::vector<DominantWeight> out;
  IVec mu(n, 0);
  // mu_1 = |l| + 2 a_1, mu_j = mu_{j-1} + 2 b_j
  std::function<void(int, int)> rec = [&](int j, int height) {
    if (j == n) {
      out.push_back({mu, l, mu0_for(rd, l)});
      return;
    }
    int base = j == 0 ? std::abs(l) : mu[j - 1];
    // coordinates j..n-1 are all >= v, so prune on v * (n - j)
    for (int v = base; height + v * (n - j) <= max_height; v += 2) {
      mu[j] = v;
      rec(j + 1, height + v);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec> fundamental_weights(const RootDatum &rd) {
  int n = rd.rank();
  std::vector<Vec> omega(n, Vec(n, 0.0));
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) omega[j][k] = 2.0;
  return omega;
}

}  // namespace heckop
