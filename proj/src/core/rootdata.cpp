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

#include "rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heckop {

Mult shift_mult(const Mult &m, int l, int sign) {
  double t = 2.0 * std::abs(l);
  if (sign >= 0) return {m.s - t, m.m, m.l + t};
  return {m.s + t, m.m, m.l - t};
}

RootDatum::RootDatum(int rank, Case cs) : rank_(rank), case_(cs) {
  if (rank < 1) throw UsageError("root system rank must be >= 1");
  if (rank > 8) throw UsageError("root system rank capped at 8");

  auto unit = [&](int j, int v) {
    IVec c(rank, 0);
    c[j] = v;
    return c;
  };

  for (int j = 0; j < rank; ++j)
    carrier_short_.push_back({unit(j, 1), Orbit::Short});
  std::vector<Root> medium, longs;
  for (int j = 1; j < rank; ++j)
    for (int i = 0; i < j; ++i) {
      IVec minus(rank, 0), plus(rank, 0);
      minus[j] = 1, minus[i] = -1;
      plus[j] = 1, plus[i] = 1;
      medium.push_back({minus, Orbit::Medium});
      medium.push_back({plus, Orbit::Medium});
    }
  for (int j = 0; j < rank; ++j) longs.push_back({unit(j, 2), Orbit::Long});

  carrier_ = carrier_short_;
  carrier_.insert(carrier_.end(), medium.begin(), medium.end());
  carrier_.insert(carrier_.end(), longs.begin(), longs.end());

  if (case_ == Case::II) positive_ = carrier_;
  else {
    positive_ = medium;
    positive_.insert(positive_.end(), longs.begin(), longs.end());
  }

  unmult_ = medium;
  unmult_.insert(unmult_.end(), longs.begin(), longs.end());

  carrier_simple_.push_back(unit(0, 1));
  for (int j = 1; j < rank; ++j) {
    IVec c(rank, 0);
    c[j] = 1, c[j - 1] = -1;
    carrier_simple_.push_back(c);
  }
  unmult_simple_ = carrier_simple_;
  unmult_simple_[0] = unit(0, 2);

  // all signed permutations
  IVec perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mask = 0; mask < (1 << rank); ++mask) {
      WeylElement w;
      w.perm = perm;
      w.signs.resize(rank);
      for (int j = 0; j < rank; ++j) w.signs[j] = (mask >> j) & 1 ? -1 : 1;
      weyl_.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  weyl_order_ = (long long)weyl_.size();
}

WeylElement RootDatum::compose(const WeylElement &a, const WeylElement &b) {
  // (a b) x = a (b x)
  int n = (int)a.perm.size();
  WeylElement c;
  c.perm.resize(n);
  c.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.signs[j] = b.signs[j] * a.signs[b.perm[j]];
  }
  return c;
}

WeylElement RootDatum::identity() const {
  WeylElement e;
  e.perm.resize(rank_);
  e.signs.assign(rank_, 1);
  std::iota(e.perm.begin(), e.perm.end(), 0);
  return e;
}

Vec RootDatum::rho(const Mult &m, RhoMode mode) const {
  Vec out(rank_, 0.0);
  if (mode == RhoMode::RhoS) {
    for (const Root &r : carrier_short_)
      for (int j = 0; j < rank_; ++j) out[j] += 0.5 * r.coords[j];
    return out;
  }
  for (const Root &r : carrier_) {
    double w = m.of(r.orbit);
    if (mode == RhoMode::RhoTilde) w = std::abs(w);
    for (int j = 0; j < rank_; ++j) out[j] += 0.5 * w * r.coords[j];
  }
  return out;
}

Vec RootDatum::rho_closed_form(const Mult &m) const {
  Vec out(rank_);
  for (int j = 0; j < rank_; ++j) out[j] = m.s / 2 + m.l + m.m * j;
  return out;
}

bool RootDatum::in_m_ge(const Mult &m) const {
  for (const Root &r : unmult_) {
    double ma = m.of(r.orbit);
    // alpha/2 is a (carrier) root only for the long orbit
    double mhalf = r.orbit == Orbit::Long ? m.s : 0.0;
    if (ma < 0 || ma + mhalf < 0) return false;
  }
  return true;
}

RootSystem::RootSystem(int rank, Case cs, const Mult &m)
    : datum(rank, cs), mult(m) {
  if (cs == Case::I && m.s != 0)
    throw UsageError("Case I requires vanishing short multiplicity");
}

}  // namespace heckop
