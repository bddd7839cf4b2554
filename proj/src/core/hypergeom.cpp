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

#include "hypergeom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>

#include "gammafn.hpp"

namespace heckop {

namespace {

int cone_height(const IVec &kappa) {
  long s = 0;
  for (size_t j = 0; j < kappa.size(); ++j) s += (long)(j + 1) * kappa[j];
  return (int)(s / 2);
}

}  // namespace

uint64_t ConeIndex::pack(const IVec &kappa) {
  uint64_t key = 0;
  for (int v : kappa) key = key * 2048 + uint64_t(v + 1024);
  return key;
}

int ConeIndex::find(const IVec &kappa) const {
  auto it = pos.find(pack(kappa));
  return it == pos.end() ? -1 : it->second;
}

int default_series_height(int rank) {
  if (rank <= 1) return 120;
  if (rank == 2) return 60;
  return 40;
}

std::shared_ptr<const ConeIndex> cone_index(int rank, int max_height) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ConeIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({rank, max_height});
  if (it != cache.end()) return it->second;

  // kappa = sum_j c_j gamma_j over the doubled carrier simple roots
  // gamma_1 = 2 eps_1, gamma_j = 2(eps_j - eps_{j-1}); height = sum c_j.
  auto idx = std::make_shared<ConeIndex>();
  idx->max_height = max_height;
  IVec c(rank, 0);
  std::vector<std::pair<int, IVec>> items;
  std::function<void(int, int)> rec = [&](int j, int used) {
    if (j == rank) {
      IVec kappa(rank, 0);
      kappa[0] = 2 * c[0];
      for (int t = 1; t < rank; ++t) {
        kappa[t] += 2 * c[t];
        kappa[t - 1] -= 2 * c[t];
      }
      items.push_back({used, kappa});
      return;
    }
    for (int v = 0; used + v <= max_height; ++v) {
      c[j] = v;
      rec(j + 1, used + v);
    }
    c[j] = 0;
  };
  rec(0, 0);
  std::sort(items.begin(), items.end());
  idx->kappas.reserve(items.size());
  idx->heights.reserve(items.size());
  idx->bands.assign(max_height + 1, {0, 0});
  for (auto &it2 : items) {
    idx->pos[ConeIndex::pack(it2.second)] = (int)idx->kappas.size();
    idx->heights.push_back(it2.first);
    idx->kappas.push_back(it2.second);
  }
  int begin = 0;
  for (int h = 0; h <= max_height; ++h) {
    int end = begin;
    while (end < (int)idx->heights.size() && idx->heights[end] == h) ++end;
    idx->bands[h] = {begin, end};
    begin = end;
  }
  cache[{rank, max_height}] = idx;
  return idx;
}

GammaTable gamma_table(const RootDatum &rd, const Mult &m, const CVec &lambda,
                       int max_height, double resonance_tol) {
  GammaTable t;
  t.rd = &rd;
  t.m = m;
  t.lambda = lambda;
  t.rho_m = rd.rho(m);
  t.cone = cone_index(rd.rank(), max_height);
  t.gamma.assign(t.cone->kappas.size(), cplx(0.0));
  t.gamma[0] = 1.0;

  const auto &roots = rd.carrier_roots();
  const int n = rd.rank();
  IVec prev(n);
  for (size_t i = 1; i < t.cone->kappas.size(); ++i) {
    const IVec &kappa = t.cone->kappas[i];
    cplx rhs = 0.0;
    const int hk = cone_height(kappa);
    for (const Root &r : roots) {
      double ma = m.of(r.orbit);
      if (ma == 0.0) continue;
      // heights drop by at least k per step, so k <= ht(kappa)
      for (int k = 1; k <= hk; ++k) {
        for (int j = 0; j < n; ++j) prev[j] = kappa[j] - 2 * k * r.coords[j];
        int pi_ = t.cone->find(prev);
        if (pi_ < 0) break;  // tail sums only decrease with k
        // <lambda - rho - kappa + 2k alpha, alpha>
        cplx pair = 0.0;
        for (int j = 0; j < n; ++j)
          pair += (lambda[j] - t.rho_m[j] - double(kappa[j]) +
                   2.0 * k * r.coords[j]) *
                  double(r.coords[j]);
        rhs += 2.0 * ma * pair * t.gamma[pi_];
      }
    }
    if (rhs == 0.0) {
      // lattice resonances with identically vanishing numerators are
      // removable (terminating series); keep the coefficient at zero
      t.gamma[i] = 0.0;
      continue;
    }
    double k2 = idot(kappa, kappa);
    cplx klam = 0.0;
    for (int j = 0; j < n; ++j) klam += double(kappa[j]) * lambda[j];
    cplx denom = 2.0 * klam - k2;
    double lam_norm = 0.0;
    for (auto &v : lambda) lam_norm += std::norm(v);
    double scale =
        std::max(1.0, k2 + 2.0 * std::sqrt(k2) * std::sqrt(lam_norm));
    if (std::abs(denom) <= resonance_tol * scale)
      throw ResonantParameter("resonant spectral parameter in series", kappa);
    t.gamma[i] = rhs / denom;
  }
  return t;
}

EvalReport phi_eval(const GammaTable &t, const Vec &X, const Vec &Y,
                    double tol, double x_min) {
  const RootDatum &rd = *t.rd;
  for (const Root &r : rd.carrier_roots()) {
    double ax = idot(r.coords, X);
    if (ax < x_min)
      throw DomainError("series evaluation outside the convergence margin");
  }
  const int n = rd.rank();
  CVec Z(n);
  for (int j = 0; j < n; ++j) Z[j] = cplx(X[j], Y[j]);
  cplx base = 0.0;
  for (int j = 0; j < n; ++j) base += (t.lambda[j] - t.rho_m[j]) * Z[j];
  cplx lead = std::exp(base);

  EvalReport rep;
  cplx sum = 0.0;
  double prev_block = -1.0, last_block = -1.0;
  int H = t.cone->max_height;
  for (int h = 0; h <= H; ++h) {
    auto [b, e] = t.cone->bands[h];
    cplx block = 0.0;
    for (int i = b; i < e; ++i) {
      const IVec &kappa = t.cone->kappas[i];
      if (t.gamma[i] == 0.0) continue;
      cplx expo = 0.0;
      for (int j = 0; j < n; ++j) expo -= double(kappa[j]) * Z[j];
      block += t.gamma[i] * std::exp(expo);
    }
    sum += block;
    prev_block = last_block;
    last_block = std::abs(block);
    rep.height_used = h;
    if (h >= 2 && prev_block >= 0 &&
        prev_block + last_block < tol * (1.0 + std::abs(sum))) {
      double q = prev_block > 0 ? last_block / prev_block : 0.0;
      double tail = q < 1.0 ? last_block * q / (1.0 - q) : last_block;
      rep.value = lead * sum;
      rep.achieved_tol = (last_block + tail) / (1.0 + std::abs(sum));
      return rep;
    }
  }
  throw NoConvergence("series truncation cap reached before tolerance");
}

cplx c_tilde(const RootDatum &rd, const Mult &m, const CVec &lambda) {
  cplx log_sum = 0.0;
  cplx prefactor = 1.0;
  for (const Root &r : rd.carrier_roots()) {
    double ma = m.of(r.orbit);
    double mhalf = r.orbit == Orbit::Long ? m.s : 0.0;
    if (ma == 0.0 && mhalf == 0.0) continue;
    cplx la = pairing_alpha(lambda, r.coords);
    cplx top = la + mhalf / 4.0;
    cplx bot = top + ma / 2.0;
    bool top_pole = near_gamma_pole(top, 1e-9);
    bool bot_pole = near_gamma_pole(bot, 1e-9);
    if (top_pole && bot_pole) {
      // both arguments at nonpositive integers: the ratio has the finite
      // limit (-1)^{p+q} q!/p! with top -> -p, bot -> -q
      long p = std::lround(-top.real());
      long q = std::lround(-bot.real());
      double lim = ((p + q) % 2 ? -1.0 : 1.0) *
                   std::exp(std::lgamma(double(q) + 1.0) -
                            std::lgamma(double(p) + 1.0));
      prefactor *= lim;
      continue;
    }
    if (bot_pole) return cplx(0.0);  // 1/Gamma vanishes
    if (top_pole)
      throw PoleError("c-function pole at this spectral parameter");
    log_sum += lgamma_c(top) - lgamma_c(bot);
  }
  return prefactor * std::exp(log_sum);
}

cplx c_connection(const RootDatum &rd, const Mult &m, const CVec &lambda) {
  if (m.zero()) return cplx(1.0 / double(rd.weyl_order()));
  cplx denom;
  bool direct_ok = true;
  try {
    CVec rho_c;
    for (double v : rd.rho(m)) rho_c.push_back(cplx(v, 0.0));
    denom = c_tilde(rd, m, rho_c);
  } catch (const PoleError &) {
    direct_ok = false;
  }
  if (!direct_ok) {
    // c~(rho(m)) can sit on a Gamma pole (heavily shifted multiplicities,
    // e.g. rho(m_-(l)) = 0); the normalization constant extends by
    // continuity along the short/long shift direction, where the pole of
    // one factor cancels the zero of its partner at matching rates.
    auto at_eps = [&](double eps) {
      Mult me{m.s - 2 * eps, m.m, m.l + 2 * eps};
      CVec rc;
      for (double v : rd.rho(me)) rc.push_back(cplx(v, 0.0));
      return c_tilde(rd, me, rc);
    };
    cplx n1 = at_eps(1e-5), n2 = at_eps(2e-5);
    denom = 2.0 * n1 - n2;  // first-order extrapolation to eps = 0
    if (std::abs(n1 - n2) > 1e-5 * (1.0 + std::abs(n1)))
      throw PoleError("series normalization limit did not stabilize");
  }
  if (std::abs(denom) < 1e-300)
    throw PoleError("degenerate series normalization c~(rho(m)) = 0");
  return c_tilde(rd, m, lambda) / denom;
}

cplx c_normalized(const RootDatum &rd, const Mult &m, const CVec &lambda) {
  if (m.zero()) return cplx(1.0 / double(rd.weyl_order()));
  cplx mine = 0.0, sum = 0.0;
  double mag = 0.0;
  bool first = true;
  for (const WeylElement &w : rd.weyl()) {
    cplx cw = c_tilde(rd, m, rd.act(w, lambda));
    if (first) {
      mine = cw;
      first = false;
    }
    sum += cw;
    mag += std::abs(cw);
  }
  // first Weyl element in enumeration order is the identity
  if (std::abs(sum) < 1e-10 * std::max(mag, 1e-280))
    throw PoleError("degenerate Weyl sum in c normalization");
  return mine / sum;
}

void FEvaluator::build(const CVec &lambda, int max_height) {
  tables_.clear();
  weights_.clear();
  lambda_ = lambda;
  const auto &weyl = rd_->weyl();
  tables_.reserve(weyl.size());
  weights_.reserve(weyl.size());
  for (const WeylElement &w : weyl) {
    CVec wl = rd_->act(w, lambda);
    tables_.push_back(gamma_table(*rd_, m_, wl, max_height));
    weights_.push_back(c_connection(*rd_, m_, wl));
  }
}

FEvaluator::FEvaluator(const RootDatum &rd, const Mult &m, const CVec &lambda,
                       int max_height)
    : rd_(&rd), m_(m) {
  if (max_height <= 0) max_height = default_series_height(rd.rank());
  bool retry = false;
  try {
    build(lambda, max_height);
  } catch (const ResonantParameter &) {
    retry = true;
  } catch (const PoleError &) {
    retry = true;
  }
  if (retry) {
    // deterministic nudge off the resonant set, reported in eval metadata
    int n = rd.rank();
    double norm = 0;
    for (int j = 1; j <= n; ++j) norm += double(j) * j;
    norm = std::sqrt(norm);
    CVec nudged = lambda;
    for (int j = 0; j < n; ++j) nudged[j] += 1e-6 * double(j + 1) / norm;
    build(nudged, max_height);
    perturbed_ = true;
  }
}

EvalReport FEvaluator::eval(const Vec &X, const Vec &Y, double tol,
                            double x_min) const {
  EvalReport rep;
  cplx sum = 0.0;
  double achieved = 0.0;
  int height = 0;
  for (size_t i = 0; i < tables_.size(); ++i) {
    EvalReport r = phi_eval(tables_[i], X, Y, tol, x_min);
    sum += weights_[i] * r.value;
    achieved += std::abs(weights_[i]) * r.achieved_tol * (1 + std::abs(r.value));
    height = std::max(height, r.height_used);
  }
  rep.value = sum;
  rep.achieved_tol = achieved / (1.0 + std::abs(sum));
  rep.height_used = height;
  rep.perturbed = perturbed_;
  return rep;
}

EvalReport f_eval(const RootDatum &rd, const Mult &m, const CVec &lambda,
                  const Vec &X, const Vec &Y, double tol, int max_height) {
  FEvaluator ev(rd, m, lambda, max_height);
  return ev.eval(X, Y, tol);
}

bool in_omega_eps(const RootDatum &rd, const Vec &Y, double eps) {
  for (const Root &r : rd.positive_roots())
    if (std::abs(idot(r.coords, Y)) > kPi - eps) return false;
  return true;
}

double estimate_bound(const RootDatum &rd, const Mult &m, const CVec &lambda,
                      const Vec &X, const Vec &Y, double eps) {
  if (eps <= 0 || eps >= kPi) throw UsageError("eps must lie in (0, pi)");
  if (!in_omega_eps(rd, Y, eps))
    throw DomainError("Y outside the torus domain Omega_eps");
  const double C = 2.0 + 2.0 * std::tan((kPi - eps) / 2.0);
  Vec rho_t = rd.rho(m, RhoMode::RhoTilde);
  double max_re_x = -1e300, min_im_y = 1e300, max_rho_y = -1e300;
  for (const WeylElement &w : rd.weyl()) {
    CVec wl = rd.act(w, lambda);
    Vec wr = rd.act(w, rho_t);
    double rex = 0, imy = 0;
    for (int j = 0; j < rd.rank(); ++j) {
      rex += wl[j].real() * X[j];
      imy += wl[j].imag() * Y[j];
    }
    max_re_x = std::max(max_re_x, rex);
    min_im_y = std::min(min_im_y, imy);
    max_rho_y = std::max(max_rho_y, dot(wr, Y));
  }
  return std::sqrt(double(rd.weyl_order())) *
         std::exp(-min_im_y + 0.5 * C * max_rho_y + max_re_x);
}

}  // namespace heckop
