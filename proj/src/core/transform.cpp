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

#include "transform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "jacobi.hpp"
#include "rank1.hpp"

namespace heckop {

double delta_density(const RootDatum &rd, const Mult &m, const Vec &Y) {
  double prod = 1.0;
  for (int j = 0; j < rd.rank(); ++j) {
    double s = std::abs(std::sin(Y[j]));
    double c = std::abs(2.0 * std::cos(Y[j]));
    prod *= std::pow(s, m.s + m.l) * std::pow(c, m.l);
  }
  if (rd.rank() > 1 && m.m != 0.0) {
    for (const Root &r : rd.carrier_roots()) {
      if (r.orbit != Orbit::Medium) continue;
      prod *= std::pow(std::abs(std::sin(idot(r.coords, Y))), m.m);
    }
  }
  return prod;
}

int default_oversample(int rank) {
  if (rank <= 1) return 64;
  if (rank == 2) return 4;
  return 1;
}

const CVec &SampledSection::fine_values(int factor) const {
  if (fine_factor != factor) {
    fine = trig_upsample(values, grid, factor);
    fine_factor = factor;
  }
  return fine;
}

namespace {

void check_compatible(const SampledSection &a, const SampledSection &b) {
  if (a.rd != b.rd) throw UsageError("sections live on different spaces");
  if (!(a.grid == b.grid)) throw UsageError("sections live on different grids");
  if (a.l != b.l) throw UsageError("sections carry different bundle indices");
}

/* eta^2 * delta weights on the oversampled grid, cached per shape */
struct WeightTable {
  TorusGrid fine_grid;
  Vec eta2_delta;
  double delta_mass = 0.0;
};

const WeightTable &weight_table(const RootDatum &rd, const Mult &m, int l,
                                const TorusGrid &grid, int factor) {
  static std::mutex mtx;
  static std::map<std::string, WeightTable> cache;
  std::string key = std::to_string(rd.rank()) + "/" +
                    std::to_string(int(rd.space_case())) + "/" +
                    format_double(m.s) + "," + format_double(m.m) + "," +
                    format_double(m.l) + "/" + std::to_string(l) + "/" +
                    std::to_string(grid.N) + "/" + std::to_string(factor);
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  WeightTable t;
  t.fine_grid = TorusGrid{grid.rank, grid.N * factor};
  size_t pts = t.fine_grid.points();
  t.eta2_delta.resize(pts);
  double mass = 0.0;
  for (size_t i = 0; i < pts; ++i) {
    Vec y = t.fine_grid.point(i);
    double d = delta_density(rd, m, y);
    double e = eta_torus(rd, l, y);
    t.eta2_delta[i] = e * e * d;
    mass += d;
  }
  t.delta_mass = mass;
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

cplx inner_product(const SampledSection &a, const SampledSection &b) {
  check_compatible(a, b);
  const RootDatum &rd = *a.rd;
  int os = default_oversample(rd.rank());
  const WeightTable &wt = weight_table(rd, a.geom, a.l, a.grid, os);
  const CVec &fa = a.fine_values(os);
  const CVec &fb = b.fine_values(os);
  // a known compact support is exact: ignore band-limited interpolation
  // residue outside the ball
  double r = -1.0;
  if (a.support_radius > 0) r = a.support_radius;
  if (b.support_radius > 0 && (r < 0 || b.support_radius < r))
    r = b.support_radius;
  int n = rd.rank();
  cplx acc = 0;
  for (size_t i = 0; i < fa.size(); ++i) {
    if (r > 0) {
      Vec y = wt.fine_grid.point(i);
      double nrm2 = 0;
      for (int j = 0; j < n; ++j) {
        double v = y[j] > kPi ? y[j] - 2 * kPi : y[j];
        nrm2 += v * v;
      }
      if (nrm2 > r * r * (1 + 1e-12)) continue;
    }
    acc += wt.eta2_delta[i] * fa[i] * std::conj(fb[i]);
  }
  return acc / wt.delta_mass;
}

namespace {

/* Cached grid (and upsampled) values of psi; the cache never stores datum
 * pointers, so sections built from it always reference the caller's datum. */
struct PsiValues {
  CVec values;
  CVec fine;
  int fine_factor = 0;
};

SampledSection psi_section(const RootDatum &rd, const Mult &geom, int l,
                           const IVec &mu, const TorusGrid &grid) {
  static std::mutex mtx;
  static std::map<std::string, PsiValues> cache;
  std::string key = std::to_string(rd.rank()) + "/" +
                    std::to_string(int(rd.space_case())) + "/" +
                    format_double(geom.s) + "," + format_double(geom.m) + "," +
                    format_double(geom.l) + "/" + std::to_string(l) + "/" +
                    std::to_string(grid.N) + "/";
  for (int v : mu) key += std::to_string(v) + ",";

  SampledSection s;
  s.rd = &rd;
  s.geom = geom;
  s.l = l;
  s.grid = grid;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) {
      s.values = it->second.values;
      s.fine = it->second.fine;
      s.fine_factor = it->second.fine_factor;
      return s;
    }
  }
  size_t pts = grid.points();
  s.values.resize(pts);
  for (size_t i = 0; i < pts; ++i)
    s.values[i] = psi_scalar(rd, geom, l, mu, grid.point(i));
  int os = default_oversample(rd.rank());
  s.fine_values(os);  // fill the upsampling cache before storing
  std::lock_guard<std::mutex> lock(mtx);
  cache[key] = PsiValues{s.values, s.fine, s.fine_factor};
  return s;
}

}  // namespace

SampledSection sample_psi(const RootDatum &rd, const Mult &geom, int l,
                          const IVec &mu, const TorusGrid &grid) {
  return psi_section(rd, geom, l, mu, grid);
}

double empirical_dimension(const RootDatum &rd, const Mult &geom, int l,
                           const IVec &mu, const TorusGrid &grid) {
  SampledSection psi = psi_section(rd, geom, l, mu, grid);
  double nrm = inner_product(psi, psi).real();
  if (nrm <= 0) throw DomainError("empirical dimension: nonpositive norm");
  return 1.0 / nrm;
}

CoefficientVector forward_transform(const SampledSection &f,
                                    const std::vector<DominantWeight> &mus) {
  CoefficientVector out;
  for (const DominantWeight &dw : mus)
    out[dw.mu] = inner_product(f, psi_section(*f.rd, f.geom, f.l, dw.mu,
                                              f.grid));
  return out;
}

CoefficientVector forward_transform(const SampledSection &f, int max_height) {
  auto mus = enumerate_lambda_l(*f.rd, f.l, max_height);
  return forward_transform(f, mus);
}

SampledSection synthesize(const RootDatum &rd, const Mult &geom, int l,
                          const CoefficientVector &coeffs,
                          const TorusGrid &grid) {
  SampledSection s;
  s.rd = &rd;
  s.geom = geom;
  s.l = l;
  s.grid = grid;
  s.values.assign(grid.points(), cplx(0));
  for (const auto &[mu, c] : coeffs) {
    if (!is_in_lambda_l(rd, mu, l))
      throw UsageError("synthesize: coefficient outside the l-lattice");
    double d = empirical_dimension(rd, geom, l, mu, grid);
    SampledSection psi = psi_section(rd, geom, l, mu, grid);
    for (size_t i = 0; i < s.values.size(); ++i)
      s.values[i] += d * c * psi.values[i];
  }
  return s;
}

SampledSection make_bump(const RootDatum &rd, const Mult &geom, int l,
                         double r, const TorusGrid &grid) {
  // the Euclidean r-ball must stay inside Omega: |alpha(Y)| <= |alpha| r
  double max_norm = 0;
  for (const Root &root : rd.positive_roots())
    max_norm = std::max(max_norm, std::sqrt(norm2_root(root.coords)));
  if (!(r > 0) || r * max_norm >= kPi)
    throw DomainError("bump radius leaves the holomorphy domain");

  SampledSection s;
  s.rd = &rd;
  s.geom = geom;
  s.l = l;
  s.grid = grid;
  s.support_radius = r;
  size_t pts = grid.points();
  s.values.resize(pts);
  int n = rd.rank();
  for (size_t i = 0; i < pts; ++i) {
    Vec y = grid.point(i);
    // wrap to (-pi, pi]
    for (int j = 0; j < n; ++j)
      if (y[j] > kPi) y[j] -= 2 * kPi;
    double acc = 0;
    for (const WeylElement &w : rd.weyl()) {
      Vec wy(n);
      for (int j = 0; j < n; ++j) wy[w.perm[j]] = w.signs[j] * y[j];
      double q = dot(wy, wy) / (r * r);
      if (q < 1.0) acc += std::exp(-1.0 / (1.0 - q));
    }
    s.values[i] = acc;
  }
  return s;
}

cplx extended_transform(const SampledSection &f, const CVec &lambda,
                        Backend backend) {
  const RootDatum &rd = *f.rd;
  Vec rho_g = rd.rho(f.geom);
  CVec lam_shift(lambda.size());
  for (size_t j = 0; j < lambda.size(); ++j) lam_shift[j] = lambda[j] + rho_g[j];
  Mult mplus = shift_mult(f.geom, f.l, +1);

  // phi_{lambda + rho, l} on the torus through the requested backend
  std::function<cplx(const Vec &)> phi_scalar;  // phi = eta * phi_scalar
  const JacobiPoly *poly = nullptr;
  if (backend == Backend::Poly) {
    IVec mu(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) {
      double re = lambda[j].real();
      if (std::abs(lambda[j].imag()) > 1e-9 ||
          std::abs(re - std::round(re)) > 1e-9)
        throw DomainError("poly backend needs a lattice spectral parameter");
      mu[j] = (int)std::round(re);
    }
    if (!is_in_lambda_l(rd, mu, f.l))
      throw DomainError("poly backend: mu outside the l-lattice");
    IVec nu(rd.rank());
    for (int j = 0; j < rd.rank(); ++j) nu[j] = mu[j] - std::abs(f.l);
    poly = &jacobi_poly(rd, mplus, nu);
    phi_scalar = [&rd, poly](const Vec &y) {
      return cplx(poly->eval(rd, y) / poly->value0, 0.0);
    };
  } else if (backend == Backend::Rank1) {
    if (rd.rank() != 1)
      throw UsageError("rank1 backend needs a rank-1 space");
    phi_scalar = [mplus, lam_shift](const Vec &y) {
      return f_rank1(mplus, lam_shift[0], 0.0, y[0]);
    };
  } else {
    throw UsageError("extended transform: series backend cannot reach X = 0");
  }

  int os = default_oversample(rd.rank());
  const WeightTable &wt = weight_table(rd, f.geom, f.l, f.grid, os);
  const CVec &ff = f.fine_values(os);
  cplx acc = 0;
  size_t pts = wt.fine_grid.points();
  // For compactly supported sections the quadrature must not see the
  // band-limited interpolant outside the support: phi grows exponentially
  // there and would amplify interpolation noise. g vanishes there exactly,
  // so skipping those points is exact.
  double r = f.support_radius;
  int n = rd.rank();
  for (size_t i = 0; i < pts; ++i) {
    if (ff[i] == 0.0) continue;
    Vec y = wt.fine_grid.point(i);
    if (r > 0) {
      double nrm2 = 0;
      for (int j = 0; j < n; ++j) {
        double v = y[j] > kPi ? y[j] - 2 * kPi : y[j];
        nrm2 += v * v;
      }
      if (nrm2 > r * r * (1 + 1e-12)) continue;
    }
    acc += wt.eta2_delta[i] * ff[i] * phi_scalar(y);
  }
  return acc / wt.delta_mass;
}

TypeFit fit_exponential_type(const SampledSection &f, double t_min,
                             double t_max, int samples, Backend backend) {
  if (f.rd->rank() != 1)
    throw UsageError("exponential-type fitting is a rank-1 operation");
  if (samples < 2 || !(t_max > t_min))
    throw UsageError("bad t-range for the exponential-type fit");
  Vec ts(samples), logs(samples);
  int below = 0;
  for (int i = 0; i < samples; ++i) {
    double t = t_min + (t_max - t_min) * double(i) / double(samples - 1);
    CVec lam{cplx(0.0, t)};
    cplx v = extended_transform(f, lam, backend);
    double a = std::abs(v);
    if (a < 1e-280) ++below;
    ts[i] = t;
    logs[i] = std::log(std::max(a, 1e-300));
  }
  if (below == samples)
    throw DomainError(
        "transform underflows on the whole ray; shrink the t-range");
  // least squares slope
  double mt = 0, ml = 0;
  for (int i = 0; i < samples; ++i) {
    mt += ts[i];
    ml += logs[i];
  }
  mt /= samples;
  ml /= samples;
  double num = 0, den = 0;
  for (int i = 0; i < samples; ++i) {
    num += (ts[i] - mt) * (logs[i] - ml);
    den += (ts[i] - mt) * (ts[i] - mt);
  }
  TypeFit fit;
  fit.type = num / den;
  double ss = 0;
  for (int i = 0; i < samples; ++i) {
    double pred = ml + fit.type * (ts[i] - mt);
    ss += (logs[i] - pred) * (logs[i] - pred);
  }
  fit.residual = std::sqrt(ss / samples);
  fit.samples = samples;
  return fit;
}

}  // namespace heckop
