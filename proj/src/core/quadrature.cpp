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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace heckop {

const std::vector<std::pair<double, double>> &gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < n; ++i) {
    // Newton from the Chebyshev-like initial guess
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      double deriv = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / deriv;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // recompute derivative at the converged node
    p0 = 1.0;
    p1 = 0.0;
    for (int k = 0; k < n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
    }
    double deriv = n * (x * p0 - p1) / (x * x - 1.0);
    rule[i] = {x, 2.0 / ((1.0 - x * x) * deriv * deriv)};
  }
  std::sort(rule.begin(), rule.end());
  return cache[n] = rule;
}

CVec trig_upsample(const CVec &values, const TorusGrid &from, int factor) {
  if (factor <= 1) return values;
  const int N = from.N;
  const int M = N * factor;
  const cplx I(0, 1);

  // twiddle tables keep the transforms at multiply-add cost
  CVec twN(N), twM(M);
  for (int k = 0; k < N; ++k)
    twN[k] = std::exp(-2.0 * kPi * I * double(k) / double(N));
  for (int k = 0; k < M; ++k)
    twM[k] = std::exp(2.0 * kPi * I * double(k) / double(M));

  // one axis: samples v[0..N) -> fine[0..M)
  auto upsample_line = [&](const CVec &v) {
    CVec spec(N);
    for (int f = 0; f < N; ++f) {
      cplx acc = 0;
      long idx = 0;
      for (int k = 0; k < N; ++k) {
        acc += v[k] * twN[idx];
        idx += f;
        if (idx >= N) idx -= N;
      }
      spec[f] = acc / double(N);
    }
    CVec fine(M, cplx(0));
    for (int f = 0; f < N; ++f) {
      // signed frequency in [-N/2, N/2]; Nyquist split symmetrically
      int sf = f <= N / 2 ? f : f - N;
      bool nyquist = (N % 2 == 0 && f == N / 2);
      cplx coeff = nyquist ? 0.5 * spec[f] : spec[f];
      long stride = ((long)sf % M + M) % M;
      long idx = 0;
      for (int p = 0; p < M; ++p) {
        fine[p] += coeff * twM[idx];
        idx += stride;
        if (idx >= M) idx -= M;
      }
      if (nyquist) {
        long stride2 = ((long)(-sf) % M + M) % M;
        idx = 0;
        for (int p = 0; p < M; ++p) {
          fine[p] += coeff * twM[idx];
          idx += stride2;
          if (idx >= M) idx -= M;
        }
      }
    }
    return fine;
  };

  // upsample axis by axis (row-major, last axis fastest)
  CVec cur = values;
  std::vector<int> dims(from.rank, N);
  for (int axis = from.rank - 1; axis >= 0; --axis) {
    size_t total = 1;
    for (int d : dims) total *= (size_t)d;
    size_t inner = 1;
    for (int d = axis + 1; d < from.rank; ++d) inner *= (size_t)dims[d];
    size_t outer = total / (inner * (size_t)dims[axis]);
    std::vector<int> newdims = dims;
    newdims[axis] = M;
    size_t newtotal = total / (size_t)dims[axis] * (size_t)M;
    CVec next(newtotal);
    CVec line(N), fine;
    for (size_t o = 0; o < outer; ++o)
      for (size_t in = 0; in < inner; ++in) {
        for (int k = 0; k < N; ++k)
          line[k] = cur[(o * dims[axis] + k) * inner + in];
        fine = upsample_line(line);
        for (int p = 0; p < M; ++p)
          next[(o * (size_t)M + p) * inner + in] = fine[p];
      }
    cur.swap(next);
    dims = newdims;
  }
  return cur;
}

namespace {

/* kink positions of |sin t| and |cos t| on [0, 2pi): multiples of pi/2 */
std::vector<double> axis_breaks() {
  return {0, kPi / 2, kPi, 3 * kPi / 2, 2 * kPi};
}

template <typename F>
cplx panel_line(const std::vector<double> &breaks, int nodes, F &&f) {
  const auto &rule = gauss_legendre(nodes);
  cplx acc = 0;
  for (size_t p = 0; p + 1 < breaks.size(); ++p) {
    double a = breaks[p], b = breaks[p + 1];
    if (b - a < 1e-13) continue;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0;
    for (auto [x, w] : rule) s += w * f(mid + half * x);
    acc += half * s;
  }
  return acc;
}

std::vector<double> sorted_breaks(std::vector<double> pts) {
  for (double &p : pts) {
    p = std::fmod(p, 2 * kPi);
    if (p < 0) p += 2 * kPi;
  }
  pts.push_back(0);
  pts.push_back(2 * kPi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double a, double b) { return b - a < 1e-12; }),
            pts.end());
  if (pts.back() < 2 * kPi - 1e-12) pts.push_back(2 * kPi);
  return pts;
}

}  // namespace

TorusQuad::TorusQuad(int rank, int nodes_per_panel)
    : rank_(rank), nodes_(nodes_per_panel) {
  if (rank < 1) throw UsageError("quadrature rank must be >= 1");
}

cplx TorusQuad::integrate(const std::function<cplx(const Vec &)> &f) const {
  if (rank_ == 1) {
    return panel_line(axis_breaks(), nodes_, [&](double y) {
      Vec Y{y};
      return f(Y);
    });
  }
  if (rank_ == 2) {
    // outer panels at pi/4 steps: weight kinks and diagonal crossings all
    // live on that lattice
    std::vector<double> outer;
    for (int k = 0; k <= 8; ++k) outer.push_back(k * kPi / 4);
    return panel_line(outer, nodes_, [&](double y2) {
      std::vector<double> inner = {0,      kPi / 2,       kPi,
                                   3 * kPi / 2, y2,       y2 + kPi,
                                   2 * kPi - y2, kPi - y2};
      auto breaks = sorted_breaks(inner);
      return panel_line(breaks, nodes_, [&](double y1) {
        Vec Y{y1, y2};
        return f(Y);
      });
    });
  }
  // dense fallback for rank >= 3
  int N = 64;
  TorusGrid g{rank_, N};
  cplx acc = 0;
  size_t pts = g.points();
  for (size_t i = 0; i < pts; ++i) acc += f(g.point(i));
  double cell = std::pow(2 * kPi / N, rank_);
  return acc * cell;
}

double TorusQuad::integrate_real(
    const std::function<double(const Vec &)> &f) const {
  return integrate([&](const Vec &y) { return cplx(f(y), 0.0); }).real();
}

}  // namespace heckop
