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

#include <functional>

#include "rootdata.hpp"

namespace heckop {

/* Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration, cached. */
const std::vector<std::pair<double, double>> &gauss_legendre(int n);

/* Uniform periodic product grid over [0, 2pi)^rank, row-major. */
struct TorusGrid {
  int rank = 1;
  int N = 0;
  size_t points() const {
    size_t p = 1;
    for (int i = 0; i < rank; ++i) p *= (size_t)N;
    return p;
  }
  Vec point(size_t idx) const {
    Vec y(rank);
    for (int j = rank - 1; j >= 0; --j) {
      y[j] = 2.0 * kPi * double(idx % N) / double(N);
      idx /= N;
    }
    return y;
  }
  bool operator==(const TorusGrid &o) const {
    return rank == o.rank && N == o.N;
  }
};

/* Band-limited (trigonometric) upsampling of periodic samples by an integer
 * factor, axis by axis; exact on trig polynomials below the Nyquist band. */
CVec trig_upsample(const CVec &values, const TorusGrid &from, int factor);

/* Quadrature of analytic-between-kinks integrands against the |sin|^m
 * structure of the torus density: panels split at the weight kink lines,
 * Gauss-Legendre inside each panel. Exponentially accurate for trig
 * polynomials times integer-multiplicity densities. Ranks 1 and 2 are
 * panelized; higher ranks fall back to a dense uniform grid. The result is
 * the plain integral over [0, 2pi)^rank. */
class TorusQuad {
 public:
  explicit TorusQuad(int rank, int nodes_per_panel = 32);
  cplx integrate(const std::function<cplx(const Vec &)> &f) const;
  double integrate_real(const std::function<double(const Vec &)> &f) const;

 private:
  int rank_;
  int nodes_;
};

}  // namespace heckop
