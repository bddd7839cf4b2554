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

#include <cmath>

#include "core/hypergeom.hpp"
#include "core/jacobi.hpp"
#include "core/rank1.hpp"
#include "doctest.h"

using namespace heckop;

TEST_CASE("normalized to one at the identity") {
  for (Mult m : {Mult{0, 0, 1}, Mult{2, 0, 1}, Mult{-2, 0, 3}}) {
    for (cplx lam : {cplx(0.7, 1.2), cplx(2.2, -0.4)}) {
      CHECK(std::abs(f_rank1(m, lam, 0.0, 0.0) - 1.0) < 1e-13);
    }
  }
}

TEST_CASE("reflection invariance in the spectral parameter") {
  Mult m{2, 0, 1};
  for (cplx lam : {cplx(1.3, 0.6), cplx(0.2, 2.0)}) {
    cplx a = f_rank1(m, lam, 0.4, 0.8);
    cplx b = f_rank1(m, -lam, 0.4, 0.8);
    CHECK(std::abs(a - b) < 1e-12 * (1 + std::abs(a)));
  }
}

TEST_CASE("series backend agreement on the overlap") {
  RootDatum rd(1, Case::II);
  Rng rng(11);
  for (Mult m : {Mult{0, 0, 1}, Mult{2, 0, 1}, Mult{-2, 0, 3},
                 Mult{-4, 0, 5}}) {
    for (int t = 0; t < 12; ++t) {
      cplx lam = rng.complex_box(-2.5, 2.5, -2.5, 2.5);
      double x = rng.uniform(0.3, 0.9), y = rng.uniform(-0.5, 0.5);
      EvalReport series = f_eval(rd, m, CVec{lam}, Vec{x}, Vec{y}, 1e-12);
      cplx oracle = f_rank1(m, lam, x, y);
      CHECK(std::abs(series.value - oracle) <
            1e-8 * (1.0 + std::abs(oracle)));
    }
  }
}

TEST_CASE("torus values of lattice spherical functions stay bounded") {
  // |eta_l F(mu + rho(m), m_+(l); exp iY)| <= 1 on (-pi/2, pi/2)
  RootDatum rd(1, Case::II);
  Mult geom{2, 0, 1};
  double rho = geom.s / 2 + geom.l;
  for (int l : {0, 1, 2}) {
    Mult mp = shift_mult(geom, l, +1);
    for (int mu1 = std::abs(l); mu1 <= std::abs(l) + 6; mu1 += 2) {
      for (double y : {0.12, 0.55, 0.9, 1.31, 1.49}) {
        cplx F = f_rank1(mp, cplx(double(mu1) + rho, 0.0), 0.0, y);
        double eta = std::pow(std::cos(y), double(l));
        CHECK(std::abs(eta * F) <= 1.0 + 1e-6);
      }
    }
  }
}

TEST_CASE("imaginary-direction growth matches the torus distance") {
  // log |F(it, m; exp iy)| / t -> |y| as t grows
  Mult m{0, 0, 1};
  double y = 0.6;
  double t1 = 60, t2 = 80;
  double g1 = std::log(std::abs(f_rank1(m, cplx(0, t1), 0.0, y)));
  double g2 = std::log(std::abs(f_rank1(m, cplx(0, t2), 0.0, y)));
  double slope = (g2 - g1) / (t2 - t1);
  CHECK(std::abs(slope - y) < 0.05 * y);
}

TEST_CASE("wall rejection") {
  Mult m{0, 0, 1};
  CHECK_THROWS_AS(f_rank1(m, cplx(1.1, 0.2), 0.0, kPi / 2), DomainError);
}
