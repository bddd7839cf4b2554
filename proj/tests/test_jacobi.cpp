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

#include "core/jacobi.hpp"
#include "core/quadrature.hpp"
#include "core/rank1.hpp"
#include "core/transform.hpp"
#include "doctest.h"

using namespace heckop;

TEST_CASE("orbit sums") {
  RootDatum rd(2, Case::II);
  CHECK(orbit_sum_eval(rd, IVec{0, 0}, Vec{0.3, 0.7}) ==
        doctest::Approx(8.0));
  RootDatum rd1(1, Case::II);
  for (double y : {0.2, 1.1}) {
    CHECK(orbit_sum_eval(rd1, IVec{2}, Vec{y}) ==
          doctest::Approx(2.0 * std::cos(2.0 * y)).epsilon(1e-14));
  }
  // invariance under the group action on the torus
  Vec Y{0.4, 1.2};
  double base = orbit_sum_eval(rd, IVec{2, 4}, Y);
  for (const WeylElement &w : rd.weyl()) {
    Vec wy = rd.act(w, Y);
    CHECK(orbit_sum_eval(rd, IVec{2, 4}, wy) ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("dominated weight enumeration") {
  RootDatum rd(2, Case::II);
  auto basis = dominated_weights(rd, IVec{2, 2});
  // contains the top weight last
  CHECK(basis.back() == IVec{2, 2});
  for (const IVec &nu : basis) {
    int t2 = 2 - nu[1];
    int t1 = 4 - nu[0] - nu[1];
    CHECK(t2 >= 0);
    CHECK(t1 >= 0);
    CHECK(nu[0] <= nu[1]);
  }
}

TEST_CASE("constant polynomial") {
  RootDatum rd(1, Case::I);
  const JacobiPoly &p = jacobi_poly(rd, Mult{0, 0, 1}, IVec{0});
  REQUIRE(p.coeffs.size() == 1);
  CHECK(p.coeffs[0].second == 1.0);
  CHECK(p.value0 == doctest::Approx(2.0));  // m_0 = |W|
}

TEST_CASE("CP^1 polynomials match Legendre closed forms") {
  RootDatum rd(1, Case::I);
  Mult m{0, 0, 1};
  // psi_2 = cos 2y, psi_4 = 1/4 + (3/4) cos 4y
  for (double y : {0.0, 0.35, 1.2, 2.6}) {
    const JacobiPoly &p2 = jacobi_poly(rd, m, IVec{2});
    double psi2 = p2.eval(rd, Vec{y}) / p2.value0;
    CHECK(psi2 == doctest::Approx(std::cos(2 * y)).epsilon(1e-10));
    const JacobiPoly &p4 = jacobi_poly(rd, m, IVec{4});
    double psi4 = p4.eval(rd, Vec{y}) / p4.value0;
    CHECK(psi4 ==
          doctest::Approx(0.25 + 0.75 * std::cos(4 * y)).epsilon(1e-10));
  }
}

TEST_CASE("orthogonality holds at the refined quadrature") {
  RootDatum rd(1, Case::II);
  Mult mp{0, 0, 3};  // m_+(1) of (2, ., 1)
  TorusQuad fine(1, 64);
  for (int mu1 = 2; mu1 <= 8; mu1 += 2) {
    const JacobiPoly &P = jacobi_poly(rd, mp, IVec{mu1});
    for (const IVec &nu : dominated_weights(rd, IVec{mu1})) {
      if (nu == IVec{mu1}) continue;
      double ip = fine.integrate_real([&](const Vec &Y) {
        return P.eval(rd, Y) * orbit_sum_eval(rd, nu, Y) *
               delta_density(rd, mp, Y);
      });
      double n1 = std::sqrt(fine.integrate_real([&](const Vec &Y) {
        double v = P.eval(rd, Y);
        return v * v * delta_density(rd, mp, Y);
      }));
      double n2 = std::sqrt(fine.integrate_real([&](const Vec &Y) {
        double v = orbit_sum_eval(rd, nu, Y);
        return v * v * delta_density(rd, mp, Y);
      }));
      CHECK(std::abs(ip) / (n1 * n2) < 1e-8);
    }
  }
}

TEST_CASE("gram condition guard") {
  RootDatum rd(1, Case::I);
  CHECK_THROWS_AS(jacobi_poly(rd, Mult{0, 0, 1}, IVec{6}, 32, 1.0000001),
                  IllConditioned);
}

TEST_CASE("eta twist") {
  RootDatum rd(2, Case::II);
  Vec zero{0.0, 0.0};
  CHECK(std::abs(eta_eval(rd, 3, +1, zero, zero) - 1.0) < 1e-15);
  CHECK(std::abs(eta_eval(rd, 0, +1, Vec{0.4, 0.1}, Vec{0.9, 0.2}) - 1.0) <
        1e-15);
  cplx v = eta_eval(rd, 1, +1, zero, Vec{kPi / 3, kPi / 6});
  CHECK(v.real() == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-14);
  // minus variant inverts
  cplx p = eta_eval(rd, 2, +1, Vec{0.3, 0.5}, Vec{0.2, 0.4});
  cplx q = eta_eval(rd, 2, -1, Vec{0.3, 0.5}, Vec{0.2, 0.4});
  CHECK(std::abs(p * q - 1.0) < 1e-12);
  CHECK_THROWS_AS(eta_eval(rd, 1, -1, zero, Vec{kPi / 2, 0.1}), PoleError);
}

TEST_CASE("psi normalization and rank-1 oracle") {
  RootDatum rd(1, Case::I);
  Mult geom{0, 0, 1};
  cplx one = psi_spherical(rd, geom, 0, IVec{2}, Vec{0.0});
  CHECK(one == cplx(1.0));  // exact
  for (double y : {0.3, 0.9, 2.2}) {
    cplx psi = psi_spherical(rd, geom, 0, IVec{2}, Vec{y});
    CHECK(std::abs(psi - std::cos(2 * y)) < 1e-10);
  }
  CHECK_THROWS_AS(psi_spherical(rd, geom, 0, IVec{3}, Vec{0.1}), DomainError);

  // l = 1 value against the eta-twisted rank-1 oracle
  Mult mp = shift_mult(geom, 1, +1);
  double rho = geom.s / 2 + geom.l;
  for (double y : {0.25, 0.8}) {
    cplx psi = psi_spherical(rd, geom, 1, IVec{3}, Vec{y});
    cplx oracle = std::cos(y) * f_rank1(mp, cplx(3.0 + rho, 0.0), 0, y);
    CHECK(std::abs(psi - oracle) < 1e-8 * (1 + std::abs(oracle)));
  }
}

TEST_CASE("spherical function backends agree") {
  SUBCASE("rank 1") {
    RootDatum rd(1, Case::II);
    Mult geom{2, 0, 1};
    Vec rho = rd.rho(geom);
    int l = 1;
    IVec mu{3};
    CVec lam{cplx(mu[0] + rho[0], 0.0)};
    Vec X{0.6}, Y{0.4};
    cplx series = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Series);
    cplx poly = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Poly);
    cplx rank1 = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Rank1);
    CHECK(std::abs(series - poly) < 1e-6 * (1 + std::abs(poly)));
    CHECK(std::abs(rank1 - poly) < 1e-8 * (1 + std::abs(poly)));
  }
  SUBCASE("rank 2") {
    RootDatum rd(2, Case::I);
    Mult geom{0, 1, 1};
    Vec rho = rd.rho(geom);
    int l = 1;
    IVec mu{1, 3};
    CVec lam{cplx(mu[0] + rho[0], 0.0), cplx(mu[1] + rho[1], 0.0)};
    Vec X{0.5, 1.05}, Y{0.3, 0.1};
    cplx series = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Series);
    cplx poly = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Poly);
    // the series runs at a deterministically perturbed spectral parameter
    // (lattice resonance), which bounds the attainable agreement
    CHECK(std::abs(series - poly) < 1e-5 * (1 + std::abs(poly)));
  }
}

TEST_CASE("variant agreement and spectral symmetry") {
  RootDatum rd(1, Case::II);
  Mult geom{2, 0, 1};
  int l = 1;
  CVec lam{cplx(1.4, 0.7)};
  Vec X{0.7}, Y{0.35};
  cplx plus = phi_spherical(rd, geom, l, lam, X, Y, +1, Backend::Series);
  cplx minus = phi_spherical(rd, geom, l, lam, X, Y, -1, Backend::Series);
  CHECK(std::abs(plus - minus) < 1e-8 * std::abs(plus));

  // phi_{lambda,l} = phi_{-lambda,l} on A (Y = 0)
  CVec neg{-lam[0]};
  cplx a = phi_spherical(rd, geom, l, lam, X, Vec{0.0}, +1, Backend::Series);
  cplx b = phi_spherical(rd, geom, l, neg, X, Vec{0.0}, +1, Backend::Series);
  CHECK(std::abs(a - b) < 1e-10 * (1 + std::abs(a)));
}
