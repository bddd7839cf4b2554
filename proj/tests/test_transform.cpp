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

#include "core/transform.hpp"
#include "doctest.h"

using namespace heckop;

namespace {
const Mult kCp1{0, 0, 1};  // rank-1 model space
}

TEST_CASE("density") {
  RootDatum rd(1, Case::I);
  CHECK(delta_density(rd, kCp1, Vec{0.0}) == 0.0);
  CHECK(delta_density(rd, kCp1, Vec{kPi / 4}) == doctest::Approx(1.0));
  // grouped form stays finite for shifted multiplicities
  Mult mp = shift_mult(kCp1, 1, +1);  // (-2, 0, 3)
  double v = delta_density(rd, mp, Vec{1e-9});
  CHECK(std::isfinite(v));
  CHECK(v >= 0.0);
  RootDatum rd2(2, Case::II);
  Mult m2{2, 2, 1};
  Vec Y{0.7, 1.9};
  double base = delta_density(rd2, m2, Y);
  for (const WeylElement &w : rd2.weyl())
    CHECK(delta_density(rd2, m2, rd2.act(w, Y)) ==
          doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("inner product normalization and stability") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 256};
  SampledSection one;
  one.rd = &rd;
  one.geom = kCp1;
  one.l = 0;
  one.grid = grid;
  one.values.assign(grid.points(), cplx(1.0));
  CHECK(std::abs(inner_product(one, one) - 1.0) < 1e-14);

  // refinement stability for a trig polynomial integrand
  auto section_for = [&](int N) {
    TorusGrid g{1, N};
    SampledSection s;
    s.rd = &rd;
    s.geom = kCp1;
    s.l = 0;
    s.grid = g;
    s.values.resize(g.points());
    for (size_t i = 0; i < g.points(); ++i) {
      double y = g.point(i)[0];
      s.values[i] = 0.3 + std::cos(2 * y) - 0.2 * std::cos(4 * y);
    }
    return s;
  };
  SampledSection a = section_for(256), b = section_for(512);
  double va = inner_product(a, a).real();
  double vb = inner_product(b, b).real();
  CHECK(std::abs(va - vb) < 1e-6 * (1 + std::abs(vb)));

  SampledSection other = section_for(512);
  other.l = 1;
  CHECK_THROWS_AS(inner_product(b, other), UsageError);
}

TEST_CASE("bump sections") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  SampledSection f = make_bump(rd, kCp1, 1, 0.4, grid);
  CHECK(f.support_radius == 0.4);
  CHECK(f.values[0].real() == doctest::Approx(2.0 * std::exp(-1.0)));
  for (size_t i = 0; i < grid.points(); ++i) {
    double y = grid.point(i)[0];
    double w = y > kPi ? y - 2 * kPi : y;
    if (std::abs(w) >= 0.4) CHECK(f.values[i] == cplx(0.0));
  }
  CHECK_THROWS_AS(make_bump(rd, kCp1, 1, 1.7, grid), DomainError);
  RootDatum rd2(2, Case::II);
  TorusGrid g2{2, 64};
  SampledSection f2 = make_bump(rd2, Mult{2, 2, 1}, 1, 0.5, g2);
  CHECK(f2.values[0].real() == doctest::Approx(8.0 * std::exp(-1.0)));
}

TEST_CASE("empirical dimensions on the model space") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  CHECK(std::abs(empirical_dimension(rd, kCp1, 0, IVec{2}, grid) - 3.0) <
        1e-3);
  CHECK(std::abs(empirical_dimension(rd, kCp1, 1, IVec{3}, grid) - 4.0) <
        1e-3);
  CHECK(std::abs(empirical_dimension(rd, kCp1, 0, IVec{0}, grid) - 1.0) <
        1e-9);
  // positive and monotone along the ray
  double prev = 0;
  for (int mu = 0; mu <= 10; mu += 2) {
    double d = empirical_dimension(rd, kCp1, 0, IVec{mu}, grid);
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("forward transform picks out coefficients") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  int l = 1;
  IVec nu{3};
  SampledSection psi = sample_psi(rd, kCp1, l, nu, grid);
  CoefficientVector cv = forward_transform(psi, 7);
  double d = empirical_dimension(rd, kCp1, l, nu, grid);
  for (const auto &[mu, c] : cv) {
    if (mu == nu) CHECK(std::abs(c - 1.0 / d) < 1e-6);
    else CHECK(std::abs(c) < 1e-6);
  }
  // linearity
  SampledSection psi5 = sample_psi(rd, kCp1, l, IVec{5}, grid);
  SampledSection mix = psi;
  for (size_t i = 0; i < mix.values.size(); ++i)
    mix.values[i] = 2.0 * psi.values[i] + cplx(0, 1) * psi5.values[i];
  mix.fine_factor = 0;
  CoefficientVector cm = forward_transform(mix, 7);
  CoefficientVector c5 = forward_transform(psi5, 7);
  for (const auto &[mu, c] : cm) {
    cplx want = 2.0 * cv.at(mu) + cplx(0, 1) * c5.at(mu);
    CHECK(std::abs(c - want) < 1e-12);
  }
}

TEST_CASE("band-limited upsampling is exact on trig polynomials") {
  TorusGrid g{2, 16};
  CVec v(g.points());
  auto f = [](const Vec &y) {
    return cplx(0.7 + std::cos(2 * y[0]) * std::cos(y[1]) -
                    0.4 * std::sin(3 * y[1]),
                0.2 * std::sin(y[0] + 2 * y[1]));
  };
  for (size_t i = 0; i < g.points(); ++i) v[i] = f(g.point(i));
  CVec fine = trig_upsample(v, g, 4);
  TorusGrid gf{2, 64};
  REQUIRE(fine.size() == gf.points());
  double worst = 0;
  for (size_t i = 0; i < gf.points(); ++i)
    worst = std::max(worst, std::abs(fine[i] - f(gf.point(i))));
  CHECK(worst < 1e-12);
}

TEST_CASE("rank-2 spherical functions are orthogonal under the density") {
  RootDatum rd(2, Case::I);
  Mult geom{0, 1, 1};
  TorusGrid grid{2, 48};
  int l = 1;
  auto mus = enumerate_lambda_l(rd, l, 4);
  REQUIRE(mus.size() >= 2);
  for (size_t i = 0; i < mus.size(); ++i)
    for (size_t j = 0; j < mus.size(); ++j) {
      SampledSection a = sample_psi(rd, geom, l, mus[i].mu, grid);
      SampledSection b = sample_psi(rd, geom, l, mus[j].mu, grid);
      cplx ip = inner_product(a, b);
      if (i == j) CHECK(ip.real() > 1e-3);
      else CHECK(std::abs(ip) < 5e-3);  // dense-grid quadrature accuracy
    }
}

TEST_CASE("constant synthesis") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 128};
  CoefficientVector cv;
  cv[IVec{0}] = cplx(1.0);
  SampledSection f = synthesize(rd, kCp1, 0, cv, grid);
  for (const cplx &v : f.values) CHECK(std::abs(v - 1.0) < 1e-9);
}

TEST_CASE("roundtrip and Parseval") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  int l = 0;
  CoefficientVector cv;
  cv[IVec{0}] = cplx(0.4, -0.3);
  cv[IVec{2}] = cplx(-1.1, 0.2);
  cv[IVec{6}] = cplx(0.05, 0.7);
  SampledSection f = synthesize(rd, kCp1, l, cv, grid);
  CoefficientVector back = forward_transform(f, 6);
  for (const auto &[mu, c] : cv) CHECK(std::abs(back.at(mu) - c) < 1e-6);
  CHECK(std::abs(back.at(IVec{4})) < 1e-6);

  double norm2 = inner_product(f, f).real();
  double sum = 0;
  for (const auto &[mu, c] : cv)
    sum += empirical_dimension(rd, kCp1, l, mu, grid) * std::norm(c);
  CHECK(std::abs(norm2 - sum) < 1e-6 * (1 + sum));
}

TEST_CASE("extended transform equals the lattice transform") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  SampledSection f = make_bump(rd, kCp1, 1, 0.35, grid);
  CoefficientVector cv = forward_transform(f, 9);
  for (const auto &[mu, c] : cv) {
    CVec lam{cplx(double(mu[0]), 0.0)};
    cplx via_poly = extended_transform(f, lam, Backend::Poly);
    cplx via_rank1 = extended_transform(f, lam, Backend::Rank1);
    CHECK(std::abs(via_poly - c) < 1e-10);
    CHECK(std::abs(via_rank1 - c) < 1e-8 * (1 + std::abs(c)));
  }
  CHECK_THROWS_AS(extended_transform(f, CVec{cplx(0.5, 0.0)}, Backend::Poly),
                  DomainError);
  CHECK_THROWS_AS(extended_transform(f, CVec{cplx(1.0)}, Backend::Series),
                  UsageError);
}

TEST_CASE("exponential type of bumps") {
  RootDatum rd(1, Case::I);
  TorusGrid grid{1, 512};
  SampledSection f = make_bump(rd, kCp1, 1, 0.3, grid);
  // the slope approaches the support radius from below like sqrt(r/2t),
  // so the fit window sits at large t
  TypeFit fit = fit_exponential_type(f, 200, 500, 13, Backend::Rank1);
  CHECK(fit.type > 0.85 * 0.3);
  CHECK(fit.type < 1.15 * 0.3);

  SampledSection zero = f;
  zero.values.assign(zero.values.size(), cplx(0.0));
  zero.fine_factor = 0;
  CHECK_THROWS_AS(fit_exponential_type(zero, 20, 50, 5, Backend::Rank1),
                  DomainError);
}
