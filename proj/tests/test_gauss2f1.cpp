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

#include "core/gammafn.hpp"
#include "core/gauss2f1.hpp"
#include "doctest.h"

using namespace heckop;

TEST_CASE("value at the origin") {
  CHECK(std::abs(gauss_2f1(0.3, 1.7, 2.1, 0.0) - 1.0) < 1e-15);
}

TEST_CASE("logarithm closed form") {
  // 2F1(1,1;2;z) = -log(1-z)/z
  for (double z : {0.5, -0.7, 0.2}) {
    cplx got = gauss_2f1(1.0, 1.0, 2.0, z);
    cplx want = -std::log(cplx(1.0 - z)) / z;
    CHECK(std::abs(got - want) < 1e-11 * std::abs(want));
  }
  cplx at_half = gauss_2f1(1.0, 1.0, 2.0, 0.5);
  CHECK(at_half.real() == doctest::Approx(1.3862943611).epsilon(1e-9));
}

TEST_CASE("binomial closed form across transformations") {
  // 2F1(a,b;b;z) = (1-z)^{-a} for any b
  cplx a(0.37, 0.21);
  for (cplx z : {cplx(0.7, 0.0), cplx(0.95, 0.02), cplx(-4.0, 0.5),
                 cplx(0.5, 0.9)}) {
    cplx got = gauss_2f1(a, 1.3, 1.3, z);
    cplx want = std::pow(1.0 - z, -a);
    CHECK(std::abs(got - want) < 1e-9 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("series route agrees with the 1-z connection route") {
  // z = 0.7 is reachable by the direct series; 1-z = 0.3 by the connection
  cplx a = 0.3, b = 0.7, c = 1.9;  // c-a-b = 0.9, nondegenerate
  cplx direct = gauss_2f1(a, b, c, 0.7);
  // connection formula assembled by hand
  cplx f1 = std::exp(lgamma_c(c) + lgamma_c(c - a - b) - lgamma_c(c - a) -
                     lgamma_c(c - b));
  cplx f2 = std::exp(lgamma_c(c) + lgamma_c(a + b - c) - lgamma_c(a) -
                     lgamma_c(b));
  cplx w = 0.3;
  cplx via = f1 * gauss_2f1(a, b, a + b - c + 1.0, w) +
             f2 * std::pow(w, c - a - b) *
                 gauss_2f1(c - a, c - b, c - a - b + 1.0, w);
  CHECK(std::abs(direct - via) < 1e-10 * (1.0 + std::abs(direct)));
}

TEST_CASE("terminating series is a polynomial valid everywhere") {
  // b = -3: cubic in z, compare against Horner evaluation
  cplx a = 1.2, c = 0.8;
  auto poly = [&](cplx z) {
    cplx sum = 1.0, term = 1.0;
    for (int k = 0; k < 3; ++k) {
      term *= (a + double(k)) * (-3.0 + double(k)) /
              ((c + double(k)) * double(k + 1));
      sum += term * std::pow(z, k + 1);
    }
    return sum;
  };
  for (cplx z : {cplx(0.5, 0), cplx(3.0, 0), cplx(0.9, 0.4), cplx(-9, 1)}) {
    cplx got = gauss_2f1(a, -3.0, c, z);
    CHECK(std::abs(got - poly(z)) < 1e-10 * (1.0 + std::abs(poly(z))));
  }
}

TEST_CASE("degenerate integer c-a-b near the unit point") {
  // 2F1(1,1;3;z) = 2((1-z)log(1-z) + z)/z^2, c-a-b = 1
  double z = 0.93;
  cplx want = 2.0 * ((1.0 - z) * std::log(cplx(1.0 - z)) + z) / (z * z);
  int degenerate = 0;
  cplx got = gauss_2f1(1.0, 1.0, 3.0, z, 1e-12, &degenerate);
  CHECK(degenerate == 1);
  CHECK(std::abs(got - want) < 1e-9 * std::abs(want));
}

TEST_CASE("conjugation symmetry") {
  cplx a(0.9, 0.4), b(1.1, -0.2), c(2.3, 0.0), z(0.4, 0.3);
  cplx v = gauss_2f1(a, b, c, z);
  cplx vc = gauss_2f1(std::conj(a), std::conj(b), std::conj(c), std::conj(z));
  CHECK(std::abs(vc - std::conj(v)) < 1e-11 * (1 + std::abs(v)));
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.7, -2.0, 0.3), PoleError);
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.7, 1.4, 1.3), DomainError);  // on the cut
}
