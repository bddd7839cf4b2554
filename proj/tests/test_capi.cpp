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

/* Exercises the shared-library C surface end to end. */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "heckop.h"
#include "json.hpp"

TEST_CASE("space lifecycle and queries") {
  heckop_space *sp = heckop_space_open("AIII:p=1,q=2", nullptr);
  REQUIRE(sp != nullptr);
  CHECK(heckop_space_rank(sp) == 1);
  CHECK(heckop_space_case(sp) == 2);
  CHECK(heckop_space_weyl_order(sp) == 2);
  double m[3];
  heckop_space_multiplicity(sp, m);
  CHECK(m[0] == 2.0);
  CHECK(m[1] == 2.0);
  CHECK(m[2] == 1.0);

  int count = heckop_space_positive_roots(sp, nullptr, nullptr, nullptr, 0);
  CHECK(count == 2);  // eps and 2 eps at rank 1, Case II
  std::vector<int> coords(count), orbit(count);
  std::vector<double> mult(count);
  heckop_space_positive_roots(sp, coords.data(), orbit.data(), mult.data(),
                              count);

  double rho[1];
  CHECK(heckop_space_rho(sp, HECKOP_RHO, nullptr, rho) == HECKOP_OK);
  CHECK(rho[0] == doctest::Approx(2.0));  // m_s/2 + m_l

  double shifted[3];
  heckop_mult_shift(m, 1, +1, shifted);
  CHECK(shifted[0] == 0.0);
  CHECK(shifted[2] == 3.0);
  CHECK(heckop_mult_in_m_ge(sp, shifted) == 1);
  double bad[3] = {4, 2, -1};
  CHECK(heckop_mult_in_m_ge(sp, bad) == 0);

  heckop_space_close(sp);
}

TEST_CASE("unknown key reports an error") {
  heckop_space *sp = heckop_space_open("XYZ", nullptr);
  CHECK(sp == nullptr);
  CHECK(std::strlen(heckop_last_error()) > 0);
  sp = heckop_space_open_explicit(2, HECKOP_CASE_I, 1.0, 2.0, 1.0);
  CHECK(sp == nullptr);  // Case I needs m_s = 0
}

TEST_CASE("lattice enumeration as JSON") {
  heckop_space *sp = heckop_space_open("AIII:p=1,q=2", nullptr);
  char *raw = nullptr;
  REQUIRE(heckop_lattice_enumerate(sp, 1, 5, &raw) == HECKOP_OK);
  auto j = nlohmann::json::parse(raw);
  heckop_string_free(raw);
  REQUIRE(j["points"].size() == 3);
  CHECK(j["points"][0]["mu"][0] == 1);
  CHECK(j["points"][1]["mu"][0] == 3);
  CHECK(j["points"][0]["mu0"] == 1);  // Case II carries l
  int mu[1] = {3};
  CHECK(heckop_lattice_contains(sp, mu, 1) == 1);
  int bad[1] = {2};
  CHECK(heckop_lattice_contains(sp, bad, 1) == 0);
  heckop_space_close(sp);
}

TEST_CASE("pointwise evaluations through the C surface") {
  heckop_space *sp = heckop_space_open("AIII:p=1,q=2", nullptr);
  double m[3];
  heckop_space_multiplicity(sp, m);

  double lre = 1.4, lim = 0.6, X = 0.55, Y = 0.3;
  double out_series[2], out_rank1[2];
  REQUIRE(heckop_eval_f(sp, m, &lre, &lim, &X, &Y, 1e-12, out_series, nullptr,
                        nullptr) == HECKOP_OK);
  REQUIRE(heckop_eval_f_rank1(sp, m, lre, lim, X, Y, out_rank1) == HECKOP_OK);
  double diff = std::hypot(out_series[0] - out_rank1[0],
                           out_series[1] - out_rank1[1]);
  CHECK(diff < 1e-8 * (1 + std::hypot(out_rank1[0], out_rank1[1])));

  double c[2];
  REQUIRE(heckop_c_normalized(sp, m, &lre, &lim, c) == HECKOP_OK);
  double lre_n = -lre, lim_n = -lim, cn[2];
  REQUIRE(heckop_c_normalized(sp, m, &lre_n, &lim_n, cn) == HECKOP_OK);
  CHECK(std::abs(c[0] + cn[0] - 1.0) < 1e-10);
  CHECK(std::abs(c[1] + cn[1]) < 1e-10);

  double zero = 0.0, eta[2];
  double y_eta = 1.0471975511965976;  // pi/3
  REQUIRE(heckop_eval_eta(sp, 1, +1, &zero, &y_eta, eta) == HECKOP_OK);
  CHECK(eta[0] == doctest::Approx(0.5).epsilon(1e-10));

  int mu[1] = {3};
  double psi0[2];
  double y0 = 0.0;
  REQUIRE(heckop_eval_psi(sp, 1, mu, &y0, psi0) == HECKOP_OK);
  CHECK(psi0[0] == 1.0);
  CHECK(psi0[1] == 0.0);
  int mu_bad[1] = {2};
  CHECK(heckop_eval_psi(sp, 1, mu_bad, &y0, psi0) == HECKOP_E_DOMAIN);

  double phi[2];
  double lre2 = 5.0, lim2 = 0.0;  // mu + rho = 3 + 2
  REQUIRE(heckop_eval_phi(sp, 1, &lre2, &lim2, &X, &Y, +1, "poly", phi) ==
          HECKOP_OK);
  double phi_s[2];
  REQUIRE(heckop_eval_phi(sp, 1, &lre2, &lim2, &X, &Y, +1, "series", phi_s) ==
          HECKOP_OK);
  CHECK(std::hypot(phi[0] - phi_s[0], phi[1] - phi_s[1]) <
        1e-5 * (1 + std::hypot(phi[0], phi[1])));

  double bound;
  REQUIRE(heckop_estimate_bound(sp, m, &lre, &lim, &X, &Y, 0.3, &bound) ==
          HECKOP_OK);
  CHECK(bound > 0);
  double dens;
  double yq = 0.785398163397448;  // pi/4
  REQUIRE(heckop_delta_density(sp, m, &yq, &dens) == HECKOP_OK);
  heckop_space_close(sp);
}

TEST_CASE("sections and the transform through the C surface") {
  heckop_space *sp = heckop_space_open("AIII:p=1,q=1", nullptr);
  heckop_section *bump = heckop_section_bump(sp, 1, 256, 0.4);
  REQUIRE(bump != nullptr);
  CHECK(heckop_section_grid_size(bump) == 256);
  CHECK(heckop_section_points(bump) == 256);

  double ip[2];
  REQUIRE(heckop_inner_product(bump, bump, ip) == HECKOP_OK);
  CHECK(ip[0] > 0);

  char *coeffs = nullptr;
  REQUIRE(heckop_forward_transform(bump, 9, &coeffs) == HECKOP_OK);
  auto j = nlohmann::json::parse(coeffs);
  CHECK(j["entries"].size() == 5);  // heights 1,3,5,7,9

  heckop_section *back = heckop_synthesize(sp, 1, 256, coeffs);
  heckop_string_free(coeffs);
  REQUIRE(back != nullptr);

  double d;
  int mu[1] = {3};
  REQUIRE(heckop_empirical_dimension(sp, 1, mu, 256, &d) == HECKOP_OK);
  CHECK(std::abs(d - 4.0) < 1e-2);

  double lre = 3.0, lim = 0.0, ext[2];
  REQUIRE(heckop_extended_transform(bump, &lre, &lim, "rank1", ext) ==
          HECKOP_OK);

  double type = 0, resid = 0;
  REQUIRE(heckop_fit_exponential_type(bump, 200, 500, 11, "rank1", &type,
                                      &resid) == HECKOP_OK);
  CHECK(type > 0.34);
  CHECK(type < 0.46);

  heckop_section_close(back);
  heckop_section_close(bump);
  heckop_space_close(sp);
}

TEST_CASE("verification entry point") {
  char *report = nullptr;
  heckop_status st = heckop_verify("lattice", "{\"seed\":7}", &report);
  REQUIRE(report != nullptr);
  CHECK(st == HECKOP_OK);
  auto j = nlohmann::json::parse(report);
  CHECK(j["suites"].size() == 1);
  CHECK(j["summary"]["fail"] == 0);
  heckop_string_free(report);
  CHECK(heckop_verify("no-such-suite", nullptr, &report) == HECKOP_E_USAGE);
}
