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

#include "gauss2f1.hpp"

#include <cmath>

#include "gammafn.hpp"

namespace heckop {

namespace {

constexpr double kSeriesRadius = 0.85;
constexpr int kMaxTerms = 4000;

bool near_int(cplx z, double tol = 1e-11) {
  return std::abs(z.imag()) < tol &&
         std::abs(z.real() - std::round(z.real())) < tol;
}

bool is_nonpos_int(cplx z, double tol = 1e-11) {
  return near_int(z, tol) && z.real() < 0.5;
}

/* Plain power series; caller guarantees convergence. */
cplx series_2f1(cplx a, cplx b, cplx c, cplx z, double tol) {
  if (is_nonpos_int(c) && !(is_nonpos_int(a) && a.real() >= c.real()) &&
      !(is_nonpos_int(b) && b.real() >= c.real()))
    throw PoleError("2F1: c is a nonpositive integer");
  cplx term = 1.0, sum = 1.0;
  int quiet = 0;
  long terminate = -1;
  if (is_nonpos_int(a)) terminate = std::lround(-a.real());
  if (is_nonpos_int(b)) {
    long tb = std::lround(-b.real());
    if (terminate < 0 || tb < terminate) terminate = tb;
  }
  for (int k = 0;; ++k) {
    if (terminate >= 0 && k >= terminate) return sum;
    if (k >= kMaxTerms)
      throw NoConvergence("2F1 series did not meet tolerance");
    cplx num = (a + double(k)) * (b + double(k));
    cplx den = (c + double(k)) * double(k + 1);
    if (std::abs(den) < 1e-300) throw PoleError("2F1: series denominator 0");
    term *= num / den * z;
    sum += term;
    if (terminate < 0) {
      if (std::abs(term) < tol * (1.0 + std::abs(sum))) {
        if (++quiet >= 2) return sum;
      } else {
        quiet = 0;
      }
    }
  }
}

cplx core_2f1(cplx a, cplx b, cplx c, cplx z, double tol, int depth,
              int *degenerate);

/* Analytic continuation along a straight path by Taylor steps on the
 * hypergeometric equation z(1-z) w'' + (c - (a+b+1) z) w' - a b w = 0.
 * Works anywhere off the cut; used for the lens |z| ~ |1-z| ~ 1 and for
 * integer-degenerate connection parameters. */
cplx ode_march(cplx a, cplx b, cplx c, cplx z, double tol) {
  // start inside the series disk along the target direction
  double az = std::abs(z);
  cplx z0 = az < 0.6 ? cplx(0.0) : 0.6 / az * z;
  cplx w = series_2f1(a, b, c, z0, tol * 0.1);
  cplx w1 = a * b / c *
            series_2f1(a + 1.0, b + 1.0, c + 1.0, z0, tol * 0.1);

  const cplx Qp = -(a + b + 1.0);
  for (int step = 0; step < 400; ++step) {
    cplx diff = z - z0;
    double dist = std::abs(diff);
    if (dist < 1e-15) return w;
    double sing = std::min(std::abs(z0), std::abs(z0 - 1.0));
    if (sing < 1e-8)
      throw NoConvergence("2F1 continuation ran into a singular point");
    double h_mag = std::min(0.35 * sing, dist);
    cplx h = diff / dist * h_mag;

    // Taylor coefficients d_k = w^{(k)}(z0) via the differentiated equation
    cplx P = z0 * (1.0 - z0), Pp = 1.0 - 2.0 * z0;
    cplx Q = c + Qp * z0;
    const int kmax = 64;
    cplx dk0 = w, dk1 = w1;
    cplx sum_w = w, sum_w1 = w1;
    cplx hpow = 1.0;
    double fact = 1.0;
    cplx prev_term = 1e300;
    for (int k = 0; k < kmax; ++k) {
      // w^{(k+2)} = -[(k Pp + Q) w^{(k+1)} + (-k(k-1) + k Qp - a b) w^{(k)}]/P
      cplx dk2 = -((double(k) * Pp + Q) * dk1 +
                   (-double(k) * (k - 1.0) + double(k) * Qp - a * b) * dk0) /
                 P;
      hpow *= h;
      fact *= (k + 1.0);
      cplx term_w = dk1 * hpow / fact;
      sum_w += term_w;
      sum_w1 += dk2 * hpow / fact;
      if (std::abs(term_w) < 1e-3 * tol * (1.0 + std::abs(sum_w)) &&
          std::abs(prev_term) < 1e-3 * tol * (1.0 + std::abs(sum_w)))
        break;
      prev_term = term_w;
      dk0 = dk1;
      dk1 = dk2;
    }
    w = sum_w;
    w1 = sum_w1;
    z0 += h;
  }
  throw NoConvergence("2F1 continuation did not reach the target");
}

/* Two-term connection: F(z) = g1 * p1(z) * F(s1; w) + g2 * p2(z) * F(s2; w)
 * written out per transformation below. */
cplx gamma_ratio(cplx n1, cplx n2, cplx d1, cplx d2) {
  if (near_gamma_pole(d1) || near_gamma_pole(d2)) return 0.0;  // 1/Gamma -> 0
  if (near_gamma_pole(n1) || near_gamma_pole(n2))
    throw PoleError("2F1: connection coefficient pole");
  return std::exp(lgamma_c(n1) + lgamma_c(n2) - lgamma_c(d1) - lgamma_c(d2));
}

cplx connect_1mz(cplx a, cplx b, cplx c, cplx z, double tol, int depth,
                 int *degenerate) {
  cplx w = 1.0 - z;
  cplx f1 = gamma_ratio(c, c - a - b, c - a, c - b);
  cplx f2 = gamma_ratio(c, a + b - c, a, b);
  cplx t1 = f1 == 0.0 ? 0.0
                      : f1 * core_2f1(a, b, a + b - c + 1.0, w, tol, depth + 1,
                                      degenerate);
  cplx t2 = f2 == 0.0 ? 0.0
                      : f2 * std::pow(w, c - a - b) *
                            core_2f1(c - a, c - b, c - a - b + 1.0, w, tol,
                                     depth + 1, degenerate);
  return t1 + t2;
}

cplx connect_inv(cplx a, cplx b, cplx c, cplx z, double tol, int depth,
                 int *degenerate) {
  cplx w = 1.0 / z;
  cplx f1 = gamma_ratio(c, b - a, b, c - a);
  cplx f2 = gamma_ratio(c, a - b, a, c - b);
  cplx t1 = f1 == 0.0 ? 0.0
                      : f1 * std::pow(-z, -a) *
                            core_2f1(a, a - c + 1.0, a - b + 1.0, w, tol,
                                     depth + 1, degenerate);
  cplx t2 = f2 == 0.0 ? 0.0
                      : f2 * std::pow(-z, -b) *
                            core_2f1(b, b - c + 1.0, b - a + 1.0, w, tol,
                                     depth + 1, degenerate);
  return t1 + t2;
}

cplx core_2f1(cplx a, cplx b, cplx c, cplx z, double tol, int depth,
              int *degenerate) {
  if (depth > 3) throw NoConvergence("2F1: transformation recursion too deep");
  if (std::abs(z) < 1e-14) return 1.0;
  if (is_nonpos_int(a) || is_nonpos_int(b)) return series_2f1(a, b, c, z, tol);
  if (std::abs(z) <= kSeriesRadius) return series_2f1(a, b, c, z, tol);

  cplx w_pfaff = z / (z - 1.0);
  if (std::abs(w_pfaff) <= kSeriesRadius)
    return std::pow(1.0 - z, -a) *
           series_2f1(a, c - b, c, w_pfaff, tol);

  if (std::abs(1.0 - z) <= kSeriesRadius) {
    if (near_int(c - a - b, 1e-9)) {
      // logarithmic case: continue the solution along a path instead of
      // assembling nearly cancelling connection terms
      if (degenerate) *degenerate = 1;
      return ode_march(a, b, c, z, tol);
    }
    return connect_1mz(a, b, c, z, tol, depth, degenerate);
  }

  if (std::abs(z) >= 1.0 / kSeriesRadius) {
    if (near_int(a - b, 1e-9)) {
      if (degenerate) *degenerate = 1;
      return ode_march(a, b, c, z, tol);
    }
    return connect_inv(a, b, c, z, tol, depth, degenerate);
  }

  // remaining lens around |z| ~ |1 - z| ~ 1
  return ode_march(a, b, c, z, tol);
}

}  // namespace

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, double tol, int *degenerate) {
  if (degenerate) *degenerate = 0;
  if (is_nonpos_int(c) && !is_nonpos_int(a) && !is_nonpos_int(b))
    throw PoleError("2F1: c is a nonpositive integer");
  // terminating cases are polynomials, valid on the whole plane
  if (is_nonpos_int(a) || is_nonpos_int(b))
    return series_2f1(a, b, c, z, tol);
  if (std::abs(z.imag()) < 1e-14 && z.real() >= 1.0)
    throw DomainError("2F1: argument on the cut [1, inf)");
  return core_2f1(a, b, c, z, tol, 0, degenerate);
}

}  // namespace heckop
