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

#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "quadrature.hpp"
#include "rank1.hpp"
#include "transform.hpp"

namespace heckop {

double orbit_sum_eval(const RootDatum &rd, const IVec &nu, const Vec &Y) {
  double s = 0;
  for (const WeylElement &w : rd.weyl()) {
    double phase = 0;
    for (int j = 0; j < rd.rank(); ++j)
      phase += double(w.signs[j]) * nu[j] * Y[w.perm[j]];
    s += std::cos(phase);
  }
  return s;
}

cplx orbit_sum_eval_c(const RootDatum &rd, const IVec &nu, const Vec &X,
                      const Vec &Y) {
  cplx s = 0;
  for (const WeylElement &w : rd.weyl()) {
    cplx expo = 0;
    for (int j = 0; j < rd.rank(); ++j)
      expo += double(w.signs[j]) * double(nu[j]) * cplx(X[w.perm[j]], Y[w.perm[j]]);
    s += std::exp(expo);
  }
  return s;
}

std::vector<IVec> dominated_weights(const RootDatum &rd, const IVec &mu) {
  int n = rd.rank();
  // tail sums of mu - nu must stay nonnegative
  std::vector<IVec> out;
  IVec nu(n, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      IVec diff(n);
      for (int t = 0; t < n; ++t) diff[t] = mu[t] - nu[t];
      int tail = 0;
      for (int t = n - 1; t >= 0; --t) {
        tail += diff[t];
        if (tail < 0) return;
      }
      out.push_back(nu);
      return;
    }
    // nu ascending and the last tail sum forces nu_j <= mu_n
    int lo = j == 0 ? 0 : nu[j - 1];
    for (int v = lo; v <= mu[n - 1]; ++v) {
      nu[j] = v;
      rec(j + 1);
    }
  };
  rec(0);
  // height, then reversed-coordinate lex: a linear extension of the
  // dominance order (the first differing coordinate from the top of a
  // positive-cone difference is nonnegative)
  std::sort(out.begin(), out.end(), [](const IVec &a, const IVec &b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    if (ha != hb) return ha < hb;
    for (int j = (int)a.size() - 1; j >= 0; --j)
      if (a[j] != b[j]) return a[j] < b[j];
    return false;
  });
  return out;
}

double JacobiPoly::eval(const RootDatum &rd, const Vec &Y) const {
  double s = 0;
  for (const auto &[nu, c] : coeffs) s += c * orbit_sum_eval(rd, nu, Y);
  return s;
}

cplx JacobiPoly::eval_c(const RootDatum &rd, const Vec &X,
                        const Vec &Y) const {
  cplx s = 0;
  for (const auto &[nu, c] : coeffs) s += c * orbit_sum_eval_c(rd, nu, X, Y);
  return s;
}

namespace {

std::string poly_key(const RootDatum &rd, const Mult &m, const IVec &mu,
                     int nodes) {
  std::ostringstream os;
  os << rd.rank() << '|' << int(rd.space_case()) << '|' << m.s << ',' << m.m
     << ',' << m.l << '|' << nodes << '|';
  for (int v : mu) os << v << ',';
  return os.str();
}

/* condition number of a small symmetric positive matrix by cyclic Jacobi */
double sym_condition(std::vector<Vec> A) {
  int n = (int)A.size();
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A[p][q] * A[p][q];
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(A[p][q]) < 1e-300) continue;
        double theta = 0.5 * (A[q][q] - A[p][p]) / A[p][q];
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
      }
  }
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, A[i][i]);
    hi = std::max(hi, A[i][i]);
  }
  if (lo <= 0) return 1e300;
  return hi / lo;
}

}  // namespace

const JacobiPoly &jacobi_poly(const RootDatum &rd, const Mult &m,
                              const IVec &mu, int nodes_per_panel,
                              double cond_limit) {
  static std::mutex mtx;
  static std::map<std::string, JacobiPoly> cache;
  std::string key = poly_key(rd, m, mu, nodes_per_panel);
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  for (int j = 0; j < rd.rank(); ++j) {
    if (mu[j] < 0 || (j > 0 && mu[j] < mu[j - 1]))
      throw UsageError("jacobi_poly: top weight must be dominant");
  }

  auto basis = dominated_weights(rd, mu);
  int nb = (int)basis.size();
  TorusQuad quad(rd.rank(), nodes_per_panel);

  // Gram matrix of orbit sums under delta_m
  std::vector<Vec> G(nb, Vec(nb, 0.0));
  for (int a = 0; a < nb; ++a)
    for (int b = a; b < nb; ++b) {
      double v = quad.integrate_real([&](const Vec &Y) {
        return orbit_sum_eval(rd, basis[a], Y) *
               orbit_sum_eval(rd, basis[b], Y) * delta_density(rd, m, Y);
      });
      G[a][b] = G[b][a] = v;
    }

  // condition of the diagonally normalized Gram
  std::vector<Vec> Gn(nb, Vec(nb, 0.0));
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      Gn[a][b] = G[a][b] / std::sqrt(G[a][a] * G[b][b]);
  double cond = sym_condition(Gn);
  if (cond > cond_limit)
    throw IllConditioned("jacobi_poly Gram condition " +
                         format_double(cond) + " exceeds limit");

  // Gram-Schmidt in coefficient space; row a of C holds P_a over the basis
  std::vector<Vec> C(nb, Vec(nb, 0.0));
  Vec norms(nb, 0.0);
  for (int a = 0; a < nb; ++a) {
    C[a][a] = 1.0;
    for (int b = 0; b < a; ++b) {
      // <m_a, P_b> / <P_b, P_b>
      double num = 0;
      for (int k = 0; k <= b; ++k) num += C[b][k] * G[a][k];
      double coef = num / norms[b];
      for (int k = 0; k <= b; ++k) C[a][k] -= coef * C[b][k];
    }
    double nn = 0;
    for (int k = 0; k <= a; ++k)
      for (int k2 = 0; k2 <= a; ++k2) nn += C[a][k] * C[a][k2] * G[k][k2];
    norms[a] = nn;
    if (!(nn > 0))
      throw IllConditioned("jacobi_poly lost positivity in Gram-Schmidt");
  }

  JacobiPoly poly;
  poly.mu = mu;
  poly.m = m;
  poly.gram_condition = cond;
  int top = nb - 1;  // basis sorted by height/lex; mu is the last element
  if (basis[top] != mu) throw UsageError("jacobi_poly: basis ordering bug");
  double cmax = 0;
  for (int k = 0; k < nb; ++k) cmax = std::max(cmax, std::abs(C[top][k]));
  for (int k = 0; k < nb; ++k)
    if (std::abs(C[top][k]) > 1e-12 * cmax)
      poly.coeffs.push_back({basis[k], C[top][k]});
  poly.value0 = poly.eval(rd, Vec(rd.rank(), 0.0));

  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(key, std::move(poly)).first->second;
}

/* The twist exponent per short carrier root is |l|: conjugating the radial
 * operator by prod cosh(alpha(Z))^c shifts the multiplicities by
 * (-2c, 0, +2c), so c = |l| realizes m_+(l), and on SU(2)/S(U1 x U1) the
 * bundle-1 spherical function is cos(y) * (invariant polynomial). With this
 * exponent eta^2 delta_m = 4^{-n|l|} delta_{m_+(l)} exactly, which is what
 * the transform normalization relies on. */
cplx eta_eval(const RootDatum &rd, int l, int sign, const Vec &X,
              const Vec &Y) {
  int e = std::abs(l);
  cplx prod = 1.0;
  for (const Root &r : rd.carrier_short()) {
    cplx az = 0;
    for (int j = 0; j < rd.rank(); ++j)
      az += double(r.coords[j]) * cplx(X[j], Y[j]);
    cplx ch = std::cosh(az);
    if (sign < 0 && std::abs(ch) < 1e-12)
      throw PoleError("eta^- pole: cosh(alpha(Z)) = 0");
    cplx p = 1.0;
    for (int k = 0; k < e; ++k) p *= ch;
    prod *= sign >= 0 ? p : 1.0 / p;
  }
  return prod;
}

double eta_torus(const RootDatum &rd, int l, const Vec &Y) {
  int e = std::abs(l);
  double prod = 1.0;
  for (int j = 0; j < rd.rank(); ++j) {
    double c = std::cos(Y[j]);
    double p = 1.0;
    for (int k = 0; k < e; ++k) p *= c;
    prod *= p;
  }
  return prod;
}

cplx phi_spherical(const RootDatum &rd, const Mult &geom, int l,
                   const CVec &lambda, const Vec &X, const Vec &Y,
                   int variant, Backend backend) {
  Mult mv = shift_mult(geom, l, variant);
  switch (backend) {
    case Backend::Series: {
      EvalReport r = f_eval(rd, mv, lambda, X, Y);
      return eta_eval(rd, l, variant, X, Y) * r.value;
    }
    case Backend::Rank1: {
      if (rd.rank() != 1)
        throw UsageError("rank1 backend needs a rank-1 space");
      cplx F = f_rank1(mv, lambda[0], X[0], Y[0]);
      return eta_eval(rd, l, variant, X, Y) * F;
    }
    case Backend::Poly: {
      Vec rho_g = rd.rho(geom);
      IVec mu(rd.rank());
      for (int j = 0; j < rd.rank(); ++j) {
        cplx muj = lambda[j] - rho_g[j];
        double r = std::round(muj.real());
        if (std::abs(muj.imag()) > 1e-9 || std::abs(muj.real() - r) > 1e-9)
          throw DomainError("poly backend needs lambda = mu + rho(m)");
        mu[j] = (int)r;
      }
      if (!is_in_lambda_l(rd, mu, l))
        throw DomainError("poly backend: mu outside the l-lattice");
      IVec nu(rd.rank());
      for (int j = 0; j < rd.rank(); ++j) nu[j] = mu[j] - std::abs(l);
      const JacobiPoly &P = jacobi_poly(rd, shift_mult(geom, l, +1), nu);
      return eta_eval(rd, l, +1, X, Y) * P.eval_c(rd, X, Y) / P.value0;
    }
  }
  throw UsageError("unreachable backend");
}

cplx psi_spherical(const RootDatum &rd, const Mult &geom, int l,
                   const IVec &mu, const Vec &Y) {
  if (!is_in_lambda_l(rd, mu, l))
    throw DomainError("psi: mu is not in the l-th weight lattice");
  Vec zero(rd.rank(), 0.0);
  return eta_eval(rd, l, +1, zero, Y) * psi_scalar(rd, geom, l, mu, Y);
}

double psi_scalar(const RootDatum &rd, const Mult &geom, int l,
                  const IVec &mu, const Vec &Y) {
  if (!is_in_lambda_l(rd, mu, l))
    throw DomainError("psi: mu is not in the l-th weight lattice");
  IVec nu(rd.rank());
  for (int j = 0; j < rd.rank(); ++j) nu[j] = mu[j] - std::abs(l);
  const JacobiPoly &P = jacobi_poly(rd, shift_mult(geom, l, +1), nu);
  return P.eval(rd, Y) / P.value0;
}

}  // namespace heckop
