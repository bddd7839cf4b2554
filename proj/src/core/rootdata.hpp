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

#include <array>

#include "common.hpp"

namespace heckop {

enum class Case : int { I = 1, II = 2 };
enum class Orbit : int { Short = 0, Medium = 1, Long = 2 };
enum class RhoMode : int { Rho = 0, RhoTilde = 1, RhoS = 2 };

struct Root {
  IVec coords;  // epsilon-basis, entries in {-1,0,1,2}
  Orbit orbit;
};

/* One multiplicity value per W-orbit. */
struct Mult {
  double s = 0, m = 0, l = 0;
  double of(Orbit o) const {
    switch (o) {
      case Orbit::Short: return s;
      case Orbit::Medium: return m;
      default: return l;
    }
  }
  bool zero() const { return s == 0 && m == 0 && l == 0; }
  bool operator==(const Mult &o) const {
    return s == o.s && m == o.m && l == o.l;
  }
};

/* (m_s -+ 2|l|, m_m, m_l +- 2|l|); sign > 0 moves weight from the short to
 * the long orbit. */
Mult shift_mult(const Mult &m, int l, int sign);

/* Signed permutation: (w x)[perm[j]] = signs[j] * x[j]. */
struct WeylElement {
  IVec perm;
  IVec signs;
  bool operator==(const WeylElement &o) const {
    return perm == o.perm && signs == o.signs;
  }
};

class RootDatum {
 public:
  RootDatum(int rank, Case cs);

  int rank() const { return rank_; }
  Case space_case() const { return case_; }
  long long weyl_order() const { return weyl_order_; }

  /* Positive system of the actual root set (Case I omits the short orbit). */
  const std::vector<Root> &positive_roots() const { return positive_; }
  /* Full BC_n carrier; shifts can make the short multiplicity nonzero even
   * in Case I, so series/eta/lattice machinery always works over this set. */
  const std::vector<Root> &carrier_roots() const { return carrier_; }
  const std::vector<Root> &carrier_short() const { return carrier_short_; }
  /* Unmultiplicable carrier roots (medium + long). */
  const std::vector<Root> &unmultiplicable() const { return unmult_; }

  const std::vector<WeylElement> &weyl() const { return weyl_; }
  static WeylElement compose(const WeylElement &a, const WeylElement &b);
  WeylElement identity() const;

  template <typename T>
  std::vector<T> act(const WeylElement &w, const std::vector<T> &x) const {
    std::vector<T> out(x.size());
    for (int j = 0; j < rank_; ++j) out[w.perm[j]] = double(w.signs[j]) * x[j];
    return out;
  }

  Vec rho(const Mult &m, RhoMode mode = RhoMode::Rho) const;
  /* Closed form rho_j = m_s/2 + m_l + m_m (j-1) in the fixed chamber. */
  Vec rho_closed_form(const Mult &m) const;

  bool in_m_ge(const Mult &m) const;

  /* Simple roots of the full BC_n carrier system in the chamber
   * 0 < x_1 < ... < x_n: {eps_1, eps_j - eps_{j-1}}. */
  const std::vector<IVec> &carrier_simple() const { return carrier_simple_; }
  /* Simple roots of the unmultiplicable system: {2 eps_1, eps_j-eps_{j-1}}. */
  const std::vector<IVec> &unmult_simple() const { return unmult_simple_; }

 private:
  int rank_;
  Case case_;
  long long weyl_order_;
  std::vector<Root> positive_, carrier_, carrier_short_, unmult_;
  std::vector<IVec> carrier_simple_, unmult_simple_;
  std::vector<WeylElement> weyl_;
};

/* Validates the preconditions (n >= 1, Case I forces m_s = 0) and pairs the
 * root datum with its multiplicity. */
struct RootSystem {
  RootDatum datum;
  Mult mult;
  RootSystem(int rank, Case cs, const Mult &m);
};

inline double norm2_root(const IVec &alpha) { return idot(alpha, alpha); }

/* lambda_alpha = <lambda, alpha> / <alpha, alpha> with the epsilon basis
 * declared orthonormal. */
inline cplx pairing_alpha(const CVec &lambda, const IVec &alpha) {
  return idotc(alpha, lambda) / norm2_root(alpha);
}
inline double pairing_alpha(const Vec &lambda, const IVec &alpha) {
  return idot(alpha, lambda) / norm2_root(alpha);
}

}  // namespace heckop
