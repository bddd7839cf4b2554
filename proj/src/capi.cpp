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

#include "heckop.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "core/catalog.hpp"
#include "core/hypergeom.hpp"
#include "core/jacobi.hpp"
#include "core/quadrature.hpp"
#include "core/rank1.hpp"
#include "core/transform.hpp"
#include "core/verify.hpp"
#include "core/weights.hpp"
#include "json.hpp"

using namespace heckop;
using nlohmann::ordered_json;

struct heckop_space {
  SpaceSpec spec;
  RootDatum rd;
  explicit heckop_space(const SpaceSpec &s) : spec(s), rd(s.rank, s.cs) {}
};

struct heckop_section {
  SampledSection s;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string &msg) { g_last_error = msg; }

heckop_status status_of(const std::exception &e) {
  set_error(e.what());
  if (dynamic_cast<const UsageError *>(&e)) return HECKOP_E_USAGE;
  if (dynamic_cast<const DomainError *>(&e)) return HECKOP_E_DOMAIN;
  if (dynamic_cast<const ResonantParameter *>(&e)) return HECKOP_E_RESONANT;
  if (dynamic_cast<const PoleError *>(&e)) return HECKOP_E_POLE;
  if (dynamic_cast<const NoConvergence *>(&e)) return HECKOP_E_NOCONV;
  if (dynamic_cast<const IllConditioned *>(&e)) return HECKOP_E_ILLCOND;
  return HECKOP_E_INTERNAL;
}

template <typename F>
heckop_status wrap(F &&fn) {
  try {
    fn();
    return HECKOP_OK;
  } catch (const std::exception &e) {
    return status_of(e);
  } catch (...) {
    set_error("unknown failure");
    return HECKOP_E_INTERNAL;
  }
}

CVec make_lambda(const heckop_space *sp, const double *re, const double *im) {
  CVec lam(sp->rd.rank());
  for (int j = 0; j < sp->rd.rank(); ++j)
    lam[j] = cplx(re ? re[j] : 0.0, im ? im[j] : 0.0);
  return lam;
}

Vec make_vec(const heckop_space *sp, const double *v) {
  Vec out(sp->rd.rank(), 0.0);
  if (v)
    for (int j = 0; j < sp->rd.rank(); ++j) out[j] = v[j];
  return out;
}

char *dup_string(const std::string &s) {
  char *out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Mult make_mult(const double m[3]) { return Mult{m[0], m[1], m[2]}; }

}  // namespace

extern "C" {

const char *heckop_version(void) { return "1.0.0"; }

const char *heckop_last_error(void) { return g_last_error.c_str(); }

void heckop_string_free(char *s) { delete[] s; }

heckop_space *heckop_space_open(const char *key, const char *catalog_path) {
  try {
    SpaceSpec spec =
        resolve_space(key ? key : "", catalog_path ? catalog_path : "");
    return new heckop_space(spec);
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

heckop_space *heckop_space_open_explicit(int rank, heckop_case cs,
                                         double m_short, double m_medium,
                                         double m_long) {
  try {
    SpaceSpec spec;
    spec.key = "explicit";
    spec.rank = rank;
    spec.cs = cs == HECKOP_CASE_I ? Case::I : Case::II;
    spec.mult = Mult{m_short, m_medium, m_long};
    RootSystem check(rank, spec.cs, spec.mult);  // validates preconditions
    return new heckop_space(spec);
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

void heckop_space_close(heckop_space *sp) { delete sp; }

int heckop_space_rank(const heckop_space *sp) { return sp->rd.rank(); }

int heckop_space_case(const heckop_space *sp) {
  return int(sp->rd.space_case());
}

long long heckop_space_weyl_order(const heckop_space *sp) {
  return sp->rd.weyl_order();
}

void heckop_space_multiplicity(const heckop_space *sp, double m_out[3]) {
  m_out[0] = sp->spec.mult.s;
  m_out[1] = sp->spec.mult.m;
  m_out[2] = sp->spec.mult.l;
}

int heckop_space_positive_roots(const heckop_space *sp, int *coords,
                                int *orbit, double *mult, int cap) {
  const auto &roots = sp->rd.positive_roots();
  int count = (int)roots.size();
  if (cap <= 0) return count;
  int n = sp->rd.rank();
  for (int i = 0; i < std::min(cap, count); ++i) {
    for (int j = 0; j < n; ++j)
      if (coords) coords[i * n + j] = roots[i].coords[j];
    if (orbit) orbit[i] = int(roots[i].orbit);
    if (mult) mult[i] = sp->spec.mult.of(roots[i].orbit);
  }
  return count;
}

heckop_status heckop_space_rho(const heckop_space *sp, heckop_rho_mode mode,
                               const double *m_or_null, double *out) {
  return wrap([&] {
    Mult m = sp->spec.mult;
    if (m_or_null) m = Mult{m_or_null[0], m_or_null[1], m_or_null[2]};
    Vec rho = sp->rd.rho(m, RhoMode(int(mode)));
    for (int j = 0; j < sp->rd.rank(); ++j) out[j] = rho[j];
  });
}

void heckop_mult_shift(const double m[3], int l, int sign, double out[3]) {
  Mult s = shift_mult(Mult{m[0], m[1], m[2]}, l, sign);
  out[0] = s.s;
  out[1] = s.m;
  out[2] = s.l;
}

int heckop_mult_in_m_ge(const heckop_space *sp, const double m[3]) {
  return sp->rd.in_m_ge(make_mult(m)) ? 1 : 0;
}

int heckop_lattice_contains(const heckop_space *sp, const int *mu, int l) {
  IVec v(mu, mu + sp->rd.rank());
  return is_in_lambda_l(sp->rd, v, l) ? 1 : 0;
}

heckop_status heckop_lattice_enumerate(const heckop_space *sp, int l,
                                       int max_height, char **out_json) {
  return wrap([&] {
    auto pts = enumerate_lambda_l(sp->rd, l, max_height);
    ordered_json arr = ordered_json::array();
    for (const DominantWeight &dw : pts)
      arr.push_back({{"mu", dw.mu},
                     {"l", dw.l},
                     {"mu0", dw.mu0},
                     {"height", dw.height()}});
    ordered_json root;
    root["points"] = arr;
    *out_json = dup_string(root.dump(2));
  });
}

heckop_status heckop_eval_f(const heckop_space *sp, const double m[3],
                            const double *lambda_re, const double *lambda_im,
                            const double *X, const double *Y, double tol,
                            double out[2], double *achieved_tol_or_null,
                            int *perturbed_or_null) {
  return wrap([&] {
    EvalReport r = f_eval(sp->rd, make_mult(m),
                          make_lambda(sp, lambda_re, lambda_im),
                          make_vec(sp, X), make_vec(sp, Y),
                          tol > 0 ? tol : 1e-11);
    out[0] = r.value.real();
    out[1] = r.value.imag();
    if (achieved_tol_or_null) *achieved_tol_or_null = r.achieved_tol;
    if (perturbed_or_null) *perturbed_or_null = r.perturbed ? 1 : 0;
  });
}

heckop_status heckop_eval_f_rank1(const heckop_space *sp, const double m[3],
                                  double lambda_re, double lambda_im, double x,
                                  double y, double out[2]) {
  return wrap([&] {
    if (sp->rd.rank() != 1)
      throw UsageError("rank-1 evaluation needs a rank-1 space");
    cplx v = f_rank1(make_mult(m), cplx(lambda_re, lambda_im), x, y);
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_c_normalized(const heckop_space *sp, const double m[3],
                                  const double *lambda_re,
                                  const double *lambda_im, double out[2]) {
  return wrap([&] {
    cplx v = c_normalized(sp->rd, make_mult(m),
                          make_lambda(sp, lambda_re, lambda_im));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_eval_eta(const heckop_space *sp, int l, int sign,
                              const double *X, const double *Y,
                              double out[2]) {
  return wrap([&] {
    cplx v = eta_eval(sp->rd, l, sign, make_vec(sp, X), make_vec(sp, Y));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_eval_psi(const heckop_space *sp, int l, const int *mu,
                              const double *Y, double out[2]) {
  return wrap([&] {
    IVec v(mu, mu + sp->rd.rank());
    cplx val = psi_spherical(sp->rd, sp->spec.mult, l, v, make_vec(sp, Y));
    out[0] = val.real();
    out[1] = val.imag();
  });
}

heckop_status heckop_eval_phi(const heckop_space *sp, int l,
                              const double *lambda_re, const double *lambda_im,
                              const double *X, const double *Y, int variant,
                              const char *backend, double out[2]) {
  return wrap([&] {
    cplx v = phi_spherical(sp->rd, sp->spec.mult, l,
                           make_lambda(sp, lambda_re, lambda_im),
                           make_vec(sp, X), make_vec(sp, Y),
                           variant >= 0 ? +1 : -1,
                           backend_from_name(backend ? backend : "series"));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_estimate_bound(const heckop_space *sp, const double m[3],
                                    const double *lambda_re,
                                    const double *lambda_im, const double *X,
                                    const double *Y, double eps, double *out) {
  return wrap([&] {
    *out = estimate_bound(sp->rd, make_mult(m),
                          make_lambda(sp, lambda_re, lambda_im),
                          make_vec(sp, X), make_vec(sp, Y), eps);
  });
}

heckop_status heckop_delta_density(const heckop_space *sp, const double m[3],
                                   const double *Y, double *out) {
  return wrap([&] {
    *out = delta_density(sp->rd, make_mult(m), make_vec(sp, Y));
  });
}

heckop_section *heckop_section_bump(const heckop_space *sp, int l,
                                    int n_per_axis, double radius) {
  try {
    TorusGrid grid{sp->rd.rank(), n_per_axis};
    auto *s = new heckop_section;
    s->s = make_bump(sp->rd, sp->spec.mult, l, radius, grid);
    return s;
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

heckop_section *heckop_section_from_values(const heckop_space *sp, int l,
                                           int n_per_axis, const double *re,
                                           const double *im,
                                           double support_radius) {
  try {
    if (n_per_axis < 2) throw UsageError("grid needs at least two points");
    auto *s = new heckop_section;
    s->s.rd = &sp->rd;
    s->s.geom = sp->spec.mult;
    s->s.l = l;
    s->s.grid = TorusGrid{sp->rd.rank(), n_per_axis};
    size_t pts = s->s.grid.points();
    s->s.values.resize(pts);
    for (size_t i = 0; i < pts; ++i)
      s->s.values[i] = cplx(re ? re[i] : 0.0, im ? im[i] : 0.0);
    s->s.support_radius = support_radius;
    return s;
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

void heckop_section_close(heckop_section *s) { delete s; }

int heckop_section_grid_size(const heckop_section *s) { return s->s.grid.N; }

int heckop_section_points(const heckop_section *s) {
  return (int)s->s.grid.points();
}

heckop_status heckop_section_values(const heckop_section *s, double *re,
                                    double *im) {
  return wrap([&] {
    for (size_t i = 0; i < s->s.values.size(); ++i) {
      if (re) re[i] = s->s.values[i].real();
      if (im) im[i] = s->s.values[i].imag();
    }
  });
}

heckop_status heckop_inner_product(const heckop_section *a,
                                   const heckop_section *b, double out[2]) {
  return wrap([&] {
    cplx v = inner_product(a->s, b->s);
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_empirical_dimension(const heckop_space *sp, int l,
                                         const int *mu, int n_per_axis,
                                         double *out) {
  return wrap([&] {
    IVec v(mu, mu + sp->rd.rank());
    *out = empirical_dimension(sp->rd, sp->spec.mult, l, v,
                               TorusGrid{sp->rd.rank(), n_per_axis});
  });
}

heckop_status heckop_forward_transform(const heckop_section *f, int max_height,
                                       char **out_json) {
  return wrap([&] {
    CoefficientVector cv = forward_transform(f->s, max_height);
    ordered_json arr = ordered_json::array();
    for (const auto &[mu, c] : cv)
      arr.push_back(
          {{"mu", mu}, {"re", c.real()}, {"im", c.imag()}});
    ordered_json root;
    root["l"] = f->s.l;
    root["entries"] = arr;
    *out_json = dup_string(root.dump(2));
  });
}

heckop_section *heckop_synthesize(const heckop_space *sp, int l,
                                  int n_per_axis, const char *coeffs_json) {
  try {
    ordered_json root = ordered_json::parse(coeffs_json);
    CoefficientVector cv;
    for (const auto &e : root.at("entries")) {
      IVec mu = e.at("mu").get<IVec>();
      cv[mu] = cplx(e.value("re", 0.0), e.value("im", 0.0));
    }
    auto *s = new heckop_section;
    s->s = synthesize(sp->rd, sp->spec.mult, l, cv,
                      TorusGrid{sp->rd.rank(), n_per_axis});
    return s;
  } catch (const std::exception &e) {
    set_error(e.what());
    return nullptr;
  }
}

heckop_status heckop_extended_transform(const heckop_section *f,
                                        const double *lambda_re,
                                        const double *lambda_im,
                                        const char *backend, double out[2]) {
  return wrap([&] {
    int n = f->s.rd->rank();
    CVec lam(n);
    for (int j = 0; j < n; ++j)
      lam[j] = cplx(lambda_re ? lambda_re[j] : 0.0,
                    lambda_im ? lambda_im[j] : 0.0);
    cplx v = extended_transform(f->s, lam,
                                backend_from_name(backend ? backend : "rank1"));
    out[0] = v.real();
    out[1] = v.imag();
  });
}

heckop_status heckop_fit_exponential_type(const heckop_section *f,
                                          double t_min, double t_max,
                                          int samples, const char *backend,
                                          double *type_out,
                                          double *residual_out) {
  return wrap([&] {
    TypeFit fit =
        fit_exponential_type(f->s, t_min, t_max, samples,
                             backend_from_name(backend ? backend : "rank1"));
    if (type_out) *type_out = fit.type;
    if (residual_out) *residual_out = fit.residual;
  });
}

heckop_status heckop_verify(const char *suite, const char *config_json,
                            char **out_json) {
  try {
    VerifyConfig cfg;
    if (config_json && *config_json) {
      ordered_json j = ordered_json::parse(config_json);
      cfg.seed = j.value("seed", cfg.seed);
      cfg.N = j.value("N", cfg.N);
      cfg.eps = j.value("eps", cfg.eps);
      cfg.l = j.value("l", cfg.l);
      cfg.space = j.value("space", cfg.space);
      cfg.catalog = j.value("catalog", cfg.catalog);
      cfg.grid_out = j.value("grid_out", cfg.grid_out);
    }
    std::string name = suite ? suite : "all";
    std::vector<SuiteReport> reports;
    if (name == "all") reports = run_all(cfg);
    else reports.push_back(run_suite(name, cfg));
    if (out_json) *out_json = dup_string(report_json(reports, cfg));
    return all_passed(reports) ? HECKOP_OK : HECKOP_E_VERIFY;
  } catch (const std::exception &e) {
    return status_of(e);
  }
}

}  // extern "C"
