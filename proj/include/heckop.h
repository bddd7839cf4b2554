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

/* heckop — numerical harmonic analysis for BC_n root systems: Heckman-Opdam
 * hypergeometric functions, twisted spherical functions for line bundles over
 * compact Hermitian symmetric spaces, the spherical Fourier transform, and
 * verification suites for the exponential growth estimates.
 *
 * C API over an opaque-handle core. All functions return a heckop_status
 * (or a handle / plain value where noted); on failure, heckop_last_error()
 * gives a thread-local message. Strings returned through char** are heap
 * allocated and must be released with heckop_string_free().
 */

#ifndef HECKOP_H
#define HECKOP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HECKOP_BUILD)
#    define HECKOP_API __declspec(dllexport)
#  else
#    define HECKOP_API __declspec(dllimport)
#  endif
#else
#  define HECKOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum heckop_status {
  HECKOP_OK = 0,
  HECKOP_E_USAGE = 1,     /* bad arguments, unknown key, malformed input */
  HECKOP_E_DOMAIN = 2,    /* point outside the operation's domain */
  HECKOP_E_RESONANT = 3,  /* spectral parameter resonant for the series */
  HECKOP_E_POLE = 4,      /* c-function pole or degenerate normalization */
  HECKOP_E_NOCONV = 5,    /* series truncation cap reached before tolerance */
  HECKOP_E_ILLCOND = 6,   /* Gram matrix too ill-conditioned */
  HECKOP_E_VERIFY = 7,    /* a verification suite had failing checks */
  HECKOP_E_INTERNAL = 8
} heckop_status;

/* Root-system case: I (no short roots, m_s = 0) or II (full BC_n). */
typedef enum heckop_case { HECKOP_CASE_I = 1, HECKOP_CASE_II = 2 } heckop_case;

typedef enum heckop_rho_mode {
  HECKOP_RHO = 0,        /* half sum of m_alpha * alpha                 */
  HECKOP_RHO_TILDE = 1,  /* half sum of |m_alpha| * alpha               */
  HECKOP_RHO_S = 2       /* half sum over the short orbit               */
} heckop_rho_mode;

typedef struct heckop_space heckop_space;     /* root datum + catalog data  */
typedef struct heckop_section heckop_section; /* sampled W-invariant section */

HECKOP_API const char *heckop_version(void);
HECKOP_API const char *heckop_last_error(void);
HECKOP_API void heckop_string_free(char *s);

/* ---- spaces ----------------------------------------------------------- */

/* Open by catalog key, e.g. "AIII:p=1,q=2", "BDI:q=5", "DIII:j=5",
 * "CI:j=2", "EIII", "EVII". catalog_path may be NULL (built-in table). */
HECKOP_API heckop_space *heckop_space_open(const char *key,
                                           const char *catalog_path);
HECKOP_API heckop_space *heckop_space_open_explicit(int rank, heckop_case cs,
                                                    double m_short,
                                                    double m_medium,
                                                    double m_long);
HECKOP_API void heckop_space_close(heckop_space *sp);

HECKOP_API int heckop_space_rank(const heckop_space *sp);
HECKOP_API int heckop_space_case(const heckop_space *sp);
HECKOP_API long long heckop_space_weyl_order(const heckop_space *sp);
HECKOP_API void heckop_space_multiplicity(const heckop_space *sp,
                                          double m_out[3]);

/* Positive roots: writes coords (count*rank ints, epsilon basis), orbit tag
 * per root (0 short, 1 medium, 2 long) and multiplicity. Returns the count;
 * pass cap = 0 to query the count only. */
HECKOP_API int heckop_space_positive_roots(const heckop_space *sp, int *coords,
                                           int *orbit, double *mult, int cap);

HECKOP_API heckop_status heckop_space_rho(const heckop_space *sp,
                                          heckop_rho_mode mode,
                                          const double *m_or_null,
                                          double *out /* rank */);

/* Multiplicity shift: sign > 0 gives (m_s - 2|l|, m_m, m_l + 2|l|),
 * sign < 0 the opposite. */
HECKOP_API void heckop_mult_shift(const double m[3], int l, int sign,
                                  double out[3]);
HECKOP_API int heckop_mult_in_m_ge(const heckop_space *sp, const double m[3]);

/* ---- highest-weight lattice ------------------------------------------- */

HECKOP_API int heckop_lattice_contains(const heckop_space *sp, const int *mu,
                                       int l);
/* JSON: {"points":[{"mu":[...],"l":..,"mu0":..,"height":..},...]} sorted by
 * height then lexicographically. */
HECKOP_API heckop_status heckop_lattice_enumerate(const heckop_space *sp,
                                                  int l, int max_height,
                                                  char **out_json);

/* ---- pointwise evaluations -------------------------------------------- */

/* Hypergeometric function F(lambda, m; exp(X+iY)) by the symmetrized
 * Harish-Chandra series. m is any multiplicity triple (use
 * heckop_mult_shift for line-bundle shifts). Convergence needs
 * alpha(X) >= 0.2 on positive roots. out = {re, im}. */
HECKOP_API heckop_status heckop_eval_f(const heckop_space *sp,
                                       const double m[3],
                                       const double *lambda_re,
                                       const double *lambda_im,
                                       const double *X, const double *Y,
                                       double tol, double out[2],
                                       double *achieved_tol_or_null,
                                       int *perturbed_or_null);

/* Rank-1 evaluation through the Gauss hypergeometric backend; valid on the
 * whole tube including X = 0. */
HECKOP_API heckop_status heckop_eval_f_rank1(const heckop_space *sp,
                                             const double m[3],
                                             double lambda_re,
                                             double lambda_im, double x,
                                             double y, double out[2]);

/* Normalized c-function: weights with sum_w c(w lambda) = 1. */
HECKOP_API heckop_status heckop_c_normalized(const heckop_space *sp,
                                             const double m[3],
                                             const double *lambda_re,
                                             const double *lambda_im,
                                             double out[2]);

/* eta twist: product of cosh(alpha(X+iY))^(sign*2|l|) over short carrier
 * roots. */
HECKOP_API heckop_status heckop_eval_eta(const heckop_space *sp, int l,
                                         int sign, const double *X,
                                         const double *Y, double out[2]);

/* Spherical function psi_{mu,l} on the torus (X = 0), normalized to 1 at
 * Y = 0. mu must lie in the l-th weight lattice. */
HECKOP_API heckop_status heckop_eval_psi(const heckop_space *sp, int l,
                                         const int *mu, const double *Y,
                                         double out[2]);

/* phi_{lambda,l} = eta^(variant) * F(lambda, m_variant(l)) at exp(X+iY).
 * backend: "series", "rank1" or "poly". variant: +1 or -1. */
HECKOP_API heckop_status heckop_eval_phi(const heckop_space *sp, int l,
                                         const double *lambda_re,
                                         const double *lambda_im,
                                         const double *X, const double *Y,
                                         int variant, const char *backend,
                                         double out[2]);

/* Growth bound for |F| with explicit constant C = 2 + 2 tan((pi-eps)/2);
 * requires |alpha(Y)| <= pi - eps on all roots. */
HECKOP_API heckop_status heckop_estimate_bound(const heckop_space *sp,
                                               const double m[3],
                                               const double *lambda_re,
                                               const double *lambda_im,
                                               const double *X,
                                               const double *Y, double eps,
                                               double *out);

/* Cartan integration density delta_m(Y). */
HECKOP_API heckop_status heckop_delta_density(const heckop_space *sp,
                                              const double m[3],
                                              const double *Y, double *out);

/* ---- sections and the spherical transform ----------------------------- */

/* W-invariant bump of support radius r (Euclidean in Y coordinates) on a
 * uniform n_per_axis^rank torus grid. */
HECKOP_API heckop_section *heckop_section_bump(const heckop_space *sp, int l,
                                               int n_per_axis, double radius);
/* Section from raw grid values (row-major, im may be NULL). A negative
 * support_radius means "unknown". */
HECKOP_API heckop_section *heckop_section_from_values(
    const heckop_space *sp, int l, int n_per_axis, const double *re,
    const double *im, double support_radius);
HECKOP_API void heckop_section_close(heckop_section *s);
HECKOP_API int heckop_section_grid_size(const heckop_section *s);
HECKOP_API int heckop_section_points(const heckop_section *s);
HECKOP_API heckop_status heckop_section_values(const heckop_section *s,
                                               double *re, double *im);

HECKOP_API heckop_status heckop_inner_product(const heckop_section *a,
                                              const heckop_section *b,
                                              double out[2]);

/* Empirical dimension 1 / <psi_mu, psi_mu> on the given grid. */
HECKOP_API heckop_status heckop_empirical_dimension(const heckop_space *sp,
                                                    int l, const int *mu,
                                                    int n_per_axis,
                                                    double *out);

/* Forward transform against all lattice points of height <= max_height.
 * JSON: {"entries":[{"mu":[...],"re":..,"im":..},...]}. */
HECKOP_API heckop_status heckop_forward_transform(const heckop_section *f,
                                                  int max_height,
                                                  char **out_json);

/* Synthesis sum d(mu) c(mu) psi_mu from a coefficient JSON of the same
 * shape as heckop_forward_transform output. */
HECKOP_API heckop_section *heckop_synthesize(const heckop_space *sp, int l,
                                             int n_per_axis,
                                             const char *coeffs_json);

/* Transform extended to spectral parameter lambda; backend "rank1" (rank-1
 * spaces, any lambda) or "poly" (lattice lambda). */
HECKOP_API heckop_status heckop_extended_transform(const heckop_section *f,
                                                   const double *lambda_re,
                                                   const double *lambda_im,
                                                   const char *backend,
                                                   double out[2]);

/* Least-squares slope of log|S_l(f)(i t xi)| over t in [t_min, t_max]
 * (rank 1, xi = 1): the empirical exponential type. */
HECKOP_API heckop_status heckop_fit_exponential_type(
    const heckop_section *f, double t_min, double t_max, int samples,
    const char *backend, double *type_out, double *residual_out);

/* ---- verification ------------------------------------------------------ */

/* suite: one of "c-normalization", "degenerate-f", "weyl-invariance",
 * "bridge", "rank1-oracle", "estimate", "eta-bound", "jacobi", "psi-bound",
 * "dimensions", "plancherel", "lattice", "pw-type", "determinism", or "all".
 * config_json may be NULL or override {"seed":..,"N":..,"eps":..,
 * "space":"..","l":..}. Returns HECKOP_OK if all asserted checks pass,
 * HECKOP_E_VERIFY otherwise; the full report is written to out_json. */
HECKOP_API heckop_status heckop_verify(const char *suite,
                                       const char *config_json,
                                       char **out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HECKOP_H */
