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

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace heckop {

using cplx = std::complex<double>;
using Vec = std::vector<double>;
using CVec = std::vector<cplx>;
using IVec = std::vector<int>;

inline constexpr double kPi = 3.14159265358979323846;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResonantParameter : std::runtime_error {
  IVec kappa;
  ResonantParameter(const std::string &msg, IVec k)
      : std::runtime_error(msg), kappa(std::move(k)) {}
};
struct PoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline double dot(const Vec &a, const Vec &b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline cplx dotc(const CVec &a, const Vec &b) {
  cplx s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline cplx dotc(const CVec &a, const CVec &b) {  // bilinear, no conjugation
  cplx s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double idot(const IVec &a, const Vec &b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double idot(const IVec &a, const IVec &b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += double(a[i]) * b[i];
  return s;
}
inline cplx idotc(const IVec &a, const CVec &b) {
  cplx s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += double(a[i]) * b[i];
  return s;
}

/* splitmix64: tiny deterministic generator. std::uniform_real_distribution
 * is not bit-stable across standard libraries, so draws are done by hand. */
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next_u64() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  cplx complex_box(double re_lo, double re_hi, double im_lo, double im_hi) {
    double re = uniform(re_lo, re_hi);
    double im = uniform(im_lo, im_hi);
    return {re, im};
  }
};

/* Evaluation route for the spherical functions. */
enum class Backend { Series, Rank1, Poly };
Backend backend_from_name(const std::string &name);

int thread_budget();  // HECKOP_THREADS, default 1

/* Deterministic parallel map: results land in index order regardless of the
 * thread count, so reductions downstream are bit-stable. */
template <typename F>
void parallel_for(size_t count, F &&body) {
  int nt = thread_budget();
  if (nt <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  size_t threads = std::min<size_t>(nt, count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto &th : pool) th.join();
}

std::string format_double(double v);  // stable %.12g formatting

}  // namespace heckop
