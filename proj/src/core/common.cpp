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

#include "common.hpp"

#include <cstdio>
#include <cstdlib>

namespace heckop {

Backend backend_from_name(const std::string &name) {
  if (name == "series") return Backend::Series;
  if (name == "rank1") return Backend::Rank1;
  if (name == "poly") return Backend::Poly;
  throw UsageError("unknown backend '" + name + "'");
}

int thread_budget() {
  static int cached = [] {
    const char *env = std::getenv("HECKOP_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    if (v > 256) return 256;
    return v;
  }();
  return cached;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace heckop
