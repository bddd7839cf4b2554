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

#include "catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace heckop {

namespace {

using nlohmann::json;

std::optional<long> get_param(const std::string &body, const std::string &nm) {
  // body looks like "p=2,q=3" or "j=5"
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    if (item.substr(0, eq) == nm) return std::stol(item.substr(eq + 1));
  }
  return std::nullopt;
}

std::optional<SpaceSpec> derive_family(const std::string &key) {
  auto colon = key.find(':');
  std::string cls = colon == std::string::npos ? key : key.substr(0, colon);
  std::string body = colon == std::string::npos ? "" : key.substr(colon + 1);

  SpaceSpec s;
  s.key = key;
  if (cls == "AIII") {
    auto p = get_param(body, "p"), q = get_param(body, "q");
    if (!p || !q || *p < 1 || *q < *p) return std::nullopt;
    s.rank = (int)*p;
    if (*p == *q) {
      s.cs = Case::I;
      s.mult = {0, 2, 1};
    } else {
      s.cs = Case::II;
      s.mult = {2.0 * (*q - *p), 2, 1};
    }
    return s;
  }
  if (cls == "BDI") {
    auto q = get_param(body, "q");
    if (!q || *q < 3) return std::nullopt;
    s.rank = 2;
    s.cs = Case::I;
    s.mult = {0, double(*q - 2), 1};
    return s;
  }
  if (cls == "DIII") {
    auto j = get_param(body, "j");
    if (!j || *j < 2) return std::nullopt;
    s.rank = (int)(*j / 2);
    if (*j % 2 == 0) {
      s.cs = Case::I;
      s.mult = {0, 4, 1};
    } else {
      s.cs = Case::II;
      s.mult = {4, 4, 1};
    }
    return s;
  }
  if (cls == "CI" || cls == "Sp") {
    auto j = get_param(body, "j");
    if (!j || *j < 1) return std::nullopt;
    s.rank = (int)*j;
    s.cs = Case::I;
    s.mult = {0, 1, 1};
    return s;
  }
  if (cls == "EIII") {
    s.rank = 2;
    s.cs = Case::II;
    s.mult = {8, 6, 1};
    return s;
  }
  if (cls == "EVII") {
    s.rank = 3;
    s.cs = Case::I;
    s.mult = {0, 8, 1};
    return s;
  }
  return std::nullopt;
}

SpaceSpec from_json_entry(const std::string &key, const json &e) {
  SpaceSpec s;
  s.key = key;
  s.rank = e.at("rank").get<int>();
  std::string cs = e.at("case").get<std::string>();
  if (cs == "I") s.cs = Case::I;
  else if (cs == "II") s.cs = Case::II;
  else throw UsageError("catalog entry '" + key + "': case must be I or II");
  s.mult.s = e.at("m_s").get<double>();
  s.mult.m = e.at("m_m").get<double>();
  s.mult.l = e.at("m_l").get<double>();
  return s;
}

}  // namespace

std::string builtin_catalog_json() {
  json j = json::object();
  auto put = [&](const std::string &key) {
    auto s = derive_family(key);
    j[key] = {{"rank", s->rank},
              {"case", s->cs == Case::I ? "I" : "II"},
              {"m_s", s->mult.s},
              {"m_m", s->mult.m},
              {"m_l", s->mult.l}};
  };
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 6; ++q)
      put("AIII:p=" + std::to_string(p) + ",q=" + std::to_string(q));
  for (int q = 5; q <= 8; ++q) put("BDI:q=" + std::to_string(q));
  for (int jj = 4; jj <= 8; ++jj) put("DIII:j=" + std::to_string(jj));
  for (int jj = 1; jj <= 4; ++jj) put("CI:j=" + std::to_string(jj));
  put("EIII");
  put("EVII");
  return j.dump(2);
}

SpaceSpec resolve_space(const std::string &key,
                        const std::string &catalog_path) {
  if (!catalog_path.empty()) {
    std::ifstream in(catalog_path);
    if (!in) throw UsageError("cannot open catalog file " + catalog_path);
    json j;
    try {
      in >> j;
    } catch (const std::exception &e) {
      throw UsageError("catalog parse error: " + std::string(e.what()));
    }
    if (j.contains(key)) return from_json_entry(key, j.at(key));
  } else {
    json j = json::parse(builtin_catalog_json());
    if (j.contains(key)) return from_json_entry(key, j.at(key));
  }
  if (auto s = derive_family(key)) return *s;
  throw UsageError("unknown space '" + key + "'");
}

}  // namespace heckop
