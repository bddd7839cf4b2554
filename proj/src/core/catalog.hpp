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

#include <optional>
#include <string>

#include "rootdata.hpp"

namespace heckop {

struct SpaceSpec {
  std::string key;
  int rank = 0;
  Case cs = Case::I;
  Mult mult;
};

/* Resolve a class label such as "AIII:p=1,q=2", "BDI:q=5", "DIII:j=5",
 * "CI:j=2", "EIII", "EVII". When catalog_path is non-empty the JSON file
 * {"KEY": {"rank":..,"case":"I"|"II","m_s":..,"m_m":..,"m_l":..}, ...} is
 * consulted first; parameterized families are derived when the key is not
 * listed. */
SpaceSpec resolve_space(const std::string &key,
                        const std::string &catalog_path = {});

/* The built-in catalog as a JSON string (same schema as the file). */
std::string builtin_catalog_json();

}  // namespace heckop
