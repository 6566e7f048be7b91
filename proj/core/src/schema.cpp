// Copyright 2026 The nmr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmr/logic/schema.h"

#include <algorithm>
#include <set>

#include "nmr/errors.h"

namespace nmr {

std::vector<std::map<std::string, std::string>> bindings(
    std::span<const std::string> variables, std::span<const std::string> domain) {
  std::vector<std::string> consts(domain.begin(), domain.end());
  std::sort(consts.begin(), consts.end());
  consts.erase(std::unique(consts.begin(), consts.end()), consts.end());

  std::vector<std::map<std::string, std::string>> out;
  if (variables.empty()) {
    out.emplace_back();
    return out;
  }
  if (consts.empty()) throw InputError("cannot ground variables over an empty domain");

  std::vector<std::size_t> odometer(variables.size(), 0);
  for (;;) {
    std::map<std::string, std::string> b;
    for (std::size_t i = 0; i < variables.size(); ++i) b[variables[i]] = consts[odometer[i]];
    out.push_back(std::move(b));
    std::size_t i = variables.size();
    while (i > 0 && ++odometer[i - 1] == consts.size()) odometer[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Formula> ground(const Schema& schema, std::span<const std::string> domain) {
  const std::set<std::string> declared(schema.variables.begin(), schema.variables.end());
  for (const auto& v : schema.body.variables())
    if (!declared.contains(v))
      throw InputError("schema variable " + v + " is not in the variable list");

  std::vector<Formula> out;
  for (const auto& b : bindings(schema.variables, domain)) out.push_back(schema.body.substitute(b));
  return out;
}

}  // namespace nmr
