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

#ifndef NMR_LOGIC_SCHEMA_H_
#define NMR_LOGIC_SCHEMA_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nmr/logic/formula.h"

namespace nmr {

// A formula template whose free variables are listed explicitly.
struct Schema {
  Formula body;
  std::vector<std::string> variables;
};

// Every assignment of domain constants to the variables, in lexicographic
// order of (sorted, deduplicated) constants with the first variable varying
// slowest.
std::vector<std::map<std::string, std::string>> bindings(
    std::span<const std::string> variables, std::span<const std::string> domain);

// One ground instance per binding, in the order of `bindings`. Throws
// InputError when the body mentions a variable missing from the list, or
// when the domain is empty but variables need binding.
std::vector<Formula> ground(const Schema& schema, std::span<const std::string> domain);

}  // namespace nmr

#endif  // NMR_LOGIC_SCHEMA_H_
