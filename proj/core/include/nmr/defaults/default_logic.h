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

#ifndef NMR_DEFAULTS_DEFAULT_LOGIC_H_
#define NMR_DEFAULTS_DEFAULT_LOGIC_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nmr/logic/formula.h"

namespace nmr {

// A default `prerequisite : justification_1, ..., justification_n / consequent`.
// Formulas may share variables; they are instantiated together.
struct DefaultRule {
  std::string id;
  Formula prerequisite;
  std::vector<Formula> justifications;
  Formula consequent;

  // True iff the only justification is the consequent.
  bool is_normal() const;
  bool is_ground() const;
  std::vector<std::string> variables() const;

  bool operator==(const DefaultRule&) const = default;
};

// Facts W, defaults D and the constant domain used to ground schemata.
struct DefaultTheory {
  std::vector<Formula> facts;
  std::vector<DefaultRule> defaults;
  std::vector<std::string> domain;

  bool is_ground() const;
  bool is_normal() const;

  bool operator==(const DefaultTheory&) const = default;
};

// Instantiates every fact and default over the domain. A default `d` with
// variables becomes `d_c1_..._ck` per binding. Throws InputError on duplicate
// ground ids.
DefaultTheory ground_theory(const DefaultTheory& theory);

// An extension, identified by its generating defaults. `base` is W followed by
// the consequents of the generating defaults in id order; the extension is
// the deductive closure of `base`.
struct Extension {
  std::vector<std::string> generating_defaults;  // sorted
  std::vector<Formula> base;
  // Set when W is inconsistent: the extension is the whole language.
  bool trivial = false;

  bool operator==(const Extension&) const = default;
};

struct ExtensionOptions {
  // Enumeration is exponential in the worst case; larger theories are
  // refused with a LimitError.
  std::size_t max_defaults = 64;
};

// Prerequisite entailed by `base` and every justification consistent with it.
bool applicable(const DefaultRule& d, std::span<const Formula> base);

// Checks the extension fixpoint for the candidate generating set `ids`: each
// generating default is applicable w.r.t. the final base, no other default is,
// and the generating defaults can be applied in a grounded order starting
// from W.
bool is_extension(const DefaultTheory& theory, std::span<const std::string> ids);

// All extensions of a ground theory, deduplicated and sorted by generating
// set. Throws InputError for non-ground theories and LimitError past
// `options.max_defaults`.
std::vector<Extension> extensions(const DefaultTheory& theory,
                                  const ExtensionOptions& options = {});

enum class QueryMode { kCredulous, kSkeptical };

struct QueryResult {
  bool answer = false;
  // Indices into the extension list: extensions entailing the query
  // (credulous) or the first counterexample (skeptical, when false).
  std::vector<std::size_t> witnesses;
  // Skeptical query over a theory without extensions.
  bool vacuous = false;
};

QueryResult query(std::span<const Extension> exts, const Formula& q, QueryMode mode);

bool credulous_entails(const DefaultTheory& theory, const Formula& q);
bool skeptical_entails(const DefaultTheory& theory, const Formula& q);

}  // namespace nmr

#endif  // NMR_DEFAULTS_DEFAULT_LOGIC_H_
