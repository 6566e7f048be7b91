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

#ifndef NMR_DSL_DOCUMENT_H_
#define NMR_DSL_DOCUMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "nmr/defaults/default_logic.h"
#include "nmr/defeat/defeat.h"
#include "nmr/logic/formula.h"
#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

struct ConfigOverrides {
  std::optional<Rational> threshold;
  std::optional<Rational> tie_epsilon;
  std::optional<Rational> relevance_tolerance;
  std::optional<GateMode> gate;
  std::optional<RelevanceMode> relevance;
  std::optional<std::size_t> max_defaults;

  bool empty() const;
  void apply_to(EngineConfig& config) const;
  void apply_to(ExtensionOptions& options) const;

  bool operator==(const ConfigOverrides&) const = default;
};

// Abstract content of a `.dt` file. A file may carry a default theory, a
// world model and warrant inputs side by side; commands check that the parts
// they need are present.
struct TheoryDocument {
  std::vector<std::string> domain;
  std::vector<Formula> facts;
  std::vector<DefaultRule> defaults;
  std::vector<std::string> atoms;  // world bit order
  std::vector<World> worlds;
  std::vector<Formula> background;
  std::vector<Candidate> candidates;
  std::vector<UndercutProbe> undercuts;
  ConfigOverrides config;

  bool empty() const;
  bool has_theory() const { return !facts.empty() || !defaults.empty(); }
  bool has_model() const { return !worlds.empty(); }

  bool operator==(const TheoryDocument& other) const;
};

// Ground default theory (facts and defaults instantiated over the domain).
DefaultTheory theory_of(const TheoryDocument& doc);

// Throws InputError when the document declares no worlds.
WorldModel model_of(const TheoryDocument& doc);

// Model plus background (facts followed by background statements),
// candidates and undercut probes. Facts with variables are grounded first.
WarrantProblem problem_of(const TheoryDocument& doc);

}  // namespace nmr

#endif  // NMR_DSL_DOCUMENT_H_
