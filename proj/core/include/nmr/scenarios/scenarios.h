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

#ifndef NMR_SCENARIOS_SCENARIOS_H_
#define NMR_SCENARIOS_SCENARIOS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/defaults/default_logic.h"
#include "nmr/defeat/defeat.h"
#include "nmr/dsl/document.h"
#include "nmr/prob/relevance.h"
#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

// What the generator believes about its output. Tests re-derive every item
// with the engines instead of trusting it.
struct Expectations {
  std::optional<std::size_t> extension_count;
  std::optional<RelevanceClass> relevance;
  std::vector<std::string> notes;
};

struct Scenario {
  std::string name;
  // May contain schemata; see grounded_theory().
  std::optional<DefaultTheory> theory;
  std::optional<WorldModel> model;
  std::vector<Formula> background;
  std::vector<Candidate> candidates;
  std::vector<UndercutProbe> undercuts;
  // The s_i of the preface, the t_i of the lotteries, the p_i of the korb partition.
  std::vector<Formula> statements;
  Expectations expectations;

  DefaultTheory grounded_theory() const;
  // Throws InputError when the scenario has no model.
  WarrantProblem warrant_problem() const;
  std::vector<Formula> candidate_conclusions() const;
};

struct BirdKind {
  std::string name;
  bool flies = false;
  bool exceptional = true;
};

// emu, penguin, canary, sandpiper; all exceptional.
std::vector<BirdKind> default_bird_kinds();

Scenario make_nixon();
Scenario make_tweety(const std::vector<BirdKind>& kinds = default_bird_kinds());
Scenario make_fair_lottery(int n);
Scenario make_unfair_lottery(int n, const Rational& fair_weight);
Scenario make_preface(int n, const Rational& good_rate, const Rational& p_good,
                      const Rational& p_bad);
Scenario make_korb(int m, int n, const Rational& q);
Scenario make_lotteryization(const Rational& q, int n);

// Generator parameters; unset fields take the per-scenario defaults.
struct ScenarioParams {
  std::optional<int> n;
  std::optional<int> m;
  std::optional<Rational> q;
  std::optional<Rational> fair_weight;
  std::optional<Rational> good_rate;
  std::optional<Rational> p_good;
  std::optional<Rational> p_bad;
};

const std::vector<std::string>& scenario_names();

// Throws InputError on an unknown name or invalid parameters.
Scenario make_scenario(std::string_view name, const ScenarioParams& params = {});

TheoryDocument to_document(const Scenario& s);

}  // namespace nmr

#endif  // NMR_SCENARIOS_SCENARIOS_H_
