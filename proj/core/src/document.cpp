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

#include "nmr/dsl/document.h"

#include "nmr/errors.h"

namespace nmr {

bool ConfigOverrides::empty() const {
  return !threshold && !tie_epsilon && !relevance_tolerance && !gate && !relevance && !max_defaults;
}

void ConfigOverrides::apply_to(EngineConfig& config) const {
  if (threshold) config.acceptance_threshold = *threshold;
  if (tie_epsilon) config.tie_epsilon = *tie_epsilon;
  if (relevance_tolerance) config.relevance_tolerance = *relevance_tolerance;
  if (gate) config.gate = *gate;
  if (relevance) config.relevance = *relevance;
}

void ConfigOverrides::apply_to(ExtensionOptions& options) const {
  if (max_defaults) options.max_defaults = *max_defaults;
}

bool TheoryDocument::empty() const {
  return domain.empty() && facts.empty() && defaults.empty() && atoms.empty() &&
         worlds.empty() && background.empty() && candidates.empty() && undercuts.empty() &&
         config.empty();
}

bool TheoryDocument::operator==(const TheoryDocument& other) const {
  return domain == other.domain && facts == other.facts && defaults == other.defaults &&
         atoms == other.atoms && worlds == other.worlds && background == other.background &&
         candidates == other.candidates && undercuts == other.undercuts &&
         config == other.config;
}

DefaultTheory theory_of(const TheoryDocument& doc) {
  return ground_theory({doc.facts, doc.defaults, doc.domain});
}

WorldModel model_of(const TheoryDocument& doc) {
  if (doc.worlds.empty()) throw InputError("document declares no worlds");
  return WorldModel(doc.atoms, doc.worlds);
}

WarrantProblem problem_of(const TheoryDocument& doc) {
  DefaultTheory facts = ground_theory({doc.facts, {}, doc.domain});
  WarrantProblem p{model_of(doc), std::move(facts.facts), doc.candidates, doc.undercuts};
  p.background.insert(p.background.end(), doc.background.begin(), doc.background.end());
  return p;
}

}  // namespace nmr
