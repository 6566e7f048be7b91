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

#ifndef NMR_PROB_CHECKS_H_
#define NMR_PROB_CHECKS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmr/logic/formula.h"
#include "nmr/prob/relevance.h"
#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

// lhs[i] = Pr(target | conjunction of every statement but the i-th),
// rhs = Pr(target); holds iff lhs[i] < rhs for every i.
struct DefeaterCheck {
  Formula target;
  std::vector<Formula> conditions;
  std::vector<Rational> lhs;
  Rational rhs;
  bool holds = false;
  std::optional<RelevanceReport> relevance;
  std::vector<std::string> warnings;
};

// Preface: target is ~s_1 | ... | ~s_N and conditions are the conjunctions of
// all other statements. Relevance of the statements is reported; a warning is
// attached when it is not positive. With a single statement the condition is
// the tautology, so lhs = rhs and the check fails.
DefeaterCheck check_preface_defeater(const WorldModel& m, std::span<const Formula> statements);

// Unfair lottery: target is t_1 | ... | t_N and conditions are the
// conjunctions of the other tickets losing. Relevance is reported for the
// losing propositions ~t_i.
DefeaterCheck check_unfair_lottery(const WorldModel& m, std::span<const Formula> tickets);

}  // namespace nmr

#endif  // NMR_PROB_CHECKS_H_
