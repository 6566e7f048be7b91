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

#ifndef NMR_PROB_RELEVANCE_H_
#define NMR_PROB_RELEVANCE_H_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nmr/logic/formula.h"
#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

enum class RelevanceClass { kPositive, kNegative, kIndependent, kMixed };

std::string_view to_string(RelevanceClass c);

struct RelevanceReport {
  RelevanceClass relevance = RelevanceClass::kMixed;
  // margins[i] = Pr(p_i | all other p_j, context) - Pr(p_i | context);
  // empty when the conditioning event has probability zero.
  std::vector<std::optional<Rational>> margins;
};

// Classifies how confirming the other members of `props` moves each member.
// Positive: every margin > tolerance; negative: every margin < -tolerance;
// independent: every |margin| <= tolerance; mixed otherwise, including when
// any margin is undefined. `context` is conditioned on throughout (the
// tautology by default). Throws InputError for fewer than two propositions.
RelevanceReport classify_relevance(const WorldModel& m, std::span<const Formula> props,
                                   const Rational& tolerance = 0,
                                   const Formula& context = Formula::True());

// Conjunction of every element of `fs` except `fs[skip]`.
Formula conjoin_except(std::span<const Formula> fs, std::size_t skip);

}  // namespace nmr

#endif  // NMR_PROB_RELEVANCE_H_
