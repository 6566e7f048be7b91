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

#include "nmr/prob/relevance.h"

#include <algorithm>

#include "nmr/errors.h"

namespace nmr {

std::string_view to_string(RelevanceClass c) {
  switch (c) {
    case RelevanceClass::kPositive: return "positive";
    case RelevanceClass::kNegative: return "negative";
    case RelevanceClass::kIndependent: return "independent";
    case RelevanceClass::kMixed: return "mixed";
  }
  return "mixed";
}

Formula conjoin_except(std::span<const Formula> fs, std::size_t skip) {
  std::vector<Formula> rest;
  for (std::size_t j = 0; j < fs.size(); ++j)
    if (j != skip) rest.push_back(fs[j]);
  return Formula::And(std::move(rest));
}

RelevanceReport classify_relevance(const WorldModel& m, std::span<const Formula> props,
                                   const Rational& tolerance, const Formula& context) {
  if (props.size() < 2) throw InputError("relevance needs at least two propositions");
  RelevanceReport r;
  for (std::size_t i = 0; i < props.size(); ++i) {
    const Formula others = Formula::And({conjoin_except(props, i), context});
    if (probability(m, others) == 0) {
      r.margins.emplace_back();
      continue;
    }
    r.margins.emplace_back(conditional(m, props[i], others) - conditional(m, props[i], context));
  }

  const auto all = [&](auto pred) {
    return std::all_of(r.margins.begin(), r.margins.end(),
                       [&](const std::optional<Rational>& x) { return x && pred(*x); });
  };
  if (all([&](const Rational& x) { return x > tolerance; }))
    r.relevance = RelevanceClass::kPositive;
  else if (all([&](const Rational& x) { return x < -tolerance; }))
    r.relevance = RelevanceClass::kNegative;
  else if (all([&](const Rational& x) { return abs(x) <= tolerance; }))
    r.relevance = RelevanceClass::kIndependent;
  else
    r.relevance = RelevanceClass::kMixed;
  return r;
}

}  // namespace nmr
