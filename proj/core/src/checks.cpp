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

#include "nmr/prob/checks.h"

#include <algorithm>

namespace nmr {

namespace {

DefeaterCheck run_check(const WorldModel& m, Formula target, std::vector<Formula> conditions) {
  DefeaterCheck c;
  c.target = std::move(target);
  c.conditions = std::move(conditions);
  c.rhs = probability(m, c.target);
  for (const auto& h : c.conditions) c.lhs.push_back(conditional(m, c.target, h));
  c.holds = !c.lhs.empty() &&
            std::all_of(c.lhs.begin(), c.lhs.end(), [&](const Rational& l) { return l < c.rhs; });
  return c;
}

std::vector<Formula> leave_one_out(std::span<const Formula> fs) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(conjoin_except(fs, i));
  return out;
}

std::vector<Formula> negate_all(std::span<const Formula> fs) {
  std::vector<Formula> out;
  for (const auto& f : fs) out.push_back(Formula::Not(f));
  return out;
}

}  // namespace

DefeaterCheck check_preface_defeater(const WorldModel& m, std::span<const Formula> statements) {
  const auto negated = negate_all(statements);
  auto c = run_check(m, disjoin(negated), leave_one_out(statements));
  if (statements.size() >= 2) {
    c.relevance = classify_relevance(m, statements);
    if (c.relevance->relevance != RelevanceClass::kPositive)
      c.warnings.push_back("statement relevance is " +
                           std::string(to_string(c.relevance->relevance)) + ", expected positive");
  } else {
    c.warnings.push_back("fewer than two statements: relevance undefined");
  }
  return c;
}

DefeaterCheck check_unfair_lottery(const WorldModel& m, std::span<const Formula> tickets) {
  const auto losing = negate_all(tickets);
  auto c = run_check(m, disjoin(tickets), leave_one_out(losing));
  if (tickets.size() >= 2) {
    c.relevance = classify_relevance(m, losing);
    if (c.relevance->relevance != RelevanceClass::kNegative)
      c.warnings.push_back("losing-ticket relevance is " +
                           std::string(to_string(c.relevance->relevance)) + ", expected negative");
  } else {
    c.warnings.push_back("fewer than two tickets: relevance undefined");
  }
  return c;
}

}  // namespace nmr
