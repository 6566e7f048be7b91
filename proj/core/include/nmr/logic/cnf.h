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

#ifndef NMR_LOGIC_CNF_H_
#define NMR_LOGIC_CNF_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/logic/formula.h"

namespace nmr {

struct Literal {
  std::string atom;
  bool positive = true;

  Literal negated() const { return {atom, !positive}; }
  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

// A normalized set of clauses: literals sorted and unique within a clause,
// tautological clauses dropped, clauses sorted and unique.
class ClauseSet {
 public:
  ClauseSet() = default;

  // Adds `c` after normalization; returns false if it was a tautology.
  bool add(Clause c);
  void add_all(const ClauseSet& other);

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }
  bool has_empty_clause() const;

  bool operator==(const ClauseSet&) const = default;

 private:
  std::vector<Clause> clauses_;
};

// Names reserved for definitional atoms; the DSL cannot produce them.
bool is_auxiliary_atom(std::string_view name);

// Converts formulas to clauses. Small disjunctions are distributed, which is
// equivalence preserving; once a distribution would exceed
// `kDistributeLimit` clauses, the offending operands are named by fresh
// auxiliary atoms (one-sided definitions). Either way the satisfying
// assignments projected onto the original atoms are unchanged. One encoder
// shared across formulas keeps auxiliary names disjoint.
class CnfEncoder {
 public:
  static constexpr std::size_t kDistributeLimit = 64;

  void encode(const Formula& f, ClauseSet& out);
  std::size_t auxiliary_count() const { return fresh_; }

 private:
  std::vector<Clause> clausify(const Formula& nnf, ClauseSet& defs);
  std::size_t fresh_ = 0;
};

ClauseSet to_cnf(const Formula& f);

// Negation normal form over {and, or, not-atom, true, false}; sugar
// connectives, implications and biconditionals are expanded.
Formula to_nnf(const Formula& f);

}  // namespace nmr

#endif  // NMR_LOGIC_CNF_H_
