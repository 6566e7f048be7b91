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

#ifndef NMR_LOGIC_SOLVER_H_
#define NMR_LOGIC_SOLVER_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmr/logic/cnf.h"
#include "nmr/logic/formula.h"

namespace nmr {

// Complete DPLL search with unit propagation. Variables are dense indices;
// literal 2v is v, 2v+1 is ~v.
class DpllSolver {
 public:
  explicit DpllSolver(std::size_t num_vars) : num_vars_(num_vars) {}

  void add_clause(std::vector<int> lits);
  std::size_t num_vars() const { return num_vars_; }

  // Returns a satisfying assignment, or nothing if the clauses are
  // unsatisfiable.
  std::optional<std::vector<bool>> solve();

  static int pos(int var) { return 2 * var; }
  static int neg(int var) { return 2 * var + 1; }

 private:
  enum class Value : signed char { kFalse = -1, kUnset = 0, kTrue = 1 };

  Value value_of(int lit) const;
  bool propagate(std::vector<int>& trail);
  bool search(std::vector<int>& trail);
  void assign(int lit, std::vector<int>& trail);

  std::size_t num_vars_;
  std::vector<std::vector<int>> clauses_;
  std::vector<Value> assignment_;
  bool has_empty_ = false;
};

// Solves a clause set over named atoms; returns a model keyed by atom name.
std::optional<std::map<std::string, bool>> solve(const ClauseSet& cs);

// True iff some truth assignment satisfies every formula in `fs`.
bool is_consistent(std::span<const Formula> fs);
bool is_consistent(std::initializer_list<Formula> fs);

// True iff `kb` together with `~q` is inconsistent.
bool entails(std::span<const Formula> kb, const Formula& q);
bool entails(std::initializer_list<Formula> kb, const Formula& q);

}  // namespace nmr

#endif  // NMR_LOGIC_SOLVER_H_
