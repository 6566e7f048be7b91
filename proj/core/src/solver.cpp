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

#include "nmr/logic/solver.h"

#include <algorithm>

namespace nmr {

void DpllSolver::add_clause(std::vector<int> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i)
    if ((lits[i] ^ 1) == lits[i + 1]) return;  // tautology
  if (lits.empty()) has_empty_ = true;
  clauses_.push_back(std::move(lits));
}

DpllSolver::Value DpllSolver::value_of(int lit) const {
  const Value v = assignment_[lit >> 1];
  if (v == Value::kUnset) return v;
  const bool is_true = (v == Value::kTrue) != static_cast<bool>(lit & 1);
  return is_true ? Value::kTrue : Value::kFalse;
}

void DpllSolver::assign(int lit, std::vector<int>& trail) {
  assignment_[lit >> 1] = (lit & 1) ? Value::kFalse : Value::kTrue;
  trail.push_back(lit >> 1);
}

bool DpllSolver::propagate(std::vector<int>& trail) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : clauses_) {
      int unset = -1;
      int unset_count = 0;
      bool satisfied = false;
      for (int lit : c) {
        const Value v = value_of(lit);
        if (v == Value::kTrue) {
          satisfied = true;
          break;
        }
        if (v == Value::kUnset) {
          unset = lit;
          ++unset_count;
        }
      }
      if (satisfied) continue;
      if (unset_count == 0) return false;
      if (unset_count == 1) {
        assign(unset, trail);
        changed = true;
      }
    }
  }
  return true;
}

bool DpllSolver::search(std::vector<int>& trail) {
  if (!propagate(trail)) return false;

  // Branch on the most frequent unassigned variable of an open clause.
  std::vector<int> score(num_vars_, 0);
  int best = -1;
  for (const auto& c : clauses_) {
    if (std::any_of(c.begin(), c.end(), [&](int l) { return value_of(l) == Value::kTrue; }))
      continue;
    for (int lit : c) {
      const int v = lit >> 1;
      if (assignment_[v] != Value::kUnset) continue;
      if (++score[v] > (best < 0 ? 0 : score[best])) best = v;
    }
  }
  if (best < 0) return true;

  for (int lit : {pos(best), neg(best)}) {
    const std::size_t mark = trail.size();
    assign(lit, trail);
    if (search(trail)) return true;
    while (trail.size() > mark) {
      assignment_[trail.back()] = Value::kUnset;
      trail.pop_back();
    }
  }
  return false;
}

std::optional<std::vector<bool>> DpllSolver::solve() {
  if (has_empty_) return std::nullopt;
  assignment_.assign(num_vars_, Value::kUnset);
  std::vector<int> trail;
  if (!search(trail)) return std::nullopt;
  std::vector<bool> model(num_vars_);
  for (std::size_t v = 0; v < num_vars_; ++v) model[v] = assignment_[v] == Value::kTrue;
  return model;
}

std::optional<std::map<std::string, bool>> solve(const ClauseSet& cs) {
  std::map<std::string, int> index;
  for (const auto& c : cs.clauses())
    for (const auto& l : c) index.emplace(l.atom, 0);
  int next = 0;
  for (auto& [name, id] : index) id = next++;

  DpllSolver solver(index.size());
  for (const auto& c : cs.clauses()) {
    std::vector<int> lits;
    lits.reserve(c.size());
    for (const auto& l : c) {
      const int v = index.at(l.atom);
      lits.push_back(l.positive ? DpllSolver::pos(v) : DpllSolver::neg(v));
    }
    solver.add_clause(std::move(lits));
  }
  auto model = solver.solve();
  if (!model) return std::nullopt;
  std::map<std::string, bool> out;
  for (const auto& [name, id] : index) out.emplace(name, (*model)[id]);
  return out;
}

bool is_consistent(std::span<const Formula> fs) {
  ClauseSet cs;
  CnfEncoder encoder;
  for (const auto& f : fs) {
    encoder.encode(f, cs);
    if (cs.has_empty_clause()) return false;
  }
  return solve(cs).has_value();
}

bool is_consistent(std::initializer_list<Formula> fs) {
  return is_consistent(std::span<const Formula>(fs.begin(), fs.size()));
}

bool entails(std::span<const Formula> kb, const Formula& q) {
  std::vector<Formula> all(kb.begin(), kb.end());
  all.push_back(Formula::Not(q));
  return !is_consistent(all);
}

bool entails(std::initializer_list<Formula> kb, const Formula& q) {
  return entails(std::span<const Formula>(kb.begin(), kb.size()), q);
}

}  // namespace nmr
