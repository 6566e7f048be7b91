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

#ifndef NMR_TESTS_SUPPORT_H_
#define NMR_TESTS_SUPPORT_H_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nmr/logic/formula.h"

namespace nmr::testing {

// Truth-table reference, written against the formula tree only.
inline bool eval(const Formula& f, const std::map<std::string, bool>& v) {
  auto ops = f.operands();
  int count = 0;
  switch (f.kind()) {
    case Connective::kTrue: return true;
    case Connective::kFalse: return false;
    case Connective::kAtom: return v.at(f.name());
    case Connective::kNot: return !eval(ops[0], v);
    case Connective::kAnd:
      for (const auto& g : ops)
        if (!eval(g, v)) return false;
      return true;
    case Connective::kOr:
      for (const auto& g : ops)
        if (eval(g, v)) return true;
      return false;
    case Connective::kImplies: return !eval(ops[0], v) || eval(ops[1], v);
    case Connective::kIff: return eval(ops[0], v) == eval(ops[1], v);
    case Connective::kExactlyOne:
      for (const auto& g : ops) count += eval(g, v);
      return count == 1;
    case Connective::kAtLeastOne:
      for (const auto& g : ops) count += eval(g, v);
      return count >= 1;
  }
  return false;
}

inline std::vector<std::string> atoms_of(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const auto& f : fs)
    for (const auto& a : f.atoms()) s.insert(a);
  return {s.begin(), s.end()};
}

// Calls `visit` with every assignment to `atoms`; stops early when it
// returns false.
inline void for_each_assignment(const std::vector<std::string>& atoms,
                                const std::function<bool(const std::map<std::string, bool>&)>& visit) {
  const std::uint64_t n = atoms.size();
  std::map<std::string, bool> v;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::uint64_t i = 0; i < n; ++i) v[atoms[i]] = (mask >> i) & 1u;
    if (!visit(v)) return;
  }
}

inline bool tt_consistent(const std::vector<Formula>& fs) {
  bool found = false;
  for_each_assignment(atoms_of(fs), [&](const auto& v) {
    for (const auto& f : fs)
      if (!eval(f, v)) return true;
    found = true;
    return false;
  });
  return found;
}

inline bool tt_entails(std::vector<Formula> kb, const Formula& q) {
  kb.push_back(Formula::Not(q));
  return !tt_consistent(kb);
}

inline bool tt_equivalent(const Formula& a, const Formula& b) {
  return tt_entails({a}, b) && tt_entails({b}, a);
}

// Seeded random ground formulas over p0..p{atoms-1}.
class FormulaGen {
 public:
  FormulaGen(std::uint32_t seed, int atoms) : rng_(seed), atoms_(atoms) {}

  Formula atom() { return Formula::Atom("p" + std::to_string(pick(atoms_))); }

  Formula operator()(int depth) {
    if (depth == 0 || pick(5) == 0) {
      switch (pick(12)) {
        case 0: return Formula::True();
        case 1: return Formula::False();
        default: return atom();
      }
    }
    switch (pick(8)) {
      case 0: return Formula::Not((*this)(depth - 1));
      case 1: return Formula::And(list(depth));
      case 2: return Formula::Or(list(depth));
      case 3: return Formula::Implies((*this)(depth - 1), (*this)(depth - 1));
      case 4: return Formula::Iff((*this)(depth - 1), (*this)(depth - 1));
      case 5: return Formula::ExactlyOne(list(depth));
      case 6: return Formula::AtLeastOne(list(depth));
      default: return Formula::Not(atom());
    }
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  std::mt19937& rng() { return rng_; }

 private:
  std::vector<Formula> list(int depth) {
    std::vector<Formula> out;
    const int k = 2 + pick(3);
    for (int i = 0; i < k; ++i) out.push_back((*this)(depth - 1));
    return out;
  }

  std::mt19937 rng_;
  int atoms_;
};

}  // namespace nmr::testing

#endif  // NMR_TESTS_SUPPORT_H_
