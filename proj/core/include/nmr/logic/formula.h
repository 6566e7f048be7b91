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

#ifndef NMR_LOGIC_FORMULA_H_
#define NMR_LOGIC_FORMULA_H_

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmr {

enum class Connective {
  kTrue,
  kFalse,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kExactlyOne,
  kAtLeastOne,
};

// Immutable propositional formula. Copies share structure, so values are
// cheap to pass around and safe to read from several threads.
//
// Atoms are identified by name. A predicate application `p(a, b)` whose
// arguments are all constants is flattened to the atom `p_a_b` on
// construction; applications mentioning a variable (an argument starting with
// an uppercase letter) keep their argument list until they are grounded.
class Formula {
 public:
  // Defaults to the constant `true`.
  Formula();

  static Formula True();
  static Formula False();
  static Formula Atom(std::string name);
  static Formula Apply(std::string predicate, std::vector<std::string> args);
  static Formula Not(Formula f);
  static Formula And(std::vector<Formula> fs);
  static Formula Or(std::vector<Formula> fs);
  static Formula Implies(Formula lhs, Formula rhs);
  static Formula Iff(Formula lhs, Formula rhs);
  static Formula ExactlyOne(std::vector<Formula> fs);
  static Formula AtLeastOne(std::vector<Formula> fs);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::kAtom; }
  bool is_constant() const;

  // Atom name (flattened when ground); empty for non-atoms.
  const std::string& name() const;
  // Predicate arguments of a non-ground application; empty otherwise.
  const std::vector<std::string>& args() const;
  std::span<const Formula> operands() const;

  bool is_ground() const;
  std::set<std::string> atoms() const;
  std::set<std::string> variables() const;

  // Replaces variables by constants; unbound variables are left in place.
  Formula substitute(const std::map<std::string, std::string>& binding) const;

  // Total structural order, used for canonical sorting.
  int compare(const Formula& other) const;
  bool operator==(const Formula& other) const { return compare(other) == 0; }
  bool operator<(const Formula& other) const { return compare(other) < 0; }

  // Renders in the textual syntax accepted by the DSL parser.
  std::string to_string() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

bool is_variable_name(std::string_view s);
std::string flatten_application(std::string_view predicate,
                                std::span<const std::string> args);

// Evaluates `f` under the valuation `value`. Sugar connectives are evaluated
// directly from their definition.
bool evaluate(const Formula& f,
              const std::function<bool(const std::string&)>& value);

// Conjunction of `fs`, `true` when empty, `fs[0]` when singleton.
Formula conjoin(std::span<const Formula> fs);
// Disjunction of `fs`, `false` when empty, `fs[0]` when singleton.
Formula disjoin(std::span<const Formula> fs);

// The conjuncts of `f`: operands when `f` is an `and`, `{f}` otherwise.
std::vector<Formula> conjuncts(const Formula& f);

void sort_canonical(std::vector<Formula>& fs);

}  // namespace nmr

#endif  // NMR_LOGIC_FORMULA_H_
