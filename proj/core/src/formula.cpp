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

#include "nmr/logic/formula.h"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

namespace nmr {

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<std::string> args;
  std::vector<Formula> operands;
};

namespace {

const std::vector<std::string> kNoArgs;

// Binding strength used by the printer; larger binds tighter.
int precedence(Connective c) {
  switch (c) {
    case Connective::kIff: return 1;
    case Connective::kImplies: return 2;
    case Connective::kOr: return 3;
    case Connective::kAnd: return 4;
    case Connective::kNot: return 5;
    default: return 6;
  }
}

void print(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print(f, out);
  if (parens) out += ')';
}

void print(const Formula& f, std::string& out) {
  const Connective k = f.kind();
  const int level = precedence(k);
  auto ops = f.operands();
  switch (k) {
    case Connective::kTrue: out += "true"; return;
    case Connective::kFalse: out += "false"; return;
    case Connective::kAtom:
      out += f.name();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += f.args()[i];
        }
        out += ')';
      }
      return;
    case Connective::kNot:
      out += '~';
      print_operand(ops[0], precedence(ops[0].kind()) < level, out);
      return;
    case Connective::kAnd:
    case Connective::kOr:
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += k == Connective::kAnd ? " & " : " | ";
        print_operand(ops[i], precedence(ops[i].kind()) <= level, out);
      }
      return;
    case Connective::kImplies:
      // Right associative.
      print_operand(ops[0], precedence(ops[0].kind()) <= level, out);
      out += " -> ";
      print_operand(ops[1], precedence(ops[1].kind()) < level, out);
      return;
    case Connective::kIff:
      // Left associative.
      print_operand(ops[0], precedence(ops[0].kind()) < level, out);
      out += " <-> ";
      print_operand(ops[1], precedence(ops[1].kind()) <= level, out);
      return;
    case Connective::kExactlyOne:
    case Connective::kAtLeastOne:
      out += k == Connective::kExactlyOne ? "exactly_one(" : "at_least_one(";
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) out += ", ";
        print(ops[i], out);
      }
      out += ')';
      return;
  }
}

}  // namespace

bool is_variable_name(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

std::string flatten_application(std::string_view predicate,
                                std::span<const std::string> args) {
  std::string out(predicate);
  for (const auto& a : args) {
    out += '_';
    out += a;
  }
  return out;
}

Formula::Formula() : Formula(True()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::True() {
  static const Formula t(std::make_shared<const Node>(Node{Connective::kTrue, {}, {}, {}}));
  return t;
}

Formula Formula::False() {
  static const Formula f(std::make_shared<const Node>(Node{Connective::kFalse, {}, {}, {}}));
  return f;
}

Formula Formula::Atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAtom, std::move(name), {}, {}}));
}

Formula Formula::Apply(std::string predicate, std::vector<std::string> args) {
  if (args.empty()) return Atom(std::move(predicate));
  const bool ground = std::none_of(args.begin(), args.end(),
                                   [](const std::string& a) { return is_variable_name(a); });
  if (ground) return Atom(flatten_application(predicate, args));
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAtom, std::move(predicate), std::move(args), {}}));
}

Formula Formula::Not(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Connective::kNot, {}, {}, {std::move(f)}}));
}

Formula Formula::And(std::vector<Formula> fs) {
  if (fs.empty()) return True();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula(std::make_shared<const Node>(Node{Connective::kAnd, {}, {}, std::move(fs)}));
}

Formula Formula::Or(std::vector<Formula> fs) {
  if (fs.empty()) return False();
  if (fs.size() == 1) return std::move(fs.front());
  return Formula(std::make_shared<const Node>(Node{Connective::kOr, {}, {}, std::move(fs)}));
}

Formula Formula::Implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kImplies, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::Iff(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kIff, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::ExactlyOne(std::vector<Formula> fs) {
  if (fs.empty()) return False();
  return Formula(std::make_shared<const Node>(Node{Connective::kExactlyOne, {}, {}, std::move(fs)}));
}

Formula Formula::AtLeastOne(std::vector<Formula> fs) {
  if (fs.empty()) return False();
  return Formula(std::make_shared<const Node>(Node{Connective::kAtLeastOne, {}, {}, std::move(fs)}));
}

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_constant() const {
  return node_->kind == Connective::kTrue || node_->kind == Connective::kFalse;
}

const std::string& Formula::name() const { return node_->name; }

const std::vector<std::string>& Formula::args() const {
  return node_->kind == Connective::kAtom ? node_->args : kNoArgs;
}

std::span<const Formula> Formula::operands() const { return node_->operands; }

bool Formula::is_ground() const {
  if (node_->kind == Connective::kAtom) return node_->args.empty();
  return std::all_of(node_->operands.begin(), node_->operands.end(),
                     [](const Formula& f) { return f.is_ground(); });
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.kind() == Connective::kAtom) {
      out.insert(f.args().empty() ? f.name() : flatten_application(f.name(), f.args()));
      return;
    }
    for (const auto& g : f.operands()) walk(g);
  };
  walk(*this);
  return out;
}

std::set<std::string> Formula::variables() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    for (const auto& a : f.args())
      if (is_variable_name(a)) out.insert(a);
    for (const auto& g : f.operands()) walk(g);
  };
  walk(*this);
  return out;
}

Formula Formula::substitute(const std::map<std::string, std::string>& binding) const {
  if (is_ground()) return *this;
  if (node_->kind == Connective::kAtom) {
    std::vector<std::string> args = node_->args;
    for (auto& a : args) {
      auto it = binding.find(a);
      if (it != binding.end()) a = it->second;
    }
    return Apply(node_->name, std::move(args));
  }
  std::vector<Formula> ops;
  ops.reserve(node_->operands.size());
  for (const auto& g : node_->operands) ops.push_back(g.substitute(binding));
  return Formula(std::make_shared<const Node>(Node{node_->kind, {}, {}, std::move(ops)}));
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (node_->kind != other.node_->kind)
    return node_->kind < other.node_->kind ? -1 : 1;
  if (int c = node_->name.compare(other.node_->name)) return c < 0 ? -1 : 1;
  if (node_->args != other.node_->args) return node_->args < other.node_->args ? -1 : 1;
  const auto& a = node_->operands;
  const auto& b = other.node_->operands;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = a[i].compare(b[i])) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool evaluate(const Formula& f, const std::function<bool(const std::string&)>& value) {
  auto ops = f.operands();
  switch (f.kind()) {
    case Connective::kTrue: return true;
    case Connective::kFalse: return false;
    case Connective::kAtom:
      assert(f.args().empty());
      return value(f.name());
    case Connective::kNot: return !evaluate(ops[0], value);
    case Connective::kAnd:
      return std::all_of(ops.begin(), ops.end(), [&](const Formula& g) { return evaluate(g, value); });
    case Connective::kOr:
      return std::any_of(ops.begin(), ops.end(), [&](const Formula& g) { return evaluate(g, value); });
    case Connective::kImplies: return !evaluate(ops[0], value) || evaluate(ops[1], value);
    case Connective::kIff: return evaluate(ops[0], value) == evaluate(ops[1], value);
    case Connective::kExactlyOne:
      return std::count_if(ops.begin(), ops.end(), [&](const Formula& g) { return evaluate(g, value); }) == 1;
    case Connective::kAtLeastOne:
      return std::any_of(ops.begin(), ops.end(), [&](const Formula& g) { return evaluate(g, value); });
  }
  return false;
}

Formula conjoin(std::span<const Formula> fs) {
  return Formula::And(std::vector<Formula>(fs.begin(), fs.end()));
}

Formula disjoin(std::span<const Formula> fs) {
  return Formula::Or(std::vector<Formula>(fs.begin(), fs.end()));
}

std::vector<Formula> conjuncts(const Formula& f) {
  if (f.kind() == Connective::kAnd) return {f.operands().begin(), f.operands().end()};
  if (f.kind() == Connective::kTrue) return {};
  return {f};
}

void sort_canonical(std::vector<Formula>& fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
}

}  // namespace nmr
