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

#include "nmr/logic/cnf.h"

#include <algorithm>
#include <cassert>

namespace nmr {

namespace {

constexpr std::string_view kAuxPrefix = "#aux";

Formula nnf(const Formula& f, bool negate);

std::vector<Formula> nnf_all(std::span<const Formula> fs, bool negate) {
  std::vector<Formula> out;
  out.reserve(fs.size());
  for (const auto& g : fs) out.push_back(nnf(g, negate));
  return out;
}

// Pairwise exclusion: for all i < j, ~(f_i & f_j), already in NNF.
std::vector<Formula> at_most_one_nnf(std::span<const Formula> fs) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      out.push_back(Formula::Or({nnf(fs[i], true), nnf(fs[j], true)}));
  return out;
}

Formula nnf(const Formula& f, bool negate) {
  auto ops = f.operands();
  switch (f.kind()) {
    case Connective::kTrue: return negate ? Formula::False() : f;
    case Connective::kFalse: return negate ? Formula::True() : f;
    case Connective::kAtom: return negate ? Formula::Not(f) : f;
    case Connective::kNot: return nnf(ops[0], !negate);
    case Connective::kAnd:
      return negate ? Formula::Or(nnf_all(ops, true)) : Formula::And(nnf_all(ops, false));
    case Connective::kOr:
      return negate ? Formula::And(nnf_all(ops, true)) : Formula::Or(nnf_all(ops, false));
    case Connective::kImplies:
      if (negate) return Formula::And({nnf(ops[0], false), nnf(ops[1], true)});
      return Formula::Or({nnf(ops[0], true), nnf(ops[1], false)});
    case Connective::kIff: {
      const Formula a = nnf(ops[0], false), na = nnf(ops[0], true);
      const Formula b = nnf(ops[1], false), nb = nnf(ops[1], true);
      if (negate) return Formula::And({Formula::Or({a, b}), Formula::Or({na, nb})});
      return Formula::And({Formula::Or({na, b}), Formula::Or({a, nb})});
    }
    case Connective::kAtLeastOne:
      return negate ? Formula::And(nnf_all(ops, true)) : Formula::Or(nnf_all(ops, false));
    case Connective::kExactlyOne: {
      if (!negate) {
        std::vector<Formula> parts{Formula::Or(nnf_all(ops, false))};
        for (auto& g : at_most_one_nnf(ops)) parts.push_back(std::move(g));
        return Formula::And(std::move(parts));
      }
      // None holds, or some pair holds together.
      std::vector<Formula> alts{Formula::And(nnf_all(ops, true))};
      for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
          alts.push_back(Formula::And({nnf(ops[i], false), nnf(ops[j], false)}));
      return Formula::Or(std::move(alts));
    }
  }
  return f;
}

bool normalize(Clause& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i].atom == c[i + 1].atom) return false;  // both polarities
  return true;
}

}  // namespace

bool ClauseSet::add(Clause c) {
  if (!normalize(c)) return false;
  auto it = std::lower_bound(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end() || *it != c) clauses_.insert(it, std::move(c));
  return true;
}

void ClauseSet::add_all(const ClauseSet& other) {
  for (const auto& c : other.clauses_) add(c);
}

bool ClauseSet::has_empty_clause() const {
  return !clauses_.empty() && clauses_.front().empty();
}

bool is_auxiliary_atom(std::string_view name) { return name.starts_with(kAuxPrefix); }

Formula to_nnf(const Formula& f) { return nnf(f, false); }

std::vector<Clause> CnfEncoder::clausify(const Formula& f, ClauseSet& defs) {
  auto ops = f.operands();
  switch (f.kind()) {
    case Connective::kTrue: return {};
    case Connective::kFalse: return {Clause{}};
    case Connective::kAtom: return {Clause{{f.name(), true}}};
    case Connective::kNot:
      assert(ops[0].kind() == Connective::kAtom);
      return {Clause{{ops[0].name(), false}}};
    case Connective::kAnd: {
      std::vector<Clause> out;
      for (const auto& g : ops) {
        auto part = clausify(g, defs);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return out;
    }
    case Connective::kOr: {
      std::vector<std::vector<Clause>> parts;
      std::size_t product = 1;
      for (const auto& g : ops) {
        auto part = clausify(g, defs);
        if (part.empty()) return {};  // one disjunct is valid
        product = std::min<std::size_t>(product * part.size(), kDistributeLimit + 1);
        parts.push_back(std::move(part));
      }
      if (product > kDistributeLimit) {
        for (auto& part : parts) {
          if (part.size() == 1) continue;
          Literal name{std::string(kAuxPrefix) + std::to_string(++fresh_), true};
          for (auto& c : part) {
            c.push_back(name.negated());
            defs.add(std::move(c));
          }
          part = {Clause{name}};
        }
      }
      std::vector<Clause> acc{Clause{}};
      for (const auto& part : parts) {
        std::vector<Clause> next;
        for (const auto& a : acc)
          for (const auto& b : part) {
            Clause c = a;
            c.insert(c.end(), b.begin(), b.end());
            if (normalize(c)) next.push_back(std::move(c));
          }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      assert(false && "clausify expects NNF");
      return {};
  }
}

void CnfEncoder::encode(const Formula& f, ClauseSet& out) {
  ClauseSet defs;
  for (auto& c : clausify(to_nnf(f), defs)) out.add(std::move(c));
  out.add_all(defs);
}

ClauseSet to_cnf(const Formula& f) {
  ClauseSet out;
  CnfEncoder().encode(f, out);
  return out;
}

}  // namespace nmr
