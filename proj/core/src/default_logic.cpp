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

#include "nmr/defaults/default_logic.h"

#include <algorithm>
#include <map>
#include <set>

#include "nmr/errors.h"
#include "nmr/logic/schema.h"
#include "nmr/logic/solver.h"

namespace nmr {

namespace {

std::vector<Formula> with(std::span<const Formula> base, const Formula& f) {
  std::vector<Formula> out(base.begin(), base.end());
  out.push_back(f);
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const DefaultTheory& t) : t_(t) {}

  std::set<std::vector<bool>> run() {
    std::vector<bool> applied(t_.defaults.size(), false);
    visit(applied);
    return closed_;
  }

 private:
  std::vector<Formula> base_of(const std::vector<bool>& applied) const {
    std::vector<Formula> base = t_.facts;
    for (std::size_t i = 0; i < applied.size(); ++i)
      if (applied[i]) base.push_back(t_.defaults[i].consequent);
    return base;
  }

  // Depth-first over application orders, memoized on the applied set: the
  // base and applicability only depend on the set, not on the order.
  void visit(std::vector<bool>& applied) {
    if (!seen_.insert(applied).second) return;
    const auto base = base_of(applied);

    // A justification refuted by the current base stays refuted: the base
    // only grows along a branch.
    for (std::size_t i = 0; i < applied.size(); ++i) {
      if (!applied[i]) continue;
      for (const auto& b : t_.defaults[i].justifications)
        if (!is_consistent(with(base, b))) return;
    }

    bool extended = false;
    for (std::size_t i = 0; i < applied.size(); ++i) {
      if (applied[i] || !applicable(t_.defaults[i], base)) continue;
      extended = true;
      applied[i] = true;
      visit(applied);
      applied[i] = false;
    }
    if (!extended) closed_.insert(applied);
  }

  const DefaultTheory& t_;
  std::set<std::vector<bool>> seen_;
  std::set<std::vector<bool>> closed_;
};

Extension make_extension(const DefaultTheory& t, std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  std::map<std::string, const DefaultRule*> by_id;
  for (const auto& d : t.defaults) by_id.emplace(d.id, &d);
  Extension e;
  e.base = t.facts;
  for (const auto& id : ids) e.base.push_back(by_id.at(id)->consequent);
  e.generating_defaults = std::move(ids);
  return e;
}

}  // namespace

bool DefaultRule::is_normal() const {
  return justifications.size() == 1 && justifications.front() == consequent;
}

bool DefaultRule::is_ground() const {
  return prerequisite.is_ground() && consequent.is_ground() &&
         std::all_of(justifications.begin(), justifications.end(),
                     [](const Formula& f) { return f.is_ground(); });
}

std::vector<std::string> DefaultRule::variables() const {
  std::set<std::string> vars = prerequisite.variables();
  vars.merge(consequent.variables());
  for (const auto& j : justifications) vars.merge(j.variables());
  return {vars.begin(), vars.end()};
}

bool DefaultTheory::is_ground() const {
  return std::all_of(facts.begin(), facts.end(), [](const Formula& f) { return f.is_ground(); }) &&
         std::all_of(defaults.begin(), defaults.end(),
                     [](const DefaultRule& d) { return d.is_ground(); });
}

bool DefaultTheory::is_normal() const {
  return std::all_of(defaults.begin(), defaults.end(),
                     [](const DefaultRule& d) { return d.is_normal(); });
}

DefaultTheory ground_theory(const DefaultTheory& theory) {
  DefaultTheory out;
  out.domain = theory.domain;
  for (const auto& f : theory.facts) {
    const auto vars = f.variables();
    for (auto& g : ground({f, {vars.begin(), vars.end()}}, theory.domain))
      out.facts.push_back(std::move(g));
  }
  std::set<std::string> ids;
  for (const auto& d : theory.defaults) {
    const auto vars = d.variables();
    for (const auto& b : bindings(vars, theory.domain)) {
      DefaultRule g;
      std::vector<std::string> consts;
      for (const auto& v : vars) consts.push_back(b.at(v));
      g.id = flatten_application(d.id, consts);
      g.prerequisite = d.prerequisite.substitute(b);
      for (const auto& j : d.justifications) g.justifications.push_back(j.substitute(b));
      g.consequent = d.consequent.substitute(b);
      if (!ids.insert(g.id).second) throw InputError("duplicate default id " + g.id);
      out.defaults.push_back(std::move(g));
    }
  }
  return out;
}

bool applicable(const DefaultRule& d, std::span<const Formula> base) {
  if (!entails(base, d.prerequisite)) return false;
  return std::all_of(d.justifications.begin(), d.justifications.end(),
                     [&](const Formula& b) { return is_consistent(with(base, b)); });
}

bool is_extension(const DefaultTheory& theory, std::span<const std::string> ids) {
  const std::set<std::string> gen(ids.begin(), ids.end());
  std::vector<const DefaultRule*> in, out;
  for (const auto& d : theory.defaults) (gen.contains(d.id) ? in : out).push_back(&d);
  if (in.size() != gen.size()) return false;  // unknown or duplicate id

  std::vector<Formula> base = theory.facts;
  for (const auto* d : in) base.push_back(d->consequent);

  for (const auto* d : in)
    if (!applicable(*d, base)) return false;
  for (const auto* d : out)
    if (applicable(*d, base)) return false;

  // Groundedness: every generating prerequisite must become derivable when
  // applying generating defaults one at a time from W.
  std::vector<Formula> reached = theory.facts;
  std::vector<const DefaultRule*> pending = in;
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      if (entails(reached, (*it)->prerequisite)) {
        reached.push_back((*it)->consequent);
        it = pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
  }
  return pending.empty();
}

std::vector<Extension> extensions(const DefaultTheory& theory, const ExtensionOptions& options) {
  if (!theory.is_ground()) throw InputError("default theory must be ground; call ground_theory first");
  if (theory.defaults.size() > options.max_defaults)
    throw LimitError("theory has " + std::to_string(theory.defaults.size()) +
                     " ground defaults; the limit is " + std::to_string(options.max_defaults));
  {
    std::set<std::string> ids;
    for (const auto& d : theory.defaults) {
      if (d.justifications.empty()) throw InputError("default " + d.id + " has no justification");
      if (!ids.insert(d.id).second) throw InputError("duplicate default id " + d.id);
    }
  }

  if (!is_consistent(theory.facts)) {
    Extension e;
    e.base = theory.facts;
    e.trivial = true;
    return {e};
  }

  std::vector<Extension> out;
  for (const auto& applied : Enumerator(theory).run()) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < applied.size(); ++i)
      if (applied[i]) ids.push_back(theory.defaults[i].id);
    std::sort(ids.begin(), ids.end());
    // Intermediate applications of non-normal defaults can be invalidated
    // later; only fixpoints of the final base survive.
    if (!is_extension(theory, ids)) continue;
    out.push_back(make_extension(theory, std::move(ids)));
  }
  std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) {
    return a.generating_defaults < b.generating_defaults;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QueryResult query(std::span<const Extension> exts, const Formula& q, QueryMode mode) {
  QueryResult r;
  if (mode == QueryMode::kCredulous) {
    for (std::size_t i = 0; i < exts.size(); ++i)
      if (entails(exts[i].base, q)) r.witnesses.push_back(i);
    r.answer = !r.witnesses.empty();
    return r;
  }
  r.vacuous = exts.empty();
  r.answer = true;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    if (!entails(exts[i].base, q)) {
      r.answer = false;
      r.witnesses.push_back(i);
      break;
    }
  }
  return r;
}

bool credulous_entails(const DefaultTheory& theory, const Formula& q) {
  const auto exts = extensions(theory);
  return query(exts, q, QueryMode::kCredulous).answer;
}

bool skeptical_entails(const DefaultTheory& theory, const Formula& q) {
  const auto exts = extensions(theory);
  return query(exts, q, QueryMode::kSkeptical).answer;
}

}  // namespace nmr
