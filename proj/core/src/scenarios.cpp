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

#include "nmr/scenarios/scenarios.h"

#include <algorithm>
#include <set>

#include "nmr/errors.h"
#include "nmr/prob/lotteryization.h"

namespace nmr {

namespace {

constexpr int kMaxTickets = 1000;
constexpr int kMaxPrefaceStatements = 20;

Formula indexed(const std::string& stem, int i) { return Formula::Atom(stem + "_" + std::to_string(i)); }

std::vector<Formula> indexed_atoms(const std::string& stem, int n) {
  std::vector<Formula> out;
  for (int i = 1; i <= n; ++i) out.push_back(indexed(stem, i));
  return out;
}

std::vector<std::string> indexed_names(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + "_" + std::to_string(i));
  return out;
}

std::vector<Formula> negate_all(const std::vector<Formula>& fs) {
  std::vector<Formula> out;
  for (const auto& f : fs) out.push_back(Formula::Not(f));
  return out;
}

Formula at_most_one(const std::vector<Formula>& fs) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      parts.push_back(Formula::Not(Formula::And({fs[i], fs[j]})));
  return Formula::And(std::move(parts));
}

// One unit world per atom, plus an optional all-false world.
std::vector<World> unit_worlds(int n, const Rational& each) {
  std::vector<World> out;
  for (int i = 0; i < n; ++i) {
    std::vector<bool> bits(n, false);
    bits[i] = true;
    out.push_back({std::move(bits), each});
  }
  return out;
}

// Candidates {~x_i} plus the disjunction, with the disjunction probed by
// every leave-one-out conjunction of the ~x_i.
void add_lottery_candidates(Scenario& s, const std::vector<Formula>& xs) {
  const auto losing = negate_all(xs);
  for (const auto& f : losing) s.candidates.push_back({f, Formula::True()});
  const Formula some = disjoin(xs);
  s.candidates.push_back({some, Formula::True()});
  for (std::size_t i = 0; i < losing.size(); ++i)
    s.undercuts.push_back({some, conjoin_except(losing, i)});
}

bool in_open_unit(const Rational& r) { return r > 0 && r < 1; }

void check_identifier(const std::string& name) {
  const bool ok = !name.empty() && name.front() >= 'a' && name.front() <= 'z' &&
                  std::all_of(name.begin(), name.end(), [](char c) {
                    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
                  });
  if (!ok) throw InputError("bird kind '" + name + "' is not a lowercase identifier");
}

}  // namespace

DefaultTheory Scenario::grounded_theory() const {
  if (!theory) throw InputError("scenario " + name + " has no default theory");
  return ground_theory(*theory);
}

WarrantProblem Scenario::warrant_problem() const {
  if (!model) throw InputError("scenario " + name + " has no world model");
  return {*model, background, candidates, undercuts};
}

std::vector<Formula> Scenario::candidate_conclusions() const {
  std::vector<Formula> out;
  for (const auto& c : candidates) out.push_back(c.conclusion);
  return out;
}

std::vector<BirdKind> default_bird_kinds() {
  return {{"emu", false, true}, {"penguin", false, true}, {"canary", true, true},
          {"sandpiper", true, true}};
}

Scenario make_nixon() {
  const Formula quaker = Formula::Atom("quaker");
  const Formula republican = Formula::Atom("republican");
  const Formula pacifist = Formula::Atom("pacifist");
  DefaultTheory t;
  t.facts = {Formula::And({quaker, republican})};
  t.defaults = {{"d1", quaker, {pacifist}, pacifist},
                {"d2", republican, {Formula::Not(pacifist)}, Formula::Not(pacifist)}};
  Scenario s;
  s.name = "nixon";
  s.theory = std::move(t);
  s.expectations.extension_count = 2;
  return s;
}

Scenario make_tweety(const std::vector<BirdKind>& kinds) {
  if (kinds.size() < 2) throw InputError("tweety needs at least two bird kinds");
  std::set<std::string> names;
  std::size_t exceptional = 0;
  for (const auto& k : kinds) {
    check_identifier(k.name);
    if (k.name == "bird" || k.name == "flies")
      throw InputError("bird kind '" + k.name + "' clashes with a reserved predicate");
    if (!names.insert(k.name).second) throw InputError("duplicate bird kind '" + k.name + "'");
    if (k.exceptional) ++exceptional;
  }
  if (exceptional == 0) throw InputError("tweety needs at least one exceptional kind");

  auto pred = [](const std::string& p) { return Formula::Apply(p, {"X"}); };
  std::vector<Formula> kind_atoms;
  for (const auto& k : kinds) kind_atoms.push_back(pred(k.name));

  DefaultTheory t;
  t.domain = {"tweety"};
  t.facts.push_back(Formula::Apply("bird", {"tweety"}));
  t.facts.push_back(Formula::Iff(pred("bird"), disjoin(kind_atoms)));
  t.facts.push_back(at_most_one(kind_atoms));
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const Formula flies = pred("flies");
    t.facts.push_back(Formula::Implies(kind_atoms[i], kinds[i].flies ? flies : Formula::Not(flies)));
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (!kinds[i].exceptional) continue;
    const Formula not_kind = Formula::Not(kind_atoms[i]);
    t.defaults.push_back({"not_" + kinds[i].name, pred("bird"), {not_kind}, not_kind});
  }

  Scenario s;
  s.name = "tweety";
  s.theory = std::move(t);
  s.expectations.extension_count = exceptional == kinds.size() ? exceptional : 1;
  return s;
}

Scenario make_fair_lottery(int n) {
  if (n < 2 || n > kMaxTickets) throw InputError("fair lottery needs 2 <= n <= 1000");
  const auto tickets = indexed_atoms("t", n);
  const Formula one_winner = Formula::ExactlyOne(tickets);

  DefaultTheory t;
  t.facts = {one_winner};
  for (int i = 1; i <= n; ++i) {
    const Formula lose = Formula::Not(tickets[i - 1]);
    t.defaults.push_back({"lose_" + std::to_string(i), Formula::True(), {lose}, lose});
  }

  Scenario s;
  s.name = "fair_lottery";
  s.theory = std::move(t);
  s.model = WorldModel(indexed_names("t", n), unit_worlds(n, Rational(1, n)));
  s.background = {one_winner};
  add_lottery_candidates(s, tickets);
  s.statements = tickets;
  s.expectations.extension_count = static_cast<std::size_t>(n);
  s.expectations.relevance = RelevanceClass::kNegative;
  s.expectations.notes = {
      "no ticket is skeptically known to lose",
      "the claim that not all tickets can be concluded to be winning is read as losing tickets"};
  return s;
}

Scenario make_unfair_lottery(int n, const Rational& fair_weight) {
  if (n < 2 || n > kMaxTickets) throw InputError("unfair lottery needs 2 <= n <= 1000");
  if (fair_weight <= 0 || fair_weight > 1) throw InputError("fair_weight must lie in (0, 1]");
  const auto tickets = indexed_atoms("t", n);

  std::vector<World> worlds;
  if (fair_weight < 1) worlds.push_back({std::vector<bool>(n, false), 1 - fair_weight});
  for (auto& w : unit_worlds(n, fair_weight / n)) worlds.push_back(std::move(w));

  Scenario s;
  s.name = "unfair_lottery";
  s.model = WorldModel(indexed_names("t", n), std::move(worlds));
  s.background = {at_most_one(tickets)};
  add_lottery_candidates(s, tickets);
  s.statements = tickets;
  s.expectations.relevance = RelevanceClass::kNegative;
  s.expectations.notes = {"some draws contain no winning ticket"};
  return s;
}

Scenario make_preface(int n, const Rational& good_rate, const Rational& p_good,
                      const Rational& p_bad) {
  if (n < 1 || n > kMaxPrefaceStatements) throw InputError("preface needs 1 <= n <= 20");
  if (!in_open_unit(good_rate) || !in_open_unit(p_good) || !in_open_unit(p_bad))
    throw InputError("preface rates must lie strictly between 0 and 1");
  if (p_good < p_bad) throw InputError("preface needs p_good >= p_bad");

  std::vector<std::string> atoms{"competent"};
  for (auto& a : indexed_names("s", n)) atoms.push_back(std::move(a));
  const std::size_t width = atoms.size();

  std::vector<World> worlds;
  for (unsigned long mask = 0; mask < (1ul << width); ++mask) {
    std::vector<bool> bits(width);
    for (std::size_t i = 0; i < width; ++i) bits[i] = (mask >> (width - 1 - i)) & 1u;
    const bool competent = bits[0];
    const Rational& p = competent ? p_good : p_bad;
    Rational w = competent ? good_rate : 1 - good_rate;
    for (std::size_t i = 1; i < width; ++i) w *= bits[i] ? p : 1 - p;
    worlds.push_back({std::move(bits), std::move(w)});
  }

  const auto statements = indexed_atoms("s", n);
  Scenario s;
  s.name = "preface";
  s.model = WorldModel(std::move(atoms), std::move(worlds));
  for (const auto& f : statements) s.candidates.push_back({f, Formula::True()});
  const Formula some_error = disjoin(negate_all(statements));
  s.candidates.push_back({some_error, Formula::True()});
  for (std::size_t i = 0; i < statements.size(); ++i)
    s.undercuts.push_back({some_error, conjoin_except(statements, i)});
  s.statements = statements;
  if (n >= 2)
    s.expectations.relevance = p_good > p_bad ? RelevanceClass::kPositive : RelevanceClass::kIndependent;
  s.expectations.notes = {"statements share a latent competence cause"};
  return s;
}

Scenario make_korb(int m, int n, const Rational& q) {
  if (m < 2 || n < 2 || m > kMaxTickets || n > kMaxTickets)
    throw InputError("korb needs 2 <= m, n <= 1000");
  if (!in_open_unit(q)) throw InputError("q must lie strictly between 0 and 1");

  std::vector<std::string> atoms{"p", "q"};
  for (auto& a : indexed_names("p", m)) atoms.push_back(std::move(a));
  for (auto& a : indexed_names("q", n)) atoms.push_back(std::move(a));
  const std::size_t width = atoms.size();

  std::vector<World> worlds;
  for (int i = 0; i < m; ++i) {
    std::vector<bool> bits(width, false);
    bits[0] = true;
    bits[2 + i] = true;
    worlds.push_back({std::move(bits), (1 - q) / m});
  }
  for (int j = 0; j < n; ++j) {
    std::vector<bool> bits(width, false);
    bits[1] = true;
    bits[2 + m + j] = true;
    worlds.push_back({std::move(bits), q / n});
  }

  const Formula p = Formula::Atom("p");
  const Formula qq = Formula::Atom("q");
  const auto ps = indexed_atoms("p", m);
  const auto qs = indexed_atoms("q", n);

  Scenario s;
  s.name = "korb";
  s.model = WorldModel(std::move(atoms), std::move(worlds));
  s.background = {Formula::Iff(p, Formula::Not(qq)), Formula::Iff(p, disjoin(ps)),
                  Formula::Iff(qq, disjoin(qs))};
  for (const auto& f : negate_all(ps)) s.candidates.push_back({f, Formula::True()});
  for (const auto& f : negate_all(qs)) s.candidates.push_back({f, Formula::True()});
  s.candidates.push_back({p, Formula::True()});
  s.statements = ps;
  s.expectations.notes = {"with p accepted, only the p_i partition is minimally inconsistent"};
  return s;
}

Scenario make_lotteryization(const Rational& q, int n) {
  const LotteryizationParams params{q, n};
  params.validate();
  if (n > kMaxTickets) throw InputError("lotteryization needs n <= 1000");
  const auto parts = indexed_atoms("p", n);

  Scenario s;
  s.name = "lotteryization";
  s.model = lotteryization_model(params);
  s.background = {at_most_one(parts)};
  add_lottery_candidates(s, parts);
  s.statements = parts;
  s.expectations.notes = {"p is split into the disjunction of the p_i"};
  return s;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"fair_lottery", "korb",           "lotteryization",
                                              "nixon",        "preface",        "tweety",
                                              "unfair_lottery"};
  return names;
}

Scenario make_scenario(std::string_view name, const ScenarioParams& p) {
  if (name == "nixon") return make_nixon();
  if (name == "tweety") return make_tweety();
  if (name == "fair_lottery") return make_fair_lottery(p.n.value_or(5));
  if (name == "unfair_lottery")
    return make_unfair_lottery(p.n.value_or(5), p.fair_weight.value_or(Rational(99, 100)));
  if (name == "preface")
    return make_preface(p.n.value_or(4), p.good_rate.value_or(Rational(9, 10)),
                        p.p_good.value_or(Rational(19, 20)), p.p_bad.value_or(Rational(1, 2)));
  if (name == "korb")
    return make_korb(p.m.value_or(3), p.n.value_or(3), p.q.value_or(Rational(1, 10)));
  if (name == "lotteryization")
    return make_lotteryization(p.q.value_or(Rational(1, 10)), p.n.value_or(5));
  throw InputError("unknown scenario '" + std::string(name) + "'");
}

TheoryDocument to_document(const Scenario& s) {
  TheoryDocument doc;
  if (s.theory) {
    doc.domain = s.theory->domain;
    doc.facts = s.theory->facts;
    doc.defaults = s.theory->defaults;
  }
  if (s.model) {
    doc.atoms = s.model->atoms();
    doc.worlds = s.model->worlds();
  }
  for (const auto& f : s.background)
    if (std::find(doc.facts.begin(), doc.facts.end(), f) == doc.facts.end())
      doc.background.push_back(f);
  doc.candidates = s.candidates;
  doc.undercuts = s.undercuts;
  return doc;
}

}  // namespace nmr
