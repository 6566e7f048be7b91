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

#include "nmr/defeat/defeat.h"

#include <algorithm>
#include <map>
#include <set>

#include "nmr/errors.h"
#include "nmr/logic/solver.h"

namespace nmr {

namespace {

std::string describe(const Rational& r) { return to_string(r); }

bool undefeated(WarrantStatus s) {
  return s == WarrantStatus::kWarranted || s == WarrantStatus::kCollectivelyDefeated;
}

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Calls `visit` with every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Formula> pick(std::span<const Formula> base, std::span<const Formula> all,
                          const std::vector<std::size_t>& idx) {
  std::vector<Formula> out(base.begin(), base.end());
  for (auto i : idx) out.push_back(all[i]);
  return out;
}

}  // namespace

void EngineConfig::validate() const {
  if (acceptance_threshold <= 0 || acceptance_threshold >= 1)
    throw InputError("acceptance threshold must lie strictly between 0 and 1");
  if (tie_epsilon < 0) throw InputError("tie epsilon must be nonnegative");
  if (relevance_tolerance < 0) throw InputError("relevance tolerance must be nonnegative");
}

std::string_view to_string(WarrantStatus s) {
  switch (s) {
    case WarrantStatus::kWarranted: return "warranted";
    case WarrantStatus::kRebutted: return "rebutted";
    case WarrantStatus::kUndercut: return "undercut";
    case WarrantStatus::kCollectivelyDefeated: return "collectively_defeated";
    case WarrantStatus::kBelowThreshold: return "below_threshold";
  }
  return "below_threshold";
}

std::string_view to_string(GateMode g) { return g == GateMode::kOn ? "on" : "off"; }

std::string_view to_string(RelevanceMode r) {
  return r == RelevanceMode::kPollock ? "pollock" : "always";
}

std::string_view to_string(DefeaterKind k) {
  return k == DefeaterKind::kUndercutting ? "undercutting" : "rebutting";
}

std::optional<Reason> apply_a1(const WorldModel& m, const Formula& evidence,
                               const Formula& conclusion, const EngineConfig& config,
                               std::string id) {
  const Rational r = conditional(m, conclusion, evidence);
  if (!(r > config.acceptance_threshold)) return std::nullopt;
  // Projectibility is assumed.
  return Reason{std::move(id), conclusion, evidence, r,
                r == 1 ? ReasonKind::kDeductive : ReasonKind::kPrimaFacie};
}

UndercutSearch find_undercutters(const WorldModel& m, const Reason& target,
                                 std::span<const Formula> conditions,
                                 std::span<const Formula> candidate_conclusions,
                                 const EngineConfig& config) {
  UndercutSearch out;
  if (target.kind == ReasonKind::kDeductive) {
    out.warnings.push_back("reason " + target.id + " is deductive and cannot be undercut");
    return out;
  }
  for (const auto& h : conditions) {
    const auto parts = conjuncts(h);
    const bool shaped = !parts.empty() && std::all_of(parts.begin(), parts.end(), [&](const Formula& c) {
      return !(c == target.conclusion) &&
             std::find(candidate_conclusions.begin(), candidate_conclusions.end(), c) !=
                 candidate_conclusions.end();
    });
    if (!shaped) {
      out.warnings.push_back("condition " + h.to_string() +
                             " is not a conjunction of other candidate conclusions; skipped");
      continue;
    }
    const Formula gh = Formula::And({target.evidence, h});
    if (probability(m, gh) == 0) {
      out.warnings.push_back("condition " + h.to_string() + " has probability zero; skipped");
      continue;
    }
    Defeater d;
    d.kind = DefeaterKind::kUndercutting;
    d.target = target.id;
    d.condition = h;
    d.conditioned = conditional(m, target.conclusion, gh);
    d.unconditioned = target.strength;
    d.gate_probability = conditional(m, h, target.evidence);
    if (d.conditioned == d.unconditioned) continue;
    if (config.gate == GateMode::kOn && !(d.gate_probability > config.acceptance_threshold))
      out.suppressed.push_back(std::move(d));
    else
      out.defeaters.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<std::size_t>> minimal_inconsistent_subsets(
    std::span<const Formula> background, std::span<const Formula> candidates) {
  if (!is_consistent(background)) throw InputError("background knowledge is inconsistent");
  if (candidates.size() > 20)
    throw LimitError("minimal inconsistent set search is limited to 20 candidates");

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> all(candidates.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (is_consistent(pick(background, candidates, all))) return found;

  // Increasing size: an inconsistent subset containing no smaller hit is
  // minimal, since any inconsistent proper subset would contain one.
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    for_each_combination(candidates.size(), k, [&](const std::vector<std::size_t>& idx) {
      for (const auto& f : found)
        if (is_subset(f, idx)) return;
      if (!is_consistent(pick(background, candidates, idx))) found.push_back(idx);
    });
  }

  for (const auto& s : found) {
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) rest.push_back(s[j]);
      if (!is_consistent(pick(background, candidates, rest)))
        throw std::logic_error("minimal inconsistent set search returned a non-minimal set");
    }
  }
  return found;
}

std::vector<std::vector<Formula>> minimal_inconsistent_sets(
    std::span<const Formula> background, std::span<const Formula> candidates) {
  std::vector<std::vector<Formula>> out;
  for (const auto& idx : minimal_inconsistent_subsets(background, candidates))
    out.push_back(pick({}, candidates, idx));
  return out;
}

void collective_defeat(const WorldModel& m, std::vector<CandidateReport>& entries,
                       std::vector<InconsistentSet>& sets, const EngineConfig& config) {
  std::vector<WarrantStatus> incoming;
  for (const auto& e : entries) incoming.push_back(e.status);

  for (std::size_t s = 0; s < sets.size(); ++s) {
    auto& set = sets[s];
    if (set.members.size() < 2) {
      set.note = "singleton: handled as a deductive rebuttal";
      continue;
    }
    bool reasons_ok = true;
    Rational lo, hi;
    for (std::size_t k = 0; k < set.members.size(); ++k) {
      const auto& e = entries.at(set.members[k]);
      if (!undefeated(incoming[set.members[k]]) || !e.reason) {
        reasons_ok = false;
        break;
      }
      if (k == 0 || e.reason->strength < lo) lo = e.reason->strength;
      if (k == 0 || e.reason->strength > hi) hi = e.reason->strength;
    }
    if (!reasons_ok) {
      set.note = "not every member has an undefeated prima facie reason";
      continue;
    }
    if (hi - lo > config.tie_epsilon) {
      set.note = "reasons are not equally good (strengths " + describe(lo) + " to " + describe(hi) + ")";
      continue;
    }
    if (config.relevance == RelevanceMode::kPollock) {
      std::vector<Formula> members;
      for (auto i : set.members) members.push_back(entries[i].conclusion);
      set.relevance = classify_relevance(m, members, config.relevance_tolerance, conjoin(set.context));
      if (set.relevance->relevance != RelevanceClass::kNegative) {
        set.note = "member relevance is " + std::string(to_string(set.relevance->relevance)) +
                   ", not negative; collective defeat does not apply";
        continue;
      }
    }
    set.defeated = true;
    set.note = "collective defeat";
    for (auto i : set.members) {
      auto& e = entries[i];
      e.status = WarrantStatus::kCollectivelyDefeated;
      e.provenance.push_back({"collective_defeat", "member of minimal inconsistent set #" +
                                                       std::to_string(set.id)});
    }
  }
}

WarrantReport compute_warrants(const WarrantProblem& problem, const EngineConfig& config) {
  config.validate();
  const WorldModel& m = problem.model;
  WarrantReport report;
  report.config = config;
  if (!is_consistent(problem.background)) throw InputError("background knowledge is inconsistent");

  std::vector<Formula> conclusions;
  for (const auto& c : problem.candidates) conclusions.push_back(c.conclusion);

  // A1.
  for (std::size_t i = 0; i < problem.candidates.size(); ++i) {
    const auto& c = problem.candidates[i];
    CandidateReport e;
    e.conclusion = c.conclusion;
    e.evidence = c.evidence;
    e.probability = conditional(m, c.conclusion, c.evidence);
    e.reason = apply_a1(m, c.evidence, c.conclusion, config, "a1:" + std::to_string(i));
    if (e.reason) {
      e.status = WarrantStatus::kWarranted;
      const bool deductive = e.reason->kind == ReasonKind::kDeductive;
      e.provenance.push_back({"A1", std::string(deductive ? "deductive" : "prima facie") +
                                        " reason of strength " + describe(e.reason->strength)});
    } else {
      e.status = WarrantStatus::kBelowThreshold;
      e.provenance.push_back({"A1", "Pr = " + describe(e.probability) + " does not exceed " +
                                        describe(config.acceptance_threshold)});
    }
    report.entries.push_back(std::move(e));
  }

  // D1.
  std::vector<std::pair<Formula, std::vector<Formula>>> probes;
  for (const auto& u : problem.undercuts) {
    auto it = std::find_if(probes.begin(), probes.end(), [&](const auto& p) { return p.first == u.target; });
    if (it == probes.end()) probes.push_back({u.target, {u.condition}});
    else it->second.push_back(u.condition);
  }
  for (const auto& [target, conditions] : probes) {
    bool matched = false;
    for (auto& e : report.entries) {
      if (!(e.conclusion == target)) continue;
      matched = true;
      if (!e.reason) continue;
      auto search = find_undercutters(m, *e.reason, conditions, conclusions, config);
      for (auto& w : search.warnings) report.warnings.push_back(std::move(w));
      for (const auto& d : search.suppressed)
        e.provenance.push_back({"gate", "undercutter " + d.condition.to_string() +
                                            " suppressed: Pr(H | G) = " + describe(d.gate_probability) +
                                            " does not exceed " + describe(config.acceptance_threshold)});
      e.suppressed = std::move(search.suppressed);
      if (search.defeaters.empty()) continue;
      e.status = WarrantStatus::kUndercut;
      for (const auto& d : search.defeaters) {
        std::string detail = "Pr(F | G & H) = " + describe(d.conditioned) + " != Pr(F | G) = " +
                             describe(d.unconditioned) + " with H = " + d.condition.to_string();
        detail += d.conditioned > config.acceptance_threshold
                      ? "; the conditional reason alone would still clear the threshold"
                      : "; the conditional reason does not clear the threshold";
        e.provenance.push_back({"D1", std::move(detail)});
      }
      e.defeaters = std::move(search.defeaters);
    }
    if (!matched) report.warnings.push_back("undercut target " + target.to_string() + " is not a candidate");
  }

  // Rebutting: a candidate against its negation, both with standing reasons.
  {
    std::vector<WarrantStatus> incoming;
    for (const auto& e : report.entries) incoming.push_back(e.status);
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      for (std::size_t j = i + 1; j < report.entries.size(); ++j) {
        if (incoming[i] != WarrantStatus::kWarranted || incoming[j] != WarrantStatus::kWarranted) continue;
        auto& a = report.entries[i];
        auto& b = report.entries[j];
        if (!entails(problem.background, Formula::Iff(a.conclusion, Formula::Not(b.conclusion)))) continue;
        const Rational diff = a.reason->strength - b.reason->strength;
        auto rebut = [&](CandidateReport& loser, const CandidateReport& winner) {
          Defeater d;
          d.kind = DefeaterKind::kRebutting;
          d.target = loser.reason->id;
          d.condition = winner.conclusion;
          d.source = winner.reason->id;
          d.source_strength = winner.reason->strength;
          loser.defeaters.push_back(d);
          loser.status = WarrantStatus::kRebutted;
          loser.provenance.push_back({"rebut", "negation " + winner.conclusion.to_string() +
                                                   " has a reason of strength " +
                                                   describe(winner.reason->strength)});
        };
        if (abs(diff) <= config.tie_epsilon) {
          rebut(a, b);
          rebut(b, a);
        } else if (diff > 0) {
          rebut(b, a);
        } else {
          rebut(a, b);
        }
      }
    }
  }

  // Collective defeat, strongest tier first.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    if (report.entries[i].status == WarrantStatus::kWarranted) order.push_back(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return report.entries[a].reason->strength > report.entries[b].reason->strength;
  });

  std::vector<Formula> accepted;
  for (std::size_t start = 0; start < order.size();) {
    const Rational top = report.entries[order[start]].reason->strength;
    std::size_t end = start;
    while (end < order.size() && top - report.entries[order[end]].reason->strength <= config.tie_epsilon)
      ++end;
    std::vector<std::size_t> tier(order.begin() + start, order.begin() + end);
    std::sort(tier.begin(), tier.end());
    start = end;

    std::vector<Formula> context = problem.background;
    context.insert(context.end(), accepted.begin(), accepted.end());
    std::vector<Formula> tier_formulas;
    for (auto i : tier) tier_formulas.push_back(report.entries[i].conclusion);

    std::vector<InconsistentSet> tier_sets;
    std::set<std::size_t> in_some_set;
    for (const auto& local : minimal_inconsistent_subsets(context, tier_formulas)) {
      InconsistentSet set;
      set.id = report.sets.size() + tier_sets.size();
      for (auto k : local) set.members.push_back(tier[k]);
      set.context = accepted;
      for (auto i : set.members) in_some_set.insert(i);
      if (set.members.size() == 1) {
        auto& e = report.entries[set.members.front()];
        Defeater d;
        d.kind = DefeaterKind::kRebutting;
        d.target = e.reason->id;
        d.condition = Formula::Not(e.conclusion);
        d.source = "deduction";
        d.source_strength = e.reason->strength;
        e.defeaters.push_back(d);
        e.status = WarrantStatus::kRebutted;
        e.provenance.push_back({"rebut", "negation follows from the background and stronger accepted conclusions"});
      }
      tier_sets.push_back(std::move(set));
    }
    collective_defeat(m, report.entries, tier_sets, config);

    for (auto i : tier)
      if (!in_some_set.contains(i)) accepted.push_back(report.entries[i].conclusion);
    for (auto& s : tier_sets) report.sets.push_back(std::move(s));
  }

  for (auto& e : report.entries)
    if (e.status == WarrantStatus::kWarranted)
      e.provenance.push_back({"warrant", e.reason->kind == ReasonKind::kDeductive
                                             ? "deductive reason"
                                             : "undefeated prima facie reason"});
  return report;
}

}  // namespace nmr
