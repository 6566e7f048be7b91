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

#ifndef NMR_DEFEAT_DEFEAT_H_
#define NMR_DEFEAT_DEFEAT_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmr/logic/formula.h"
#include "nmr/prob/relevance.h"
#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

enum class ReasonKind { kPrimaFacie, kDeductive };

// A reason for `conclusion` from the reference condition `evidence`, with
// strength Pr(conclusion | evidence).
struct Reason {
  std::string id;
  Formula conclusion;
  Formula evidence;
  Rational strength;
  ReasonKind kind = ReasonKind::kPrimaFacie;
};

enum class DefeaterKind { kUndercutting, kRebutting };

struct Defeater {
  DefeaterKind kind = DefeaterKind::kUndercutting;
  std::string target;  // reason id
  // Undercutting: the condition H. Rebutting: the rebutting conclusion.
  Formula condition;
  // Undercutting: Pr(F | G & H) and Pr(F | G).
  Rational conditioned;
  Rational unconditioned;
  // Undercutting: Pr(H | G), recorded in every gate mode for auditing.
  Rational gate_probability;
  // Rebutting: id and strength of the opposing reason ("deduction" for
  // refutation by background plus stronger accepted conclusions).
  std::string source;
  Rational source_strength;
};

enum class GateMode { kOff, kOn };
enum class RelevanceMode { kAlways, kPollock };

struct EngineConfig {
  // A1 fires only when Pr(F | G) is strictly above this.
  Rational acceptance_threshold{1, 2};
  // Strengths within this distance count as equally good.
  Rational tie_epsilon{0};
  // On: an undercutting condition must itself be acceptable, i.e.
  // Pr(H | G) > acceptance_threshold.
  GateMode gate = GateMode::kOff;
  // kPollock: collective defeat only fires on negatively relevant sets.
  RelevanceMode relevance = RelevanceMode::kPollock;
  Rational relevance_tolerance{0};

  // Throws InputError unless 0 < threshold < 1 and tolerances are >= 0.
  void validate() const;
};

enum class WarrantStatus {
  kWarranted,
  kRebutted,
  kUndercut,
  kCollectivelyDefeated,
  kBelowThreshold,
};

std::string_view to_string(WarrantStatus s);
std::string_view to_string(GateMode g);
std::string_view to_string(RelevanceMode r);
std::string_view to_string(DefeaterKind k);

struct Provenance {
  std::string rule;
  std::string detail;
};

struct Candidate {
  Formula conclusion;
  Formula evidence = Formula::True();

  bool operator==(const Candidate&) const = default;
};

// Tests the reason for `target` against the undercutting condition
// `condition`.
struct UndercutProbe {
  Formula target;
  Formula condition;

  bool operator==(const UndercutProbe&) const = default;
};

struct WarrantProblem {
  WorldModel model;
  std::vector<Formula> background;
  std::vector<Candidate> candidates;
  std::vector<UndercutProbe> undercuts;
};

struct CandidateReport {
  Formula conclusion;
  Formula evidence;
  WarrantStatus status = WarrantStatus::kBelowThreshold;
  // Pr(conclusion | evidence), whether or not A1 fired.
  Rational probability;
  std::optional<Reason> reason;
  std::vector<Defeater> defeaters;
  // Undercutters blocked by the acceptance gate.
  std::vector<Defeater> suppressed;
  std::vector<Provenance> provenance;
};

// A minimal set of candidates inconsistent with the background plus the
// conclusions already accepted from stronger tiers (`context`).
struct InconsistentSet {
  std::size_t id = 0;  // position in WarrantReport::sets
  std::vector<std::size_t> members;  // candidate indices, ascending
  std::vector<Formula> context;
  std::optional<RelevanceReport> relevance;
  bool defeated = false;
  std::string note;
};

struct WarrantReport {
  EngineConfig config;
  std::vector<CandidateReport> entries;
  std::vector<InconsistentSet> sets;
  std::vector<std::string> warnings;
};

// A1: a prima facie reason for `conclusion` if Pr(conclusion | evidence)
// exceeds the acceptance threshold strictly. Throws ZeroProbabilityError when
// Pr(evidence) = 0.
std::optional<Reason> apply_a1(const WorldModel& m, const Formula& evidence,
                               const Formula& conclusion, const EngineConfig& config,
                               std::string id = "a1");

struct UndercutSearch {
  std::vector<Defeater> defeaters;
  std::vector<Defeater> suppressed;  // failed the acceptance gate
  std::vector<std::string> warnings;
};

// D1: H undercuts the reason when Pr(F | G & H) != Pr(F | G), decided
// exactly. H must be a conjunction of candidate conclusions other than F;
// other shapes and conditions with Pr(G & H) = 0 are skipped with a warning.
UndercutSearch find_undercutters(const WorldModel& m, const Reason& target,
                                 std::span<const Formula> conditions,
                                 std::span<const Formula> candidate_conclusions,
                                 const EngineConfig& config);

// All subset-minimal S of `candidates` with background + S inconsistent, as
// ascending index lists ordered by size and then lexicographically. Throws
// InputError when the background is inconsistent and LimitError past 20
// candidates.
std::vector<std::vector<std::size_t>> minimal_inconsistent_subsets(
    std::span<const Formula> background, std::span<const Formula> candidates);

std::vector<std::vector<Formula>> minimal_inconsistent_sets(
    std::span<const Formula> background, std::span<const Formula> candidates);

// Marks the members of every eligible set collectively defeated. A set is
// eligible when it has at least two members, every member holds an undefeated
// prima facie reason (warranted or already collectively defeated), the
// strengths agree within tie_epsilon, and, in kPollock mode, the members are
// negatively relevant given the set's context. Eligibility is judged on the
// incoming statuses, so the outcome does not depend on set order.
void collective_defeat(const WorldModel& m, std::vector<CandidateReport>& entries,
                       std::vector<InconsistentSet>& sets, const EngineConfig& config);

// A1 over the candidates, D1 undercutting (per gate mode), rebutting between
// a candidate and its negation, then collective defeat. Surviving reasons are
// processed in tiers of equal strength, strongest first; conclusions accepted
// in earlier tiers join the background of later ones, and singleton
// inconsistent sets are deductive rebuttals. Defeated conclusions are not
// reinstated.
WarrantReport compute_warrants(const WarrantProblem& problem, const EngineConfig& config);

}  // namespace nmr

#endif  // NMR_DEFEAT_DEFEAT_H_
