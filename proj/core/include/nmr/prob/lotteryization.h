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

#ifndef NMR_PROB_LOTTERYIZATION_H_
#define NMR_PROB_LOTTERYIZATION_H_

#include <string_view>

#include "nmr/prob/world_model.h"
#include "nmr/rational.h"

namespace nmr {

// P split into N disjuncts p_1 | ... | p_N, with q = Pr(~P).
struct LotteryizationParams {
  Rational q;
  int n = 2;

  // Throws InputError unless 0 < q < 1 and n >= 2.
  void validate() const;
};

// Atoms p_1..p_N. One world with every p_j false (weight q) and N worlds
// with exactly one p_j true (weight (1 - q)/N each).
WorldModel lotteryization_model(const LotteryizationParams& p);

// 1 - q / (q + 1/N): the printed closed form, which takes Pr(p_j | P) = 1/N
// as the probability of p_j.
Rational lotteryization_value_paper(const LotteryizationParams& p);

// Pr(p_j | all other p_k false) by enumeration over lotteryization_model.
// Throws std::logic_error if the enumeration disagrees with the closed form
// 1 - q / (q + (1 - q)/N).
Rational lotteryization_value_exact(const LotteryizationParams& p);

// 1 - q / (q + (1 - q)/N).
Rational lotteryization_closed_form(const LotteryizationParams& p);

// Side-by-side comparison of the printed and the exact derivation.
struct LotteryizationComparison {
  Rational paper_value;
  Rational exact_value;
  Rational paper_condition_probability;  // q + 1/N
  Rational exact_condition_probability;  // q + (1 - q)/N, by enumeration
  bool discrepancy = false;
};

LotteryizationComparison compare_lotteryization(const LotteryizationParams& p);

enum class ValueMode { kPaper, kExact };

std::string_view to_string(ValueMode m);

struct WarrantThreshold {
  ValueMode mode = ValueMode::kPaper;
  // Smallest N >= 2 whose value is strictly below 1/2; A1 needs r > 1/2, so
  // a value of exactly 1/2 already blocks acceptance but does not count as
  // the flip point.
  int n = 2;
  Rational value;           // value at n
  Rational previous_value;  // value at n - 1 (undefined when n == 2)
  // Printed bound: N > ceil(1/q) (paper) or N > (1 - q)/q (exact).
  Rational bound;
};

WarrantThreshold warrant_threshold(const Rational& q, ValueMode mode);

}  // namespace nmr

#endif  // NMR_PROB_LOTTERYIZATION_H_
