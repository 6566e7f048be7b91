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

#include "nmr/prob/lotteryization.h"

#include <gtest/gtest.h>

#include "nmr/errors.h"

namespace nmr {
namespace {

const std::vector<Rational> kGrid{Rational(1, 1000), Rational(1, 100), Rational(1, 10), Rational(1, 2)};

TEST(LotteryizationTest, PaperValues) {
  EXPECT_EQ(lotteryization_value_paper({Rational(1, 10), 5}), Rational(2, 3));
  EXPECT_EQ(lotteryization_value_paper({Rational(1, 10), 11}), Rational(10, 21));
  EXPECT_EQ(lotteryization_value_paper({Rational(1, 10), 10}), Rational(1, 2));
  EXPECT_LT(lotteryization_value_paper({Rational(1, 10), 20}), lotteryization_value_paper({Rational(1, 10), 5}));
}

TEST(LotteryizationTest, ExactValues) {
  EXPECT_EQ(lotteryization_value_exact({Rational(1, 10), 5}), Rational(9, 14));
  EXPECT_EQ(lotteryization_value_exact({Rational(1, 2), 2}), Rational(1, 3));
  EXPECT_EQ(lotteryization_value_exact({Rational(1, 10), 9}), Rational(1, 2));
  EXPECT_EQ(lotteryization_value_exact({Rational(1, 10), 10}), Rational(9, 19));
  EXPECT_EQ(lotteryization_value_exact({Rational(1, 1000), 5}), Rational(999, 1004));
}

TEST(LotteryizationTest, PaperAndExactConvergeForSmallQ) {
  const LotteryizationParams p{Rational(1, 1000), 5};
  Rational gap = lotteryization_value_paper(p) - lotteryization_value_exact(p);
  if (gap < 0) gap = -gap;
  EXPECT_LT(gap, Rational(1, 1000));
}

TEST(LotteryizationTest, ComparisonReport) {
  const auto c = compare_lotteryization({Rational(1, 10), 5});
  EXPECT_EQ(c.paper_value, Rational(2, 3));
  EXPECT_EQ(c.exact_value, Rational(9, 14));
  EXPECT_EQ(c.paper_condition_probability, Rational(3, 10));
  EXPECT_EQ(c.exact_condition_probability, Rational(7, 25));
  EXPECT_TRUE(c.discrepancy);
}

TEST(LotteryizationTest, Model) {
  const WorldModel m = lotteryization_model({Rational(1, 10), 4});
  EXPECT_EQ(m.atoms().size(), 4u);
  EXPECT_EQ(m.worlds().size(), 5u);
  EXPECT_EQ(m.total_weight(), Rational(1));
}

TEST(LotteryizationTest, Thresholds) {
  struct Case {
    Rational q;
    ValueMode mode;
    int n;
  };
  for (const auto& c : std::vector<Case>{{Rational(1, 10), ValueMode::kPaper, 11},
                                         {Rational(1, 4), ValueMode::kPaper, 5},
                                         {Rational(1, 2), ValueMode::kPaper, 3},
                                         {Rational(1, 100), ValueMode::kPaper, 101},
                                         {Rational(1, 3), ValueMode::kPaper, 4},
                                         {Rational(1, 10), ValueMode::kExact, 10},
                                         {Rational(1, 4), ValueMode::kExact, 4},
                                         {Rational(1, 2), ValueMode::kExact, 2},
                                         {Rational(1, 100), ValueMode::kExact, 100},
                                         {Rational(1, 3), ValueMode::kExact, 3}}) {
    const WarrantThreshold t = warrant_threshold(c.q, c.mode);
    EXPECT_EQ(t.n, c.n) << to_string(c.q) << " " << to_string(c.mode);
    EXPECT_LT(t.value, Rational(1, 2));
    if (t.n > 2) EXPECT_GE(t.previous_value, Rational(1, 2));
  }
  const WarrantThreshold paper = warrant_threshold(Rational(1, 10), ValueMode::kPaper);
  EXPECT_EQ(paper.value, Rational(10, 21));
  EXPECT_EQ(paper.previous_value, Rational(1, 2));
  EXPECT_EQ(paper.bound, Rational(10));
  EXPECT_EQ(warrant_threshold(Rational(1, 10), ValueMode::kExact).bound, Rational(9));
}

TEST(LotteryizationTest, InvalidParams) {
  EXPECT_THROW(LotteryizationParams({Rational(0), 5}).validate(), InputError);
  EXPECT_THROW(LotteryizationParams({Rational(1), 5}).validate(), InputError);
  EXPECT_THROW(LotteryizationParams({Rational(1, 2), 1}).validate(), InputError);
  EXPECT_THROW(warrant_threshold(Rational(0), ValueMode::kPaper), InputError);
}

TEST(LotteryizationProperty, PaperValueDecreases) {
  for (const auto& q : kGrid)
    for (int n = 2; n < 50; ++n)
      EXPECT_LT(lotteryization_value_paper({q, n + 1}), lotteryization_value_paper({q, n}))
          << to_string(q) << " " << n;
}

TEST(LotteryizationProperty, ClosedFormMatchesEnumeration) {
  for (const auto& q : kGrid)
    for (int n = 2; n <= 50; ++n) {
      const LotteryizationParams p{q, n};
      EXPECT_EQ(lotteryization_closed_form(p), lotteryization_value_exact(p));
      EXPECT_EQ(compare_lotteryization(p).exact_condition_probability, q + (1 - q) / n);
    }
}

}  // namespace
}  // namespace nmr
