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

#include <gtest/gtest.h>

#include "support.h"

namespace nmr {
namespace {

const Formula a = Formula::Atom("a");
const Formula b = Formula::Atom("b");
const Formula c = Formula::Atom("c");

TEST(FormulaTest, EmptyConnectivesCollapse) {
  EXPECT_EQ(Formula::And({}), Formula::True());
  EXPECT_EQ(Formula::Or({}), Formula::False());
  EXPECT_EQ(Formula::And({a}), a);
  EXPECT_EQ(Formula::Or({a}), a);
  EXPECT_EQ(Formula::ExactlyOne({}), Formula::False());
  EXPECT_EQ(Formula::AtLeastOne({}), Formula::False());
}

TEST(FormulaTest, GroundApplicationFlattens) {
  const Formula f = Formula::Apply("pacifist", {"nixon"});
  EXPECT_EQ(f.kind(), Connective::kAtom);
  EXPECT_EQ(f.name(), "pacifist_nixon");
  EXPECT_TRUE(f.is_ground());
  EXPECT_EQ(flatten_application("p", std::vector<std::string>{"a", "b"}), "p_a_b");
}

TEST(FormulaTest, SchemaSubstitution) {
  const Formula f = Formula::Implies(Formula::Apply("bird", {"X"}), Formula::Apply("flies", {"X"}));
  EXPECT_FALSE(f.is_ground());
  EXPECT_EQ(f.variables(), (std::set<std::string>{"X"}));
  const Formula g = f.substitute({{"X", "tweety"}});
  EXPECT_TRUE(g.is_ground());
  EXPECT_EQ(g.to_string(), "bird_tweety -> flies_tweety");
  EXPECT_EQ(g.atoms(), (std::set<std::string>{"bird_tweety", "flies_tweety"}));
}

TEST(FormulaTest, PrinterPrecedence) {
  EXPECT_EQ(Formula::And({Formula::Or({a, b}), c}).to_string(), "(a | b) & c");
  EXPECT_EQ(Formula::Or({Formula::And({a, b}), c}).to_string(), "a & b | c");
  EXPECT_EQ(Formula::Not(Formula::And({a, b})).to_string(), "~(a & b)");
  EXPECT_EQ(Formula::Implies(a, Formula::Implies(b, c)).to_string(), "a -> b -> c");
  EXPECT_EQ(Formula::Implies(Formula::Implies(a, b), c).to_string(), "(a -> b) -> c");
  EXPECT_EQ(Formula::Iff(a, Formula::Iff(b, c)).to_string(), "a <-> (b <-> c)");
  EXPECT_EQ(Formula::ExactlyOne({a, Formula::Or({b, c})}).to_string(), "exactly_one(a, b | c)");
  EXPECT_EQ(Formula::And({a, Formula::And({b, c})}).to_string(), "a & (b & c)");
}

TEST(FormulaTest, StructuralOrderIsTotal) {
  EXPECT_EQ(Formula::And({a, b}), Formula::And({a, b}));
  EXPECT_NE(Formula::And({a, b}), Formula::And({b, a}));
  std::vector<Formula> fs{b, a, Formula::Not(a), a};
  sort_canonical(fs);
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_TRUE(fs[0] < fs[1] && fs[1] < fs[2]);
}

TEST(FormulaTest, ConjunctsAndJunctions) {
  EXPECT_TRUE(conjuncts(Formula::True()).empty());
  EXPECT_EQ(conjuncts(Formula::And({a, b})).size(), 2u);
  EXPECT_EQ(conjuncts(a).size(), 1u);
  const std::vector<Formula> fs{a, b};
  EXPECT_EQ(conjoin(fs), Formula::And({a, b}));
  EXPECT_EQ(disjoin(fs), Formula::Or({a, b}));
}

TEST(FormulaTest, EvaluateAgreesWithReference) {
  testing::FormulaGen gen(7, 5);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen(4);
    testing::for_each_assignment({"p0", "p1", "p2", "p3", "p4"}, [&](const auto& v) {
      EXPECT_EQ(evaluate(f, [&](const std::string& n) { return v.at(n); }), testing::eval(f, v))
          << f.to_string();
      return true;
    });
  }
}

TEST(FormulaTest, SugarMatchesCounting) {
  const Formula one = Formula::ExactlyOne({a, b, c});
  const Formula some = Formula::AtLeastOne({a, b, c});
  testing::for_each_assignment({"a", "b", "c"}, [&](const auto& v) {
    const int n = v.at("a") + v.at("b") + v.at("c");
    EXPECT_EQ(testing::eval(one, v), n == 1);
    EXPECT_EQ(testing::eval(some, v), n >= 1);
    return true;
  });
}

}  // namespace
}  // namespace nmr
