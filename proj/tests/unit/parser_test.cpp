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

#include "nmr/dsl/parser.h"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "nmr/defaults/default_logic.h"
#include "nmr/dsl/document.h"
#include "nmr/dsl/printer.h"
#include "nmr/scenarios/scenarios.h"
#include "support.h"

namespace nmr {
namespace {

constexpr const char* kNixon = R"(% Nixon diamond
fact: quaker & republican.
default d1: quaker : pacifist / pacifist.
default d2: republican : ~pacifist / ~pacifist.
)";

ParseError parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError(0, 0, "");
}

TEST(ParserTest, Nixon) {
  const TheoryDocument doc = parse_document(kNixon);
  EXPECT_EQ(doc.facts.size(), 1u);
  ASSERT_EQ(doc.defaults.size(), 2u);
  EXPECT_EQ(doc.defaults[1].consequent, Formula::Not(Formula::Atom("pacifist")));
  EXPECT_EQ(extensions(theory_of(doc)).size(), 2u);
}

TEST(ParserTest, EmptyInput) {
  EXPECT_TRUE(parse_document("").empty());
  EXPECT_TRUE(parse_document("  % nothing here\n\n").empty());
}

TEST(ParserTest, FormulaPrecedence) {
  const Formula a = Formula::Atom("a"), b = Formula::Atom("b"), c = Formula::Atom("c");
  EXPECT_EQ(parse_formula("a | b & c"), Formula::Or({a, Formula::And({b, c})}));
  EXPECT_EQ(parse_formula("~a & b"), Formula::And({Formula::Not(a), b}));
  EXPECT_EQ(parse_formula("a -> b -> c"), Formula::Implies(a, Formula::Implies(b, c)));
  EXPECT_EQ(parse_formula("a -> b <-> c"), Formula::Iff(Formula::Implies(a, b), c));
  EXPECT_EQ(parse_formula("exactly_one(a, b, c)"), Formula::ExactlyOne({a, b, c}));
  EXPECT_EQ(parse_formula("bird(tweety)"), Formula::Apply("bird", {"tweety"}));
  EXPECT_EQ(parse_formula("bird(X)").variables(), (std::set<std::string>{"X"}));
}

TEST(ParserTest, DefaultShapes) {
  const TheoryDocument doc = parse_document(
      "domain {tweety, opus}.\n"
      "default d: bird(X) : flies(X), ~penguin(X) / flies(X).\n"
      "default e: : a / a.\n");
  EXPECT_EQ(doc.domain, (std::vector<std::string>{"tweety", "opus"}));
  EXPECT_EQ(doc.defaults[0].justifications.size(), 2u);
  EXPECT_EQ(doc.defaults[1].prerequisite, Formula::True());
  EXPECT_EQ(theory_of(doc).defaults.size(), 3u);
}

TEST(ParserTest, WarrantStatements) {
  const TheoryDocument doc = parse_document(
      "atoms a, b.\n"
      "world 10 weight 1/4.\nworld 01 weight 0.75.\n"
      "background: a | b.\n"
      "candidate: ~a.\ncandidate: b given ~a.\n"
      "undercut: ~a by b.\n"
      "config gate on.\nconfig threshold 3/5.\nconfig relevance always.\n");
  EXPECT_EQ(doc.worlds[1].weight, Rational(3, 4));
  EXPECT_EQ(doc.candidates[1].evidence, Formula::Not(Formula::Atom("a")));
  EXPECT_EQ(doc.undercuts[0].condition, Formula::Atom("b"));
  EXPECT_EQ(doc.config.gate, GateMode::kOn);
  EXPECT_EQ(doc.config.threshold, Rational(3, 5));
  const WarrantProblem p = problem_of(doc);
  EXPECT_EQ(p.background.size(), 1u);
  EXPECT_EQ(probability(p.model, Formula::Atom("b")), Rational(3, 4));
}

TEST(ParserTest, ErrorPositions) {
  const ParseError missing_dot = parse_error("default d: a : b / c\n");
  EXPECT_EQ(missing_dot.line(), 2);
  EXPECT_NE(missing_dot.message().find("expected '.'"), std::string::npos);

  const ParseError bad_token = parse_error("fact: a.\nfact: a & & b.\n");
  EXPECT_EQ(bad_token.line(), 2);
  EXPECT_EQ(bad_token.column(), 11);
  EXPECT_NE(std::string(bad_token.what()).find("2:11:"), std::string::npos);

  EXPECT_EQ(parse_error("atoms a, b.\nworld 1 weight 1.\n").line(), 2);
  EXPECT_EQ(parse_error("atoms a.\nworld 1 weight -1.\n").line(), 2);
  EXPECT_THROW(parse_document("atoms a.\nworld 1 weight 0.\n"), ParseError);
  EXPECT_THROW(parse_document("atoms a.\nworld 1 weight 1.\nbackground: b.\n"), ParseError);
  EXPECT_THROW(parse_document("atoms a.\nworld 2 weight 1.\n"), ParseError);
  EXPECT_THROW(parse_document("atoms a.\nworld 1 weight 1.\nworld 1 weight 1.\n"), ParseError);
  EXPECT_THROW(parse_document("fact: X.\n"), ParseError);
  EXPECT_THROW(parse_document("config gate sometimes.\n"), ParseError);
  EXPECT_THROW(parse_document("frobnicate.\n"), ParseError);
  EXPECT_THROW(parse_formula("a |"), ParseError);
  EXPECT_THROW(parse_formula("(a"), ParseError);
}

TEST(ParserTest, DataFilesParse) {
  for (const char* name : {"nixon", "tweety", "fair_lottery", "unfair_lottery", "preface"}) {
    std::ifstream in(std::string(NMR_DATA_DIR) + "/" + name + ".dt");
    ASSERT_TRUE(in) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    const TheoryDocument doc = parse_document(ss.str());
    EXPECT_FALSE(doc.empty()) << name;
    EXPECT_EQ(parse_document(print_document(doc)), doc) << name;
  }
}

TEST(ParserProperty, ScenarioRoundTrip) {
  for (const auto& name : scenario_names()) {
    const TheoryDocument doc = to_document(make_scenario(name));
    const std::string text = print_document(doc);
    const TheoryDocument back = parse_document(text);
    EXPECT_EQ(back, doc) << name << "\n" << text;
    EXPECT_EQ(print_document(back), text) << name;
  }
}

TEST(ParserProperty, FormulaRoundTrip) {
  for (std::uint32_t seed = 0; seed < 500; ++seed) {
    testing::FormulaGen gen(seed, 4);
    const Formula f = gen(4);
    const Formula back = parse_formula(f.to_string());
    EXPECT_TRUE(testing::tt_equivalent(f, back)) << f.to_string();
    EXPECT_EQ(back.to_string(), f.to_string());
  }
}

}  // namespace
}  // namespace nmr
