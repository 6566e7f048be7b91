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

#include "nmr/logic/schema.h"

#include <gtest/gtest.h>

#include "nmr/errors.h"

namespace nmr {
namespace {

TEST(SchemaTest, BindingsOrder) {
  const std::vector<std::string> vars{"X", "Y"};
  const std::vector<std::string> domain{"b", "a", "b"};
  const auto bs = bindings(vars, domain);
  ASSERT_EQ(bs.size(), 4u);
  EXPECT_EQ(bs[0].at("X"), "a");
  EXPECT_EQ(bs[0].at("Y"), "a");
  EXPECT_EQ(bs[1].at("X"), "a");
  EXPECT_EQ(bs[1].at("Y"), "b");
  EXPECT_EQ(bs[2].at("X"), "b");
}

TEST(SchemaTest, GroundingCount) {
  const Formula body = Formula::Implies(Formula::Apply("r", {"X", "Y"}), Formula::Apply("r", {"Y", "X"}));
  const std::vector<std::string> domain{"a", "b", "c"};
  const auto gs = ground({body, {"X", "Y"}}, domain);
  EXPECT_EQ(gs.size(), 9u);
  for (const auto& g : gs) EXPECT_TRUE(g.is_ground());
  EXPECT_EQ(gs[1].to_string(), "r_a_b -> r_b_a");
}

TEST(SchemaTest, NoVariablesGivesOneInstance) {
  const std::vector<std::string> domain;
  EXPECT_EQ(ground({Formula::Atom("a"), {}}, domain).size(), 1u);
}

TEST(SchemaTest, Errors) {
  const std::vector<std::string> empty;
  const std::vector<std::string> domain{"a"};
  EXPECT_THROW(ground({Formula::Apply("p", {"X"}), {"X"}}, empty), InputError);
  EXPECT_THROW(ground({Formula::Apply("p", {"X"}), {}}, domain), InputError);
}

}  // namespace
}  // namespace nmr
