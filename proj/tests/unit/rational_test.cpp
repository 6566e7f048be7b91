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

#include "nmr/rational.h"

#include <gtest/gtest.h>

#include "nmr/errors.h"

namespace nmr {
namespace {

TEST(RationalTest, ParsesExactly) {
  EXPECT_EQ(parse_rational("3/100"), Rational(3, 100));
  EXPECT_EQ(parse_rational("6/200"), Rational(3, 100));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("0.99"), Rational(99, 100));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(RationalTest, RejectsGarbage) {
  for (const char* s : {"", "1/0", "a", "1/2/3", "0.1.2", "1e", "/2", "1/"})
    EXPECT_THROW(parse_rational(s), InputError) << s;
}

TEST(RationalTest, Printing) {
  EXPECT_EQ(to_string(Rational(2, 3)), "2/3");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_decimal(Rational(2, 3)), "0.666667");
  EXPECT_EQ(to_decimal(Rational(1)), "1.000000");
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}

}  // namespace
}  // namespace nmr
