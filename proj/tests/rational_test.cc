// Copyright 2026 The fairaudit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rational.hpp"

#include "error.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

namespace fairaudit {
namespace {

using testing::Q;

TEST(RationalTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(Q("2/4").ToString(), "1/2");
  EXPECT_EQ(Q("3").ToString(), "3");
  EXPECT_EQ(Q("-6/8").ToString(), "-3/4");
  EXPECT_EQ(Q("0/5").ToString(), "0");
}

TEST(RationalTest, RejectsMalformedText) {
  EXPECT_ERROR_CODE(Q("1/0"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(Q("a/2"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(Q(""), ErrorCode::kInput);
  EXPECT_ERROR_CODE(Q("1.2.3"), ErrorCode::kInput);
  EXPECT_ERROR_CODE(Q("1/-2"), ErrorCode::kInput);
}

TEST(RationalTest, FiniteDecimalsAreExact) {
  EXPECT_EQ(Q("0.5"), Q("1/2"));
  EXPECT_EQ(Q(".2"), Q("1/5"));
  EXPECT_EQ(Q("0.1") + Q("0.2"), Q("3/10"));
}

TEST(RationalTest, ExactArithmetic) {
  EXPECT_EQ(Q("1/3") + Q("1/6"), Q("1/2"));
  EXPECT_EQ(Q("1/3") * Q("3/5"), Q("1/5"));
  EXPECT_EQ(Q("1/2") - Q("3/4"), Q("-1/4"));
  EXPECT_EQ(Q("1/2") / Q("1/4"), Rational(2));
  EXPECT_EQ(Abs(Q("-2/7")), Q("2/7"));
  EXPECT_LT(Q("1/3"), Q("1/2"));
  EXPECT_TRUE(Rational(0).IsZero());
  EXPECT_EQ(Q("-1/9").Sign(), -1);
}

TEST(RationalTest, DecimalRendering) {
  EXPECT_EQ(Q("1/3").ToDecimal(6), "0.333333");
  EXPECT_EQ(Q("2/3").ToDecimal(6), "0.666667");
  EXPECT_EQ(Q("1/6").ToDecimal(6), "0.166667");
  EXPECT_EQ(Rational(1).ToDecimal(6), "1.000000");
  EXPECT_EQ(Rational(0).ToDecimal(6), "0.000000");
}

TEST(RationalTest, DivisionByZeroIsInternal) {
  EXPECT_ERROR_CODE(Q("1/2") / Rational(0), ErrorCode::kInternal);
}

}  // namespace
}  // namespace fairaudit
