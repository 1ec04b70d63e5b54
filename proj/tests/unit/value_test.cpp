// Copyright 2026 The StarPlat Compiler Authors
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

#include <gtest/gtest.h>

#include <climits>

#include "starplat/value.hpp"

namespace starplat {
namespace {

using ast::BinaryOp;

TEST(Value, IntArithmeticIsChecked) {
  EXPECT_EQ(arith(BinaryOp::Add, Value::of_int(2), Value::of_int(3), Primitive::Int).i, 5);
  EXPECT_THROW(arith(BinaryOp::Add, Value::of_int(2000000000), Value::of_int(2000000000), Primitive::Int),
               RuntimeError);
  EXPECT_THROW(arith(BinaryOp::Mul, Value::of_int(100000), Value::of_int(100000), Primitive::Int), RuntimeError);
  EXPECT_THROW(arith(BinaryOp::Div, Value::of_int(1), Value::of_int(0), Primitive::Int), RuntimeError);
  EXPECT_EQ(arith(BinaryOp::Mul, Value::of_long(100000), Value::of_long(100000), Primitive::Long).i, 10000000000LL);
}

TEST(Value, IntMaxSentinelSaturates) {
  const Value r = arith(BinaryOp::Add, Value::of_int(INT_MAX), Value::of_int(7), Primitive::Int);
  EXPECT_EQ(r.i, INT_MAX);
}

TEST(Value, FloatRoundsOnStore) {
  const Value f = convert(Value::of_double(0.1), Primitive::Float);
  EXPECT_EQ(f.d, static_cast<double>(0.1f));
  EXPECT_EQ(convert(Value::of_double(2.9), Primitive::Int).i, 2);
}

TEST(Value, FormatsAndParses) {
  EXPECT_EQ(format_value(Value::of_bool(true)), "True");
  EXPECT_EQ(format_value(Value::of_int(-4)), "-4");
  EXPECT_EQ(parse_value("0.25", DslType::prim_t(Primitive::Double)).d, 0.25);
  EXPECT_TRUE(parse_value("True", DslType::prim_t(Primitive::Bool)).truthy());
  EXPECT_THROW(parse_value("abc", DslType::prim_t(Primitive::Int)), Error);
}

TEST(Value, CompareTsvHonoursTolerance) {
  EXPECT_EQ(compare_tsv("#node x\n0\t0.5\n", "#node x\n0\t0.5000000001\n", 1e-9), std::nullopt);
  EXPECT_NE(compare_tsv("#node x\n0\t0.5\n", "#node x\n0\t0.51\n", 1e-9), std::nullopt);
  EXPECT_NE(compare_tsv("#node x\n0\t1\n", "#node x\n0\t2\n", 1.0), std::nullopt);
  EXPECT_NE(compare_tsv("#node x\n0\t1\n", "#node x\n0\t1\n1\t1\n", 0), std::nullopt);
}

}  // namespace
}  // namespace starplat
