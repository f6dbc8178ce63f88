// Copyright 2026 The demoivre Authors
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

#include "demoivre/quadratic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "demoivre/error.hpp"

namespace demoivre {
namespace {

TEST(QuadElem, NormTraceConjugate) {
  const QuadElem x(7, 4, 3);
  EXPECT_EQ(x.norm(), 1);
  EXPECT_EQ(x.trace(), 14);
  EXPECT_EQ(x * x.conj(), QuadElem::from_rational(1, 3));
  EXPECT_EQ(pow(x, 3), QuadElem(1351, 780, 3));
  EXPECT_EQ(pow(x, -1), x.conj());
}

TEST(QuadElem, RejectsMixedFieldsAndZeroInverse) {
  EXPECT_THROW(QuadElem(1, 1, 2) + QuadElem(1, 1, 3), ValidationError);
  EXPECT_THROW(QuadElem(0, 0, -1).inverse(), ValidationError);
  EXPECT_THROW(QuadElem(1, 1, 0), ValidationError);
}

TEST(QuadElem, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-20, 20), den(1, 7);
  auto rq = [&] {
    Rational q(c(rng), den(rng));
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 200; ++i) {
    const Integer r = i % 2 ? -7 : 10;
    const QuadElem x(rq(), rq(), r), y(rq(), rq(), r), z(rq(), rq(), r);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), QuadElem::from_rational(1, r));
  }
}

}  // namespace
}  // namespace demoivre
