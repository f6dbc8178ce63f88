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

// Sanity checks of the test-side oracles themselves.

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

#include "demoivre/polynomial.hpp"

namespace demoivre::testing {
namespace {

TEST(Oracles, GaussSumSquaresGiveSignedPrimes) {
  EXPECT_TRUE(sqrt_in_cyclotomic_by_gauss_sums(-3, 3));
  EXPECT_TRUE(sqrt_in_cyclotomic_by_gauss_sums(5, 5));
  EXPECT_TRUE(sqrt_in_cyclotomic_by_gauss_sums(-15, 15));
  EXPECT_FALSE(sqrt_in_cyclotomic_by_gauss_sums(3, 15));
  EXPECT_FALSE(sqrt_in_cyclotomic_by_gauss_sums(-1, 105));
}

TEST(Oracles, SquarefreePart) {
  EXPECT_EQ(squarefree_part(675), 3);
  EXPECT_EQ(squarefree_part(-50), -2);
  EXPECT_EQ(squarefree_part(1), 1);
}

TEST(Oracles, ReducibleConstructionHasTheZeroTwoA) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    const Rational a = random_rational(rng, 7, 3), b = random_rational(rng, 7, 3);
    const auto inst = reducible_prime_instance(a, b, i % 2 ? 5 : -6, i % 2 ? 3 : 11);
    EXPECT_EQ(evaluate(de_moivre_polynomial(inst), 2 * a), 0);
  }
}

TEST(Oracles, NonPowerCertificatesHold) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const auto c = random_non_power(rng);
    EXPECT_FALSE(c.x.is_zero());
    EXPECT_TRUE(c.kind == "norm" || c.kind == "unit" || c.kind == "split-prime");
  }
}

}  // namespace
}  // namespace demoivre::testing
