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

#include "demoivre/instance.hpp"

#include <gtest/gtest.h>

#include <random>

#include "demoivre/chebyshev.hpp"
#include "demoivre/error.hpp"
#include "oracles.hpp"

namespace demoivre {
namespace {

TEST(Instance, ValidatesParameters) {
  EXPECT_THROW(make_instance(4, 1, 2), ValidationError);
  EXPECT_THROW(make_instance(1, 1, 2), ValidationError);
  EXPECT_THROW(make_instance(3, 0, 2), ValidationError);
  EXPECT_THROW(make_instance(3, 1, 0), ValidationError);
  EXPECT_THROW(make_instance(3, 1, Rational(9, 4)), ValidationError);
  const auto inst = make_instance(9, 26, 675);
  EXPECT_EQ(inst.s, 15);
  EXPECT_EQ(inst.r_prime, 3);
  EXPECT_EQ(inst.D, 1);
}

TEST(Instance, WorkedExampleFactorsExactly) {
  const RatPoly f = de_moivre_polynomial(make_instance(9, 26, 675));
  EXPECT_EQ(f, (RatPoly{-52, 9, 0, -30, 0, 27, 0, -9, 0, 1}));
  EXPECT_EQ(f, RatPoly({-4, -3, 0, 1}) * RatPoly({13, -12, 9, 4, -6, 0, 1}));
}

TEST(Instance, CubicClosedForms) {
  // n = 3: f = Z^3 - 3 D Z - 2 d D, A = (Z^2 - d Z - 2D) / (2 R D).
  const auto inst = make_instance(3, 2, 3);
  EXPECT_EQ(de_moivre_polynomial(inst), (RatPoly{-4, -3, 0, 1}));
  EXPECT_EQ(reduction_polynomial(inst), RatPoly({-2, -2, 1}) * Rational(1, 6));
  EXPECT_TRUE(verify_reduction_identity(inst));
}

TEST(Instance, ReductionIdentityOnRandomInstances) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto inst = testing::random_instance(rng, 21);
    EXPECT_TRUE(verify_reduction_identity(inst)) << inst.n << " " << inst.d << " " << inst.R;
    EXPECT_TRUE(de_moivre_polynomial(inst).is_monic());
    EXPECT_EQ(reduction_polynomial(inst).degree(), inst.n - 1);
  }
}

TEST(Instance, OddSinePolynomials) {
  const Rational R(-5);
  EXPECT_EQ(odd_sine_polynomial(1, R), RatPoly::variable());
  // zeta^3 - zeta^-3 = x^3 + 3x with x = zeta - zeta^-1, scaled by sqrt(R).
  EXPECT_EQ(odd_sine_polynomial(3, R), (RatPoly{0, 3, 0, 1 / R}));
  EXPECT_THROW(odd_sine_polynomial(2, R), ValidationError);
}

TEST(Instance, Families) {
  const auto f = filaseta_instance(7, 3);
  EXPECT_EQ(f.D, 3);
  EXPECT_EQ(de_moivre_polynomial(f), dickson(7, 3) + RatPoly::constant(1));
  const auto b = bruen_instance(11, 2, Rational(1, 3));
  EXPECT_EQ(b.R, Rational(-11, 9));
  EXPECT_EQ(b.r_prime, -11);
  EXPECT_THROW(filaseta_instance(9, 2), ValidationError);
  EXPECT_THROW(bruen_instance(5, 1, 1), ValidationError);
}

}  // namespace
}  // namespace demoivre
