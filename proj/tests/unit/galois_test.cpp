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

#include "demoivre/galois.hpp"

#include <gtest/gtest.h>

#include <random>

#include "demoivre/error.hpp"
#include "oracles.hpp"

namespace demoivre {
namespace {

TEST(PthPower, WorkedExampleRadicandIsACube) {
  const auto inst = make_instance(9, 26, 675);
  const QuadElem alpha = radicand_ratio(inst);
  EXPECT_EQ(alpha, QuadElem(1351, 780, 3));
  EXPECT_EQ(alpha.norm(), 1);
  const auto r = is_pth_power(alpha, 3);
  ASSERT_TRUE(r.is_power);
  EXPECT_EQ(*r.root, QuadElem(7, 4, 3));
  EXPECT_EQ(r.method, PowerMethod::kExactVerifiedReconstruction);
}

TEST(PthPower, RejectsBadArguments) {
  EXPECT_THROW(is_pth_power(QuadElem(0, 0, 2), 3), ValidationError);
  EXPECT_THROW(is_pth_power(QuadElem(1, 1, 1), 3), ValidationError);
  EXPECT_THROW(is_pth_power(QuadElem(1, 1, 2), 9), ValidationError);
  EXPECT_THROW(is_pth_power(QuadElem(1, 1, 2), 2), ValidationError);
}

TEST(PthPower, PowersAndCertifiedNonPowers) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const auto c = testing::random_power(rng);
    const auto r = is_pth_power(c.x, c.p);
    ASSERT_TRUE(r.is_power) << c.x.to_string() << " p=" << c.p;
    EXPECT_EQ(pow(*r.root, c.p), c.x);
    const auto nc = testing::random_non_power(rng);
    EXPECT_FALSE(is_pth_power(nc.x, nc.p).is_power) << nc.kind << " " << nc.x.to_string();
  }
}

TEST(PthPower, LargeDenominatorsBeyondConfiguredBound) {
  // beta has denominator 10^8 > max_den; the bound widens to 2 * den(x).
  const QuadElem beta(Rational(1, 100000000), Rational(3, 7), -5);
  GaloisConfig config;
  config.max_den = 10;
  const auto r = is_pth_power(pow(beta, 5), 5, config);
  ASSERT_TRUE(r.is_power);
  EXPECT_EQ(pow(*r.root, 5), pow(beta, 5));
}

TEST(Irreducibility, ValuationCriterion) {
  // D = 6: v_3(D) = 1 is odd and prime to 3.
  const auto v = irreducible_by_valuations(make_instance(3, 1, -5));
  EXPECT_EQ(v.outcome, Prop7Outcome::kIrreducible);
  ASSERT_EQ(v.witnesses.size(), 1u);
  EXPECT_EQ(v.witnesses[0].q, 3);
  EXPECT_EQ(irreducible_by_pth_powers(make_instance(3, 1, -5)).verdict, Verdict::kIrreducible);
  EXPECT_EQ(irreducible_by_valuations(make_instance(3, Rational(1, 2), 3)).outcome,
            Prop7Outcome::kInconclusive);
  EXPECT_EQ(irreducible_by_valuations(make_instance(3, 3, 6)).outcome, Prop7Outcome::kInconclusive);
}

TEST(Irreducibility, ValuationWitnessesNeverContradictPthPowers) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-60, 60);
  for (int i = 0; i < 200; ++i) {
    const long d = c(rng), R = c(rng);
    if (d == 0 || R == 0 || squarefree_decompose(R).r_prime == 1 || gcd(Integer(d), Integer(R)) != 1) continue;
    const auto inst = make_instance(3 + 2 * (i % 4), d, R);
    if (irreducible_by_valuations(inst).outcome == Prop7Outcome::kIrreducible) {
      EXPECT_EQ(irreducible_by_pth_powers(inst).verdict, Verdict::kIrreducible) << d << " " << R;
    }
  }
}

TEST(Irreducibility, PrimeDegreeRationalZero) {
  const auto inst = testing::reducible_prime_instance(Rational(3, 2), -1, -7, 7);
  const auto rz = irreducible_by_rational_zero(inst);
  EXPECT_EQ(rz.verdict, Verdict::kReducible);
  EXPECT_EQ(rz.rational_zeros, (std::vector<Rational>{3}));
  EXPECT_EQ(irreducible_by_pth_powers(inst).verdict, Verdict::kReducible);
  EXPECT_THROW(irreducible_by_rational_zero(make_instance(9, 1, 2)), ValidationError);
}

TEST(Cyclotomic, QuadraticSubfields) {
  EXPECT_TRUE(sqrt_in_cyclotomic(-3, 3));
  EXPECT_TRUE(sqrt_in_cyclotomic(5, 5));
  EXPECT_TRUE(sqrt_in_cyclotomic(-7, 21));
  EXPECT_TRUE(sqrt_in_cyclotomic(1, 7));
  EXPECT_FALSE(sqrt_in_cyclotomic(-3, 5));
  EXPECT_FALSE(sqrt_in_cyclotomic(3, 3));
  EXPECT_FALSE(sqrt_in_cyclotomic(-1, 15));
  EXPECT_TRUE(sqrt_in_cyclotomic(-15, 15));
  EXPECT_TRUE(sqrt_in_cyclotomic(21, 21));
  EXPECT_THROW(sqrt_in_cyclotomic(5, 10), ValidationError);
}

TEST(Galois, PublishedFamilies) {
  const auto f = classify_galois_group(filaseta_instance(7, 3));
  EXPECT_EQ(f.tag, GaloisTag::kFullSemidirect);
  EXPECT_EQ(f.group_order, 42u);
  const auto b = classify_galois_group(bruen_instance(11, 1, 1));
  EXPECT_EQ(b.tag, GaloisTag::kHalfSemidirect);
  EXPECT_EQ(b.group_order, 55u);
  EXPECT_EQ(classify_galois_group(make_instance(9, 26, 675)).tag, GaloisTag::kNotIrreducible);
}

TEST(Galois, ExceptionalThreeCases) {
  // 3 prime: generic rule, sqrt(-3) lies in Q(zeta_3).
  auto c = classify_galois_group(make_instance(3, 1, -3));
  EXPECT_EQ(c.tag, GaloisTag::kHalfSemidirect);
  EXPECT_EQ(c.group_order, 3u);
  // 15: 9 does not divide n and 5 = 2 (mod 3).
  c = classify_galois_group(make_instance(15, 2, -3));
  EXPECT_EQ(c.tag, GaloisTag::kHalfSemidirect);
  EXPECT_EQ(c.group_order, 60u);
  // 9, d = 1: D^4 (1 + sqrt(-3)) = (-8)^3 zeta_3^2.
  c = classify_galois_group(make_instance(9, 1, -3));
  EXPECT_EQ(c.tag, GaloisTag::kHalfSemidirect);
  EXPECT_EQ(c.group_order, 27u);
  // 9, d = 2: D = 7 = pi conj(pi), valuations 5 and 4 at the two primes.
  EXPECT_EQ(classify_galois_group(make_instance(9, 2, -3)).tag, GaloisTag::kExceptional3Undetermined);
  // 21: 7 = 1 (mod 3).
  EXPECT_EQ(classify_galois_group(make_instance(21, 2, -3)).tag, GaloisTag::kExceptional3Undetermined);
}

TEST(Oracle, FactorsWorkedExample) {
  const auto factors = brute_force_factor(make_instance(9, 26, 675));
  ASSERT_EQ(factors.size(), 2u);
  EXPECT_EQ(factors[0], (RatPoly{-4, -3, 0, 1}));
  EXPECT_EQ(factors[1], (RatPoly{13, -12, 9, 4, -6, 0, 1}));
  EXPECT_THROW(brute_force_factor(make_instance(17, 1, 2)), ValidationError);
}

TEST(Oracle, FactorsMultiplyBackAndAreMonic) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 12; ++i) {
    const auto inst = testing::reducible_prime_instance(testing::random_rational(rng, 5, 3),
                                                        testing::random_rational(rng, 5, 3),
                                                        i % 2 ? -2 : 3, i % 3 ? 5 : 7);
    const auto factors = brute_force_factor(inst);
    RatPoly product = RatPoly::constant(1);
    for (const auto& f : factors) {
      EXPECT_TRUE(f.is_monic());
      product *= f;
    }
    EXPECT_EQ(product, de_moivre_polynomial(inst));
    EXPECT_GE(factors.size(), 2u);
    EXPECT_EQ(factors[0].degree(), 1);
  }
}

}  // namespace
}  // namespace demoivre
