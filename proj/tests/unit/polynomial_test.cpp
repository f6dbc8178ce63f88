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

#include "demoivre/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "demoivre/error.hpp"

namespace demoivre {
namespace {

RatPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> c(-9, 9), den(1, 4);
  std::vector<Rational> v;
  for (int i = 0; i <= degree; ++i) {
    Rational q(c(rng), den(rng));
    q.canonicalize();
    v.push_back(q);
  }
  if (sgn(v.back()) == 0) v.back() = 1;
  return RatPoly(v);
}

TEST(RatPoly, NormalizesAndPrints) {
  const RatPoly p{Rational(-1, 2), 0, 3, 0, 0};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "3*Z^2 - 1/2");
  EXPECT_TRUE(RatPoly().is_zero());
  EXPECT_EQ((RatPoly{-4, -3, 0, 1}).to_string(), "Z^3 - 3*Z - 4");
}

TEST(RatPoly, DivremReassembles) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const RatPoly a = random_poly(rng, 8), b = random_poly(rng, 3);
    const auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(divrem(RatPoly{1, 1}, RatPoly()), ValidationError);
}

TEST(RatPoly, ComposeAndEvaluateAgree) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const RatPoly p = random_poly(rng, 5), q = random_poly(rng, 2);
    Rational x(i - 25, 7);
    x.canonicalize();
    EXPECT_EQ(evaluate(p.compose(q), x), evaluate(p, evaluate(q, x)));
    EXPECT_EQ(evaluate((p * q).derivative(), x),
              evaluate(p.derivative() * q + p * q.derivative(), x));
  }
}

TEST(RationalRoots, FindsExactlyTheRationalZeros) {
  // (2Z - 3)(Z + 5)(Z^2 + 1) / 4
  const RatPoly p = RatPoly{-3, 2} * RatPoly{5, 1} * RatPoly{1, 0, 1} * Rational(1, 4);
  EXPECT_EQ(rational_roots(p), (std::vector<Rational>{-5, Rational(3, 2)}));
  EXPECT_TRUE(rational_roots(RatPoly{-2, 0, 1}).empty());
  EXPECT_EQ(rational_roots(RatPoly{0, 0, 1, 1}), (std::vector<Rational>{-1, 0}));
}

TEST(RationalRoots, RandomProductsOfLinearFactors) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-30, 30), den(1, 6);
  for (int i = 0; i < 40; ++i) {
    RatPoly p = RatPoly{1, 0, 3};
    std::vector<Rational> roots;
    for (int k = 0; k < 3; ++k) {
      Rational r(c(rng), den(rng));
      r.canonicalize();
      roots.push_back(r);
      p *= RatPoly{-r, 1};
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    EXPECT_EQ(rational_roots(p), roots);
  }
}

}  // namespace
}  // namespace demoivre
