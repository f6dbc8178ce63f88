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

#ifndef DEMOIVRE_POLYNOMIAL_HPP_
#define DEMOIVRE_POLYNOMIAL_HPP_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "demoivre/bigfloat.hpp"
#include "demoivre/quadratic.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// Dense univariate polynomial over Q. Coefficients are stored in ascending
// degree with the leading coefficient nonzero; the zero polynomial has no
// coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  RatPoly(std::initializer_list<Rational> ascending);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  static RatPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of Z^i (zero past the degree).
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator*(RatPoly lhs, const Rational& c) { return lhs *= c; }
  friend RatPoly operator*(const Rational& c, RatPoly rhs) { return rhs *= c; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& p, const RatPoly& q) { return p.coeffs_ == q.coeffs_; }

  // p(q(Z))
  RatPoly compose(const RatPoly& q) const;
  RatPoly derivative() const;

  // Human-readable form such as "Z^3 - 3*Z - 4".
  std::string to_string(char variable = 'Z') const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

// num = quotient * den + remainder with deg remainder < deg den. Throws
// ValidationError when den is zero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den);

// Horner evaluation; exact for the rational and quadratic overloads.
Rational evaluate(const RatPoly& p, const Rational& x);
QuadElem evaluate(const RatPoly& p, const QuadElem& x);
ComplexVal evaluate(const RatPoly& p, const ComplexVal& x);

// Sum of |c_i| |x|^i, the natural scale for the rounding error of evaluate().
BigFloat evaluation_scale(const RatPoly& p, const BigFloat& abs_x);

// All rational zeros in ascending order, via the rational root theorem on the
// primitive integer multiple of p. Throws ValidationError for p = 0, or when
// a coefficient cannot be factored completely by trial division.
std::vector<Rational> rational_roots(const RatPoly& p,
                                     unsigned long trial_bound = 1'000'000);

// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const RatPoly& p);

}  // namespace demoivre

#endif  // DEMOIVRE_POLYNOMIAL_HPP_
