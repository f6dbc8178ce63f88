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

#ifndef DEMOIVRE_QUADRATIC_HPP_
#define DEMOIVRE_QUADRATIC_HPP_

#include <string>

#include "demoivre/rational.hpp"

namespace demoivre {

// Element a + b*sqrt(r') of the quadratic field Q(sqrt(r')), r' a nonzero
// squarefree integer (r' = 1 is tolerated and degenerates to Q x Q).
// Mixing elements with different radicands throws ValidationError.
class QuadElem {
 public:
  QuadElem(Rational a, Rational b, Integer r_prime);
  static QuadElem from_rational(Rational a, Integer r_prime);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& r_prime() const { return r_prime_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadElem conj() const;
  // a^2 - b^2 r'
  Rational norm() const;
  // 2a
  Rational trace() const;
  // Throws ValidationError when the norm is zero.
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& rhs);
  QuadElem& operator-=(const QuadElem& rhs);
  QuadElem& operator*=(const QuadElem& rhs);
  QuadElem& operator/=(const QuadElem& rhs);
  QuadElem& operator*=(const Rational& rhs);

  friend QuadElem operator+(QuadElem lhs, const QuadElem& rhs) { return lhs += rhs; }
  friend QuadElem operator-(QuadElem lhs, const QuadElem& rhs) { return lhs -= rhs; }
  friend QuadElem operator*(QuadElem lhs, const QuadElem& rhs) { return lhs *= rhs; }
  friend QuadElem operator/(QuadElem lhs, const QuadElem& rhs) { return lhs /= rhs; }
  friend QuadElem operator*(QuadElem lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadElem operator*(const Rational& lhs, QuadElem rhs) { return rhs *= lhs; }
  QuadElem operator-() const;

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.r_prime_ == y.r_prime_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  void require_same_field(const QuadElem& other) const;

  Rational a_;
  Rational b_;
  Integer r_prime_;
};

// x^e for e >= 0, or the inverse power for e < 0.
QuadElem pow(const QuadElem& x, long e);

}  // namespace demoivre

#endif  // DEMOIVRE_QUADRATIC_HPP_
