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

#include "demoivre/error.hpp"

namespace demoivre {

QuadElem::QuadElem(Rational a, Rational b, Integer r_prime)
    : a_(std::move(a)), b_(std::move(b)), r_prime_(std::move(r_prime)) {
  if (r_prime_ == 0) throw ValidationError("QuadElem: radicand must be nonzero");
  a_.canonicalize();
  b_.canonicalize();
}

QuadElem QuadElem::from_rational(Rational a, Integer r_prime) {
  return QuadElem(std::move(a), 0, std::move(r_prime));
}

void QuadElem::require_same_field(const QuadElem& other) const {
  if (r_prime_ != other.r_prime_) {
    throw ValidationError("QuadElem: mixed radicands " + r_prime_.get_str() + " and " +
                          other.r_prime_.get_str());
  }
}

QuadElem QuadElem::conj() const { return QuadElem(a_, -b_, r_prime_); }

Rational QuadElem::norm() const { return a_ * a_ - b_ * b_ * r_prime_; }

Rational QuadElem::trace() const { return 2 * a_; }

QuadElem QuadElem::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw ValidationError("QuadElem: inverse of a zero-norm element");
  return QuadElem(a_ / n, -b_ / n, r_prime_);
}

QuadElem& QuadElem::operator+=(const QuadElem& rhs) {
  require_same_field(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& rhs) {
  require_same_field(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& rhs) {
  require_same_field(rhs);
  Rational a = a_ * rhs.a_ + b_ * rhs.b_ * r_prime_;
  Rational b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

QuadElem& QuadElem::operator*=(const Rational& rhs) {
  a_ *= rhs;
  b_ *= rhs;
  return *this;
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, r_prime_); }

std::string QuadElem::to_string() const {
  return demoivre::to_string(a_) + " + (" + demoivre::to_string(b_) + ")*sqrt(" +
         r_prime_.get_str() + ")";
}

QuadElem pow(const QuadElem& x, long e) {
  if (e < 0) return pow(x.inverse(), -e);
  QuadElem result = QuadElem::from_rational(1, x.r_prime());
  QuadElem base = x;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

}  // namespace demoivre
