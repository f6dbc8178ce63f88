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

#ifndef DEMOIVRE_BIGFLOAT_HPP_
#define DEMOIVRE_BIGFLOAT_HPP_

#include <mpfr.h>

#include <string>
#include <string_view>

#include "demoivre/rational.hpp"

namespace demoivre {

inline constexpr long kDefaultPrecisionBits = 192;

// Binary floating-point number with a fixed, explicit precision (MPFR,
// round-to-nearest). Binary operations require both operands to carry the
// same precision and throw std::logic_error otherwise; use with_precision()
// to convert deliberately.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = kDefaultPrecisionBits);
  BigFloat(long value, long precision_bits);
  BigFloat(const Rational& value, long precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  // Parses decimal/scientific text. Throws ValidationError when malformed.
  static BigFloat parse(std::string_view text, long precision_bits);
  static BigFloat pi(long precision_bits);
  // 2^e at the given precision.
  static BigFloat exp2(long e, long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  BigFloat with_precision(long precision_bits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  double to_double() const;
  // Exact value of the binary float as a fraction.
  Rational to_rational() const;
  // Scientific notation with `digits` significant decimal digits; 0 picks
  // enough digits to represent the precision.
  std::string to_string(int digits = 0) const;

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend int compare(const BigFloat& a, const BigFloat& b);
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
// Real n-th root; negative x is allowed for odd n.
BigFloat root(const BigFloat& x, unsigned long n);
BigFloat cos(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat max(const BigFloat& a, const BigFloat& b);
// Nearest integer (ties away from zero).
Integer round_to_integer(const BigFloat& x);
// floor(log2 |x|) + 1, or a large negative number for zero.
long magnitude_bits(const BigFloat& x);

// Complex number whose parts share one precision.
class ComplexVal {
 public:
  explicit ComplexVal(long precision_bits = kDefaultPrecisionBits);
  ComplexVal(BigFloat re, BigFloat im);
  ComplexVal(const Rational& re, const Rational& im, long precision_bits);

  // exp(i * theta)
  static ComplexVal unit(const BigFloat& theta);
  static ComplexVal parse(std::string_view re, std::string_view im,
                          long precision_bits);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long precision() const { return re_.precision(); }
  ComplexVal with_precision(long precision_bits) const;

  ComplexVal conj() const;
  BigFloat abs() const;
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ComplexVal& operator+=(const ComplexVal& rhs);
  ComplexVal& operator-=(const ComplexVal& rhs);
  ComplexVal& operator*=(const ComplexVal& rhs);
  ComplexVal& operator/=(const ComplexVal& rhs);
  ComplexVal& operator*=(const BigFloat& rhs);
  ComplexVal& operator/=(const BigFloat& rhs);

  friend ComplexVal operator+(ComplexVal lhs, const ComplexVal& rhs) { return lhs += rhs; }
  friend ComplexVal operator-(ComplexVal lhs, const ComplexVal& rhs) { return lhs -= rhs; }
  friend ComplexVal operator*(ComplexVal lhs, const ComplexVal& rhs) { return lhs *= rhs; }
  friend ComplexVal operator/(ComplexVal lhs, const ComplexVal& rhs) { return lhs /= rhs; }
  friend ComplexVal operator*(ComplexVal lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend ComplexVal operator*(const BigFloat& lhs, ComplexVal rhs) { return rhs *= lhs; }
  friend ComplexVal operator/(ComplexVal lhs, const BigFloat& rhs) { return lhs /= rhs; }
  ComplexVal operator-() const;

 private:
  BigFloat re_;
  BigFloat im_;
};

// x^e by repeated squaring; x must be nonzero when e < 0.
ComplexVal pow(const ComplexVal& x, long e);
// Principal n-th root: argument in (-pi/n, pi/n].
ComplexVal principal_root(const ComplexVal& x, unsigned long n);
BigFloat distance(const ComplexVal& a, const ComplexVal& b);

}  // namespace demoivre

#endif  // DEMOIVRE_BIGFLOAT_HPP_
