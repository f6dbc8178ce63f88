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

#include "demoivre/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "demoivre/error.hpp"

namespace demoivre {
namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

void require_same_precision(const BigFloat& a, const BigFloat& b) {
  if (a.precision() != b.precision()) {
    throw std::logic_error("BigFloat precision mismatch: " + std::to_string(a.precision()) +
                           " vs " + std::to_string(b.precision()));
  }
}

long checked_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1'000'000) {
    throw ValidationError("unsupported precision: " + std::to_string(bits) + " bits");
  }
  return bits;
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_si(value_, value, kRound);
}

BigFloat::BigFloat(const Rational& value, long precision_bits) : BigFloat(precision_bits) {
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Leave `other` as a valid 2-bit zero so its destructor stays cheap.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::parse(std::string_view text, long precision_bits) {
  BigFloat out(precision_bits);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(out.value_, s.c_str(), 10, kRound) != 0) {
    throw ValidationError("malformed number: '" + s + "'");
  }
  return out;
}

BigFloat BigFloat::pi(long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.value_, kRound);
  return out;
}

BigFloat BigFloat::exp2(long e, long precision_bits) {
  BigFloat out(1, precision_bits);
  mpfr_mul_2si(out.value_, out.value_, e, kRound);
  return out;
}

BigFloat BigFloat::with_precision(long precision_bits) const {
  BigFloat out(precision_bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, kRound); }

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw ValidationError("to_rational: non-finite value");
  Rational out;
  if (is_zero()) return out;
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), value_);
  out = mantissa;
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return out;
}

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  }
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits - 1, value_) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  require_same_precision(*this, rhs);
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  require_same_precision(*this, rhs);
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  require_same_precision(*this, rhs);
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  require_same_precision(*this, rhs);
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, kRound);
  return out;
}

int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.value_, b.value_); }

BigFloat abs(const BigFloat& x) {
  BigFloat out(x);
  mpfr_abs(out.get(), out.get(), kRound);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

BigFloat root(const BigFloat& x, unsigned long n) {
  BigFloat out(x.precision());
  mpfr_rootn_ui(out.get(), x.get(), n, kRound);
  return out;
}

BigFloat cos(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_cos(out.get(), x.get(), kRound);
  return out;
}

BigFloat sin(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sin(out.get(), x.get(), kRound);
  return out;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  require_same_precision(y, x);
  BigFloat out(x.precision());
  mpfr_atan2(out.get(), y.get(), x.get(), kRound);
  return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  require_same_precision(x, y);
  BigFloat out(x.precision());
  mpfr_hypot(out.get(), x.get(), y.get(), kRound);
  return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) {
  require_same_precision(a, b);
  return a < b ? b : a;
}

Integer round_to_integer(const BigFloat& x) {
  if (!x.is_finite()) throw PrecisionError("round_to_integer: non-finite value");
  Integer out;
  BigFloat r(x.precision());
  mpfr_round(r.get(), x.get());
  mpfr_get_z(out.get_mpz_t(), r.get(), kRound);
  return out;
}

long magnitude_bits(const BigFloat& x) {
  if (x.is_zero()) return std::numeric_limits<long>::min() / 4;
  return static_cast<long>(mpfr_get_exp(x.get()));
}

ComplexVal::ComplexVal(long precision_bits) : re_(precision_bits), im_(precision_bits) {}

ComplexVal::ComplexVal(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  require_same_precision(re_, im_);
}

ComplexVal::ComplexVal(const Rational& re, const Rational& im, long precision_bits)
    : re_(re, precision_bits), im_(im, precision_bits) {}

ComplexVal ComplexVal::unit(const BigFloat& theta) {
  BigFloat c(theta.precision());
  BigFloat s(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), kRound);
  return ComplexVal(std::move(c), std::move(s));
}

ComplexVal ComplexVal::parse(std::string_view re, std::string_view im, long precision_bits) {
  return ComplexVal(BigFloat::parse(re, precision_bits), BigFloat::parse(im, precision_bits));
}

ComplexVal ComplexVal::with_precision(long precision_bits) const {
  return ComplexVal(re_.with_precision(precision_bits), im_.with_precision(precision_bits));
}

ComplexVal ComplexVal::conj() const { return ComplexVal(re_, -im_); }

BigFloat ComplexVal::abs() const { return hypot(re_, im_); }

ComplexVal& ComplexVal::operator+=(const ComplexVal& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ComplexVal& ComplexVal::operator-=(const ComplexVal& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ComplexVal& ComplexVal::operator*=(const ComplexVal& rhs) {
  BigFloat re = re_ * rhs.re_ - im_ * rhs.im_;
  BigFloat im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexVal& ComplexVal::operator/=(const ComplexVal& rhs) {
  if (rhs.is_zero()) throw ValidationError("complex division by zero");
  const BigFloat denom = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  BigFloat re = (re_ * rhs.re_ + im_ * rhs.im_) / denom;
  BigFloat im = (im_ * rhs.re_ - re_ * rhs.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexVal& ComplexVal::operator*=(const BigFloat& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

ComplexVal& ComplexVal::operator/=(const BigFloat& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

ComplexVal ComplexVal::operator-() const { return ComplexVal(-re_, -im_); }

ComplexVal pow(const ComplexVal& x, long e) {
  if (e < 0) {
    ComplexVal one(Rational(1), Rational(0), x.precision());
    return pow(one / x, -e);
  }
  ComplexVal result(Rational(1), Rational(0), x.precision());
  ComplexVal base = x;
  auto k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

ComplexVal principal_root(const ComplexVal& x, unsigned long n) {
  if (n == 0) throw ValidationError("principal_root: n must be positive");
  if (x.is_zero()) return x;
  const long prec = x.precision();
  const BigFloat modulus = root(x.abs(), n);
  BigFloat theta = atan2(x.im(), x.re());
  theta /= BigFloat(static_cast<long>(n), prec);
  return ComplexVal::unit(theta) * modulus;
}

BigFloat distance(const ComplexVal& a, const ComplexVal& b) { return (a - b).abs(); }

}  // namespace demoivre
