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

#include <algorithm>
#include <sstream>

#include "demoivre/error.hpp"

namespace demoivre {
namespace {

std::vector<Integer> positive_divisors(const Integer& m, unsigned long trial_bound) {
  FactorMap f = factor_integer(m, trial_bound);
  if (!f.complete()) {
    if (mpz_probab_prime_p(f.cofactor.get_mpz_t(), 40) == 0) {
      throw ValidationError("rational_roots: cannot factor coefficient " + m.get_str());
    }
    f.primes[f.cofactor] += 1;
  }
  std::vector<Integer> divisors{1};
  for (const auto& [prime, e] : f.primes) {
    const std::size_t base = divisors.size();
    Integer power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= prime;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * power);
    }
  }
  return divisors;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RatPoly::RatPoly(std::initializer_list<Rational> ascending)
    : RatPoly(std::vector<Rational>(ascending)) {}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw ValidationError("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

void RatPoly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& RatPoly::leading() const {
  if (is_zero()) throw ValidationError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return RatPoly();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

RatPoly RatPoly::compose(const RatPoly& q) const {
  RatPoly result;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * q + constant(*it);
  }
  return result;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return RatPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  }
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && i > 0;
    if (!unit) {
      os << demoivre::to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << variable;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw ValidationError("polynomial division by zero");
  std::vector<Rational> rem = num.coefficients();
  const int dd = den.degree();
  const int nd = num.degree();
  if (nd < dd) return {RatPoly(), num};
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1);
  const Rational& lead = den.leading();
  for (int i = nd; i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= c * den.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

Rational evaluate(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QuadElem evaluate(const RatPoly& p, const QuadElem& x) {
  QuadElem acc = QuadElem::from_rational(0, x.r_prime());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += QuadElem::from_rational(*it, x.r_prime());
  }
  return acc;
}

ComplexVal evaluate(const RatPoly& p, const ComplexVal& x) {
  const long prec = x.precision();
  ComplexVal acc(prec);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += ComplexVal(*it, Rational(0), prec);
  }
  return acc;
}

BigFloat evaluation_scale(const RatPoly& p, const BigFloat& abs_x) {
  BigFloat acc(abs_x.precision());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * abs_x + BigFloat(Rational(abs(*it)), abs_x.precision());
  }
  return acc;
}

Integer denominator_lcm(const RatPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  return l;
}

std::vector<Rational> rational_roots(const RatPoly& p, unsigned long trial_bound) {
  if (p.is_zero()) throw ValidationError("rational_roots of the zero polynomial");
  // Primitive integer multiple.
  const Integer l = denominator_lcm(p);
  std::vector<Integer> a;
  Integer content = 0;
  for (const auto& c : p.coefficients()) {
    Rational scaled = c * l;
    a.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.back().get_mpz_t());
  }
  for (auto& x : a) x /= content;

  std::vector<Rational> roots;
  std::size_t shift = 0;
  while (shift < a.size() && a[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(shift));
  const std::size_t n = a.size() - 1;
  if (n == 0) return roots;

  // |root| <= 1 + max |a_i / a_n| (Cauchy).
  Integer max_coeff = 0;
  for (std::size_t i = 0; i < n; ++i) max_coeff = std::max<Integer>(max_coeff, abs(a[i]));
  const Rational bound = 1 + Rational(max_coeff, abs(a[n]));

  const std::vector<Integer> num_divs = positive_divisors(a[0], trial_bound);
  const std::vector<Integer> den_divs = positive_divisors(a[n], trial_bound);
  for (const Integer& q : den_divs) {
    std::vector<Integer> q_pow(n + 1);
    q_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) q_pow[i] = q_pow[i - 1] * q;
    for (const Integer& pp : num_divs) {
      if (gcd(pp, q) != 1 || Rational(pp, q) > bound) continue;
      for (int sign : {1, -1}) {
        const Integer num = sign * pp;
        // q^n f(num/q) = sum a_i num^i q^(n-i)
        Integer acc = a[n];
        for (std::size_t i = n; i-- > 0;) acc = acc * num + a[i] * q_pow[n - i];
        if (acc == 0) {
          Rational r(num, q);
          r.canonicalize();
          roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace demoivre
