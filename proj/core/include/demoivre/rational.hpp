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

#ifndef DEMOIVRE_RATIONAL_HPP_
#define DEMOIVRE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace demoivre {

// Arbitrary precision integers and fractions. GMP keeps every mpq_class
// produced by arithmetic in canonical form (reduced, positive denominator);
// values built from text go through parse_rational, which canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

class BigFloat;

// Parses "p/q", "p" or "-p/q" (decimal). Throws ValidationError on malformed
// text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);

// x^e for any integer e; x must be nonzero when e < 0.
Rational pow(const Rational& x, long e);
Integer pow(const Integer& x, unsigned long e);

// R = s^2 * r_prime with s > 0 and r_prime a squarefree integer.
struct SquarefreeDecomp {
  Rational s;
  Integer r_prime;
};

// Throws ValidationError for R = 0, or when the squarefree part cannot be
// certified with trial division up to `trial_bound` (the unfactored cofactor
// exceeds trial_bound^3 and is not a perfect square).
SquarefreeDecomp squarefree_decompose(const Rational& R,
                                      unsigned long trial_bound = 1'000'000);

// Exponent of the prime q in x; negative when q divides the denominator.
long valuation(const Rational& x, const Integer& q);

// Trial-division factorization of |m|. `cofactor` is the unfactored part
// (1 when the factorization is complete); it has no prime factor <= bound.
struct FactorMap {
  std::map<Integer, unsigned> primes;
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

FactorMap factor_integer(const Integer& m,
                         unsigned long trial_bound = 1'000'000);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// Best continued-fraction convergent p/q of x with q <= max_den. Returns
// nullopt when that convergent is farther than `tolerance` from x. Callers
// must verify any candidate exactly.
std::optional<Rational> rational_reconstruct(const Rational& x,
                                             const Integer& max_den,
                                             const Rational& tolerance);
std::optional<Rational> rational_reconstruct(const BigFloat& x,
                                             const Integer& max_den,
                                             const Rational& tolerance);
std::optional<Rational> rational_reconstruct(double x, const Integer& max_den,
                                             double tolerance);

}  // namespace demoivre

#endif  // DEMOIVRE_RATIONAL_HPP_
