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

#include "demoivre/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "demoivre/bigfloat.hpp"
#include "demoivre/error.hpp"

namespace demoivre {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Removes every factor `d` from `rest`, returning the multiplicity.
unsigned remove_factor(Integer& rest, unsigned long d) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
    ++e;
  }
  return e;
}

// Calls visit(d, multiplicity) for each prime d <= bound dividing |m|
// (2, then odd candidates; composites never divide once their primes are
// removed). Returns the cofactor and whether trial division stopped because
// d*d exceeded it, in which case a cofactor > 1 is prime.
template <typename Visit>
std::pair<Integer, bool> trial_divide(const Integer& m, unsigned long bound,
                                      Visit visit) {
  Integer rest = abs(m);
  auto step = [&](unsigned long d) {
    if (unsigned e = remove_factor(rest, d); e > 0) visit(d, e);
  };
  if (bound >= 2) step(2);
  unsigned long d = 3;
  for (; d <= bound; d += 2) {
    if (Integer(d) * d > rest) return {rest, true};
    step(d);
  }
  return {rest, Integer(d) * d > rest};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view sign;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.substr(0, 1);
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
  if (sign == "-") n = -n;
  Rational r(n, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer pow(const Integer& x, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& x, long e) {
  if (e < 0) {
    if (sgn(x) == 0) throw ValidationError("negative power of zero");
    Rational inv = 1 / x;
    return pow(inv, -e);
  }
  const auto ue = static_cast<unsigned long>(e);
  Rational r(pow(x.get_num(), ue), pow(x.get_den(), ue));
  return r;
}

SquarefreeDecomp squarefree_decompose(const Rational& R, unsigned long trial_bound) {
  if (sgn(R) == 0) throw ValidationError("squarefree_decompose: zero input");
  const Integer t = R.get_num() * R.get_den();
  Integer root_part = 1;
  Integer squarefree = 1;
  auto [rest, rest_is_prime] = trial_divide(t, trial_bound, [&](unsigned long p, unsigned e) {
    root_part *= pow(Integer(p), e / 2);
    if (e % 2 == 1) squarefree *= p;
  });
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      root_part *= sqrt(rest);
    } else if (rest_is_prime || rest <= pow(Integer(trial_bound), 3)) {
      // Not a square and every prime factor exceeds the bound, so the
      // cofactor is p or p*q with p != q.
      squarefree *= rest;
    } else {
      throw ValidationError("squarefree_decompose: cannot certify squarefree part of " +
                            t.get_str() + " with trial bound " + std::to_string(trial_bound));
    }
  }
  SquarefreeDecomp out;
  out.s = Rational(root_part, R.get_den());
  out.s.canonicalize();
  out.r_prime = sgn(t) < 0 ? Integer(-squarefree) : squarefree;
  return out;
}

long valuation(const Rational& x, const Integer& q) {
  if (sgn(x) == 0) throw ValidationError("valuation of zero");
  if (q < 2) throw ValidationError("valuation: q must be a prime");
  Integer tmp;
  const long up = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num_mpz_t(), q.get_mpz_t()));
  const long down = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den_mpz_t(), q.get_mpz_t()));
  return up - down;
}

FactorMap factor_integer(const Integer& m, unsigned long trial_bound) {
  if (m == 0) throw ValidationError("factor_integer: zero input");
  FactorMap out;
  auto [rest, rest_is_prime] = trial_divide(m, trial_bound, [&](unsigned long p, unsigned e) {
    out.primes[Integer(p)] = e;
  });
  if (rest > 1 && rest_is_prime) {
    out.primes[rest] += 1;
    rest = 1;
  }
  out.cofactor = rest;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (std::uint64_t p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

std::optional<Rational> rational_reconstruct(const Rational& x, const Integer& max_den,
                                             const Rational& tolerance) {
  if (max_den < 1) throw ValidationError("rational_reconstruct: max_den must be >= 1");
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  Rational best;
  Rational r = x;
  while (true) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    if (k > max_den) break;
    best = Rational(h, k);
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Rational frac = r - a;
    if (sgn(frac) == 0) break;
    r = 1 / frac;
  }
  best.canonicalize();
  if (abs(Rational(x - best)) <= tolerance) return best;
  return std::nullopt;
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const Integer& max_den,
                                             const Rational& tolerance) {
  if (!x.is_finite()) throw ValidationError("rational_reconstruct: non-finite input");
  return rational_reconstruct(x.to_rational(), max_den, tolerance);
}

std::optional<Rational> rational_reconstruct(double x, const Integer& max_den,
                                             double tolerance) {
  if (!std::isfinite(x) || !std::isfinite(tolerance)) {
    throw ValidationError("rational_reconstruct: non-finite input");
  }
  return rational_reconstruct(Rational(x), max_den, Rational(tolerance));
}

}  // namespace demoivre
