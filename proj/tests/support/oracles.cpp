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

#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace demoivre::testing {
namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

bool rational_is_pth_power(const Rational& x, unsigned long p) {
  Integer r;
  const bool num_ok = mpz_root(r.get_mpz_t(), x.get_num_mpz_t(), p) != 0;
  const bool den_ok = mpz_root(r.get_mpz_t(), x.get_den_mpz_t(), p) != 0;
  return num_ok && den_ok;
}

long random_squarefree(std::mt19937_64& rng, long bound) {
  while (true) {
    const long r = uniform(rng, -bound, bound);
    if (r != 0 && r != 1 && squarefree_part(r) == r) return r;
  }
}

QuadElem random_beta(std::mt19937_64& rng, long r_prime) {
  return QuadElem(random_rational(rng, 9, 4), random_rational(rng, 9, 4), r_prime);
}

int random_prime(std::mt19937_64& rng) {
  static constexpr int kPrimes[] = {3, 5, 7, 11, 13};
  return kPrimes[uniform(rng, 0, 4)];
}

std::complex<double> gauss_sum(int q) {
  std::complex<double> g = 0;
  for (int a = 1; a < q; ++a) {
    // Euler's criterion for the Legendre symbol (a | q).
    long e = 1;
    for (int k = 0; k < (q - 1) / 2; ++k) e = e * a % q;
    const double chi = e == 1 ? 1.0 : -1.0;
    g += chi * std::polar(1.0, 2 * std::numbers::pi * a / q);
  }
  return g;
}

}  // namespace

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  long num = 0;
  while (num == 0) num = uniform(rng, -max_num, max_num);
  Rational r(num, uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

DeMoivreInstance random_instance(std::mt19937_64& rng, int max_n) {
  const int n = 2 * static_cast<int>(uniform(rng, 1, (max_n - 1) / 2)) + 1;
  const Rational d = random_rational(rng, 30, 5);
  while (true) {
    const Rational R = random_rational(rng, 30, 5);
    if (squarefree_decompose(R).r_prime != 1) return make_instance(n, d, R);
  }
}

std::vector<DeMoivreInstance> grid_instances() {
  std::vector<DeMoivreInstance> out;
  for (int n : {3, 5, 7, 9, 15}) {
    for (int d : {1, -1, 2, -2, 3, -3, 26}) {
      for (int R : {2, -2, 3, -3, 5, -5, -7, 675}) {
        out.push_back(make_instance(n, d, R));
      }
    }
  }
  return out;
}

long squarefree_part(long m) {
  long sign = m < 0 ? -1 : 1;
  long a = std::labs(m);
  long out = 1;
  for (long q = 2; q * q <= a; ++q) {
    int e = 0;
    while (a % q == 0) {
      a /= q;
      ++e;
    }
    if (e % 2 == 1) out *= q;
  }
  return sign * out * a;
}

bool sqrt_in_cyclotomic_by_gauss_sums(long r_prime, int n) {
  if (r_prime == 1) return true;
  std::vector<int> primes;
  for (int q = 3, m = n; q <= m; q += 2) {
    if (m % q == 0) {
      primes.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  std::vector<std::complex<double>> sums;
  for (int q : primes) sums.push_back(gauss_sum(q));
  for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
    std::complex<double> g = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1u << i)) g *= sums[i];
    }
    const auto m_s = static_cast<long>(std::lround((g * g).real()));
    if (squarefree_part(m_s) == r_prime) return true;
  }
  return false;
}

PowerCase random_power(std::mt19937_64& rng) {
  const long r_prime = random_squarefree(rng, 30);
  const QuadElem beta = random_beta(rng, r_prime);
  const int p = random_prime(rng);
  return {pow(beta, p), beta, p};
}

NonPowerCase random_non_power(std::mt19937_64& rng) {
  const int p = random_prime(rng);
  switch (uniform(rng, 0, 2)) {
    case 0: {
      // The norm of a p-th power is a p-th power in Q.
      const long r_prime = random_squarefree(rng, 30);
      while (true) {
        const QuadElem x(random_rational(rng, 200, 50), random_rational(rng, 200, 50), r_prime);
        if (!rational_is_pth_power(x.norm(), static_cast<unsigned long>(p))) return {x, p, "norm"};
      }
    }
    case 1: {
      // eps^j with p not dividing j, eps a fundamental unit (or zeta_3 for p = 3).
      struct Unit {
        Rational a, b;
        long r_prime;
      };
      static const Unit kUnits[] = {{1, 1, 2}, {2, 1, 3}, {Rational(1, 2), Rational(1, 2), 5},
                                    {5, 2, 6}, {8, 3, 7}, {Rational(-1, 2), Rational(1, 2), -3}};
      const std::size_t last = p == 3 ? 5 : 4;
      const Unit& u = kUnits[uniform(rng, 0, static_cast<long>(last))];
      const QuadElem eps(u.a, u.b, u.r_prime);
      const long j = uniform(rng, 1, p - 1);
      return {pow(random_beta(rng, u.r_prime), p) * pow(eps, j), p, "unit"};
    }
    default: {
      // pi conj(pi)^(p-1) for a split prime pi has valuation 1 at pi.
      struct Split {
        Rational a, b;
        long r_prime;
      };
      static const Split kSplit[] = {{2, 1, -1}, {1, 1, -2}, {3, 1, 2}};
      const Split& s = kSplit[uniform(rng, 0, 2)];
      const QuadElem pi(s.a, s.b, s.r_prime);
      const QuadElem x = pow(random_beta(rng, s.r_prime), p) * pi * pow(pi.conj(), p - 1);
      return {x, p, "split-prime"};
    }
  }
}

DeMoivreInstance reducible_prime_instance(const Rational& a, const Rational& b, long r_prime,
                                          int p) {
  const QuadElem beta(a, b, r_prime);
  const QuadElem power = pow(beta, p);
  const Rational scale = pow(beta.norm(), (p - 1) / 2);
  const Rational d = power.a() / scale;
  const Rational s = power.b() / scale;
  return make_instance(p, d, s * s * r_prime);
}

}  // namespace demoivre::testing
