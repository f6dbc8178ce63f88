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

#ifndef DEMOIVRE_TESTS_ORACLES_HPP_
#define DEMOIVRE_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "demoivre/instance.hpp"
#include "demoivre/quadratic.hpp"

namespace demoivre::testing {

// Small random rational with |num| <= max_num, 1 <= den <= max_den, nonzero.
Rational random_rational(std::mt19937_64& rng, long max_num, long max_den);

// Random instance with odd n in [3, max_n]; R is rerolled until non-square.
DeMoivreInstance random_instance(std::mt19937_64& rng, int max_n);

// n in {3,5,7,9,15}, d in {+-1,+-2,+-3,26}, R in {+-2,+-3,+-5,-7,675}.
std::vector<DeMoivreInstance> grid_instances();

// Squarefree part of a nonzero integer by trial division (small inputs).
long squarefree_part(long m);

// Numeric oracle for sqrt(r') in Q(zeta_n): the quadratic subfields of the
// n-th cyclotomic field are generated by square roots of products of the
// Gauss-sum squares g_q^2 over subsets of the primes q | n.
bool sqrt_in_cyclotomic_by_gauss_sums(long r_prime, int n);

// x = beta^p for a random beta, with beta kept for comparison.
struct PowerCase {
  QuadElem x;
  QuadElem beta;
  int p;
};
PowerCase random_power(std::mt19937_64& rng);

// x certified not to be a p-th power in Q(sqrt(r')). kind names the
// certificate: "norm", "unit" or "split-prime".
struct NonPowerCase {
  QuadElem x;
  int p;
  std::string kind;
};
NonPowerCase random_non_power(std::mt19937_64& rng);

// Prime-degree instance with f_p(2a) = 0, built from beta = a + b sqrt(r'):
// d + sqrt(R) = beta^p / N(beta)^((p-1)/2).
DeMoivreInstance reducible_prime_instance(const Rational& a, const Rational& b,
                                          long r_prime, int p);

}  // namespace demoivre::testing

#endif  // DEMOIVRE_TESTS_ORACLES_HPP_
