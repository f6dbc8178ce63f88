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

#ifndef DEMOIVRE_INSTANCE_HPP_
#define DEMOIVRE_INSTANCE_HPP_

#include <cstdint>

#include "demoivre/polynomial.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// Parameters of one odd-degree De Moivre polynomial f_n(Z, d, R).
//
// Invariants (enforced by make_instance): n odd and >= 3, d != 0, R not a
// rational square, R = s^2 r_prime with s > 0 and r_prime squarefree,
// D = d^2 - R != 0.
struct DeMoivreInstance {
  int n = 0;
  Rational d;
  Rational R;
  Rational s;
  Integer r_prime;
  Rational D;
};

// Throws ValidationError for even n, n < 3, d = 0, or R a square.
DeMoivreInstance make_instance(int n, const Rational& d, const Rational& R);

// f_n = sqrt(D)^n F_n(Z/sqrt(D)) - 2 d D^((n-1)/2): monic of degree n with
// the zero u = z^((n-1)/2) (y + y'), where y^n = d + sqrt(R),
// y'^n = d - sqrt(R) and z = y y'.
RatPoly de_moivre_polynomial(const DeMoivreInstance& inst);

// A = (F_{n-1}(Z/sqrt(D)) - d Z / D) / (2R), degree n-1. At a zero u of f_n
// the two radicals are recovered as z^((n+1)/2) (u/(2D) +- A(u) sqrt(R)).
RatPoly reduction_polynomial(const DeMoivreInstance& inst);

// f'_{n-2} = (sqrt(D)^(4-n) F_{n-2}(Z/sqrt(D)) - 2d / D^((n-3)/2)) / R,
// degree n-2; the cofactor in 4 D^2 R A^2 = f_n f'_{n-2} + Z^2 - 4D.
RatPoly reduction_cofactor(const DeMoivreInstance& inst);

// Exact check of 4 D^2 R A^2 = f_n f'_{n-2} + Z^2 - 4D.
bool verify_reduction_identity(const DeMoivreInstance& inst);

// P_k = i sqrt(R) (-1)^((k-1)/2) F_k(Z / (i sqrt(R))) for odd k >= 1, so that
// sqrt(R)(zeta^k - zeta^-k) = P_k(sqrt(R)(zeta - zeta^-1)). Throws
// ValidationError for even k, k < 1 or R = 0.
RatPoly odd_sine_polynomial(int k, const Rational& R);

// d = -1/(2 m^((p-1)/2)), R = (1 - 4 m^p)/(4 m^(p-1)); then D = m and
// f_p = dickson(p, m) + 1. Requires p prime >= 5 and m >= 2.
DeMoivreInstance filaseta_instance(int p, const Integer& m);

// n = p, R = -p s^2 for a prime p = 3 (mod 4). Requires d != 0, s != 0.
DeMoivreInstance bruen_instance(int p, const Rational& d, const Rational& s);

}  // namespace demoivre

#endif  // DEMOIVRE_INSTANCE_HPP_
