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

#ifndef DEMOIVRE_CHEBYSHEV_HPP_
#define DEMOIVRE_CHEBYSHEV_HPP_

#include <string>
#include <vector>

#include "demoivre/polynomial.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// Chebyshev polynomial of the first kind, cos(n x) = T_n(cos x), built with
// T_n = 2 Z T_{n-1} - T_{n-2}.
RatPoly chebyshev_t(int n);
// T_n from the explicit binomial sum (n >= 1; T_0 = 1).
RatPoly chebyshev_t_closed_form(int n);

// F_n = 2 T_n(Z/2): monic, integer coefficients, F_0 = 2, F_1 = Z,
// F_n = Z F_{n-1} - F_{n-2}.
RatPoly chebyshev_f(int n);
// F_n from sum_k (-1)^k n/(n-k) C(n-k,k) Z^(n-2k) (n >= 1; F_0 = 2).
RatPoly chebyshev_f_closed_form(int n);

// sqrt(V)^j * F_m(Z / sqrt(V)) for j = m (mod 2). Every power of sqrt(V)
// cancels to an integer power of V, so the result is rational. Throws
// ValidationError for V = 0 or a parity mismatch.
RatPoly rescaled_chebyshev_f(int m, const Rational& V, long j);

// Dickson polynomial sqrt(v)^n F_n(Z / sqrt(v)); satisfies
// D_n(w + v/w) = w^n + (v/w)^n.
RatPoly dickson(int n, const Rational& v);

struct ChebyshevIdentityReport {
  int n_max = 0;
  // Degrees n in 2..n_max where F_{n-1}^2 = F_n F_{n-2} - Z^2 + 4 fails.
  std::vector<int> square_failures;
  // Degrees n where Z F_{n-1} = F_n + F_{n-2} fails.
  std::vector<int> recurrence_failures;
  // Degrees n in 1..n_max where the recurrence and closed form of F_n differ.
  std::vector<int> closed_form_failures;

  bool ok() const {
    return square_failures.empty() && recurrence_failures.empty() &&
           closed_form_failures.empty();
  }
};

// Checks the product and three-term identities of F_n exactly for n <= n_max.
ChebyshevIdentityReport verify_chebyshev_identities(int n_max);

}  // namespace demoivre

#endif  // DEMOIVRE_CHEBYSHEV_HPP_
