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

#ifndef DEMOIVRE_ANALYTIC_HPP_
#define DEMOIVRE_ANALYTIC_HPP_

#include <vector>

#include "demoivre/bigfloat.hpp"
#include "demoivre/instance.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

// Relative tolerance used for numeric equality at a working precision:
// 2^(-precision/2).
BigFloat numeric_tolerance(long precision_bits);

// Numeric radicals of one instance.
//
// y^n = d + sqrt(R), y'^n = d - sqrt(R), z = y y' (so z^n = D) and
// u = z^((n-1)/2) (y + y'), a zero of f_n. sqrt(R) is the positive root for
// R > 0 and i sqrt(|R|) otherwise; y, y' are real roots of real radicands and
// principal roots otherwise. zeta = exp(2 pi i / n).
//
// orientation is +1 when z^((n+1)/2) (u/(2D) + A(u) sqrt(R)) equals y and -1
// when it equals y'. Zeros are indexed so that
//   u_k = u/2 (zeta^k + zeta^-k) + D A(u) sqrt(R) (zeta^k - zeta^-k)
// holds with this fixed zeta; in the radical form the roles of zeta and
// zeta^-1 are interchanged when orientation is -1 (see index_root()).
struct RadicalData {
  ComplexVal y;
  ComplexVal y_prime;
  ComplexVal z;
  ComplexVal u;
  ComplexVal sqrt_r;
  ComplexVal zeta;
  ComplexVal a_of_u;
  int orientation = 1;
  long precision_bits = 0;

  // zeta^orientation: the root of unity w with u_k = z^((n-1)/2)(y w^k + y' w^-k).
  ComplexVal index_root() const;
};

// Throws ValidationError for precision < 64, PrecisionError when the radicals
// or the orientation cannot be certified even after one retry at doubled
// precision.
RadicalData radical_data(const DeMoivreInstance& inst,
                         long precision_bits = kDefaultPrecisionBits);

// z^((n-1)/2) (y w^k + y' w^-k), k = 0..n-1.
std::vector<ComplexVal> zeros_from_roots(const ComplexVal& y,
                                         const ComplexVal& y_prime,
                                         const ComplexVal& z,
                                         const ComplexVal& w, int n);

struct ZeroSet {
  // u_0..u_{n-1} from the radical form; u_0 = u.
  std::vector<ComplexVal> zeros;
  RadicalData radicals;
  // max_k |radical form - closed form| / max_k |u_k|.
  BigFloat formula_mismatch;
  // max_k |f_n(u_k)|.
  BigFloat residual;
  // residual / max |coefficient of f_n|.
  BigFloat relative_residual;
  BigFloat min_separation;
  std::vector<bool> is_real;
  long precision_bits = 0;

  int real_count() const;
};

// Computes every zero by the radical form and by the closed form in u,
// A(u), zeta and checks that they agree and that f_n vanishes, retrying once
// at doubled precision. Throws PrecisionError on failure.
ZeroSet all_zeros(const DeMoivreInstance& inst,
                  long precision_bits = kDefaultPrecisionBits);

// Zero u_k for k in 1..n-1 from u = u_0, u1 = u_1 and un1 = u_{n-1}:
//   u_k = u/2 F_k((u1 + un1)/u) + D A(u) P_k((u1 - un1)/(2 D A(u)))
// for odd k; an even k is obtained as the minus-sign variant at the odd
// index n - k. Throws ValidationError for k out of range or a degenerate
// u or A(u).
ComplexVal reconstruct_zero(const ComplexVal& u, const ComplexVal& u1,
                            const ComplexVal& un1, const DeMoivreInstance& inst,
                            int k);

struct SplittingFieldReport {
  // g = sqrt(R)(zeta - zeta^-1); the splitting field is Q(u) K with K = Q(g).
  ComplexVal generator;
  // (u_1 - u_{n-1}) / (2 D A(u))
  ComplexVal generator_from_zeros;
  BigFloat generator_error;
  // g^2 and R (zeta^2 + zeta^-2 - 2)
  ComplexVal generator_squared;
  BigFloat generator_squared_error;
  // max over odd k of |sqrt(R)(zeta^k - zeta^-k) - P_k(g)|, relative.
  BigFloat sine_identity_error;
  std::vector<Rational> rational_zeros;
  // u_0 is one of the rational zeros.
  bool u_is_rational = false;
  // A rational zero exists, so the splitting field is K itself.
  bool splitting_field_is_k = false;
  long precision_bits = 0;
};

// Throws PrecisionError when any of the numeric identities fails.
SplittingFieldReport splitting_field_data(
    const DeMoivreInstance& inst, long precision_bits = kDefaultPrecisionBits);

}  // namespace demoivre

#endif  // DEMOIVRE_ANALYTIC_HPP_
