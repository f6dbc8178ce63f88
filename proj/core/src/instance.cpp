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

#include "demoivre/instance.hpp"

#include <string>

#include "demoivre/chebyshev.hpp"
#include "demoivre/error.hpp"

namespace demoivre {

DeMoivreInstance make_instance(int n, const Rational& d, const Rational& R) {
  if (n < 3 || n % 2 == 0) {
    throw ValidationError("n must be odd and >= 3, got " + std::to_string(n));
  }
  if (sgn(d) == 0) throw ValidationError("d must be nonzero");
  if (sgn(R) == 0) throw ValidationError("R must not be a square (R = 0)");
  const SquarefreeDecomp sq = squarefree_decompose(R);
  if (sq.r_prime == 1) throw ValidationError("R = " + to_string(R) + " is a square");
  DeMoivreInstance inst;
  inst.n = n;
  inst.d = d;
  inst.R = R;
  inst.s = sq.s;
  inst.r_prime = sq.r_prime;
  inst.D = d * d - R;
  return inst;
}

RatPoly de_moivre_polynomial(const DeMoivreInstance& inst) {
  const int n = inst.n;
  return dickson(n, inst.D) - RatPoly::constant(2 * inst.d * pow(inst.D, (n - 1) / 2));
}

RatPoly reduction_polynomial(const DeMoivreInstance& inst) {
  const int n = inst.n;
  RatPoly a = rescaled_chebyshev_f(n - 1, inst.D, 0) -
              RatPoly::monomial(inst.d / inst.D, 1);
  return a * Rational(1 / (2 * inst.R));
}

RatPoly reduction_cofactor(const DeMoivreInstance& inst) {
  const int n = inst.n;
  RatPoly c = rescaled_chebyshev_f(n - 2, inst.D, 4 - n) -
              RatPoly::constant(2 * inst.d / pow(inst.D, (n - 3) / 2));
  return c * Rational(1 / inst.R);
}

bool verify_reduction_identity(const DeMoivreInstance& inst) {
  const RatPoly a = reduction_polynomial(inst);
  const RatPoly lhs = Rational(4 * inst.D * inst.D * inst.R) * (a * a);
  const RatPoly rhs = de_moivre_polynomial(inst) * reduction_cofactor(inst) +
                      RatPoly{Rational(-4 * inst.D), 0, 1};
  return lhs == rhs;
}

RatPoly odd_sine_polynomial(int k, const Rational& R) {
  if (k < 1 || k % 2 == 0) {
    throw ValidationError("odd_sine_polynomial: k must be odd and >= 1, got " + std::to_string(k));
  }
  if (sgn(R) == 0) throw ValidationError("odd_sine_polynomial: R must be nonzero");
  // (i sqrt(R))^2 = -R
  RatPoly p = rescaled_chebyshev_f(k, -R, 1);
  if (((k - 1) / 2) % 2 == 1) p = -p;
  return p;
}

DeMoivreInstance filaseta_instance(int p, const Integer& m) {
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("filaseta family needs a prime p >= 5, got " + std::to_string(p));
  }
  if (m < 2) throw ValidationError("filaseta family needs m >= 2, got " + m.get_str());
  const auto up = static_cast<unsigned long>(p);
  Rational d(-1, 2 * pow(m, (up - 1) / 2));
  d.canonicalize();
  Rational R(1 - 4 * pow(m, up), 4 * pow(m, up - 1));
  R.canonicalize();
  return make_instance(p, d, R);
}

DeMoivreInstance bruen_instance(int p, const Rational& d, const Rational& s) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) || p % 4 != 3) {
    throw ValidationError("bruen family needs a prime p = 3 (mod 4), got " + std::to_string(p));
  }
  if (sgn(s) == 0) throw ValidationError("bruen family needs s != 0");
  return make_instance(p, d, Rational(-p * s * s));
}

}  // namespace demoivre
