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

#include "demoivre/chebyshev.hpp"

#include "demoivre/error.hpp"

namespace demoivre {
namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_nonnegative(int n) {
  if (n < 0) throw ValidationError("Chebyshev index must be >= 0, got " + std::to_string(n));
}

// n/(n-k) C(n-k, k), the shared coefficient magnitude of T_n and F_n.
Rational closed_form_weight(int n, int k) {
  Rational w(binomial(static_cast<unsigned long>(n - k), static_cast<unsigned long>(k)) * n,
             Integer(n - k));
  w.canonicalize();
  return w;
}

}  // namespace

RatPoly chebyshev_t(int n) {
  require_nonnegative(n);
  RatPoly prev = RatPoly::constant(1);
  if (n == 0) return prev;
  RatPoly cur = RatPoly::variable();
  const RatPoly two_z = RatPoly::monomial(2, 1);
  for (int k = 2; k <= n; ++k) {
    RatPoly next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly chebyshev_t_closed_form(int n) {
  require_nonnegative(n);
  if (n == 0) return RatPoly::constant(1);
  RatPoly out;
  for (int k = 0; 2 * k <= n; ++k) {
    Rational c = closed_form_weight(n, k) * pow(Rational(2), n - 2 * k - 1);
    if (k % 2 == 1) c = -c;
    out += RatPoly::monomial(c, n - 2 * k);
  }
  return out;
}

RatPoly chebyshev_f(int n) {
  require_nonnegative(n);
  RatPoly prev = RatPoly::constant(2);
  if (n == 0) return prev;
  RatPoly cur = RatPoly::variable();
  const RatPoly z = RatPoly::variable();
  for (int k = 2; k <= n; ++k) {
    RatPoly next = z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RatPoly chebyshev_f_closed_form(int n) {
  require_nonnegative(n);
  if (n == 0) return RatPoly::constant(2);
  RatPoly out;
  for (int k = 0; 2 * k <= n; ++k) {
    Rational c = closed_form_weight(n, k);
    if (k % 2 == 1) c = -c;
    out += RatPoly::monomial(c, n - 2 * k);
  }
  return out;
}

RatPoly rescaled_chebyshev_f(int m, const Rational& V, long j) {
  require_nonnegative(m);
  if (sgn(V) == 0) throw ValidationError("rescaled_chebyshev_f: V must be nonzero");
  if ((j - m) % 2 != 0) {
    throw ValidationError("rescaled_chebyshev_f: exponent parity must match the degree");
  }
  const RatPoly f = chebyshev_f(m);
  std::vector<Rational> out(f.coefficients().size());
  for (int deg = 0; deg <= f.degree(); ++deg) {
    const Rational& c = f.coefficients()[static_cast<std::size_t>(deg)];
    if (sgn(c) == 0) continue;
    // c Z^deg -> c sqrt(V)^(j - deg) Z^deg; deg = m (mod 2) = j (mod 2).
    out[static_cast<std::size_t>(deg)] = c * pow(V, (j - deg) / 2);
  }
  return RatPoly(std::move(out));
}

RatPoly dickson(int n, const Rational& v) {
  if (sgn(v) == 0) throw ValidationError("dickson: v must be nonzero");
  return rescaled_chebyshev_f(n, v, n);
}

ChebyshevIdentityReport verify_chebyshev_identities(int n_max) {
  if (n_max < 2) throw ValidationError("verify_chebyshev_identities: n_max must be >= 2");
  ChebyshevIdentityReport report;
  report.n_max = n_max;
  std::vector<RatPoly> f;
  f.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) f.push_back(chebyshev_f(n));
  const RatPoly z = RatPoly::variable();
  const RatPoly z2_minus_4 = RatPoly{-4, 0, 1};
  const RatPoly half_z = RatPoly::monomial(Rational(1, 2), 1);
  for (int n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (f[i - 1] * f[i - 1] != f[i] * f[i - 2] - z2_minus_4) report.square_failures.push_back(n);
    if (z * f[i - 1] != f[i] + f[i - 2]) report.recurrence_failures.push_back(n);
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    const bool f_ok = f[i] == chebyshev_f_closed_form(n);
    const bool t_ok = chebyshev_t(n) == chebyshev_t_closed_form(n) &&
                      f[i] == Rational(2) * chebyshev_t(n).compose(half_z);
    if (!f_ok || !t_ok) report.closed_form_failures.push_back(n);
  }
  return report;
}

}  // namespace demoivre
