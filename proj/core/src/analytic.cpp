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

#include "demoivre/analytic.hpp"

#include <optional>
#include <string>

#include "demoivre/chebyshev.hpp"
#include "demoivre/error.hpp"
#include "demoivre/polynomial.hpp"

namespace demoivre {
namespace {

void require_precision(long precision_bits) {
  if (precision_bits < 64) {
    throw ValidationError("precision must be >= 64 bits, got " + std::to_string(precision_bits));
  }
}

ComplexVal real(const Rational& x, long prec) { return ComplexVal(x, Rational(0), prec); }

// |a - b| <= tol * scale
bool close(const ComplexVal& a, const ComplexVal& b, const BigFloat& scale, const BigFloat& tol) {
  return distance(a, b) <= tol * scale;
}

// Runs `attempt` at the requested precision and once more at twice that
// precision when the first attempt cannot certify its result.
template <typename Attempt>
auto with_retry(long precision_bits, Attempt attempt) {
  require_precision(precision_bits);
  try {
    return attempt(precision_bits);
  } catch (const PrecisionError&) {
    return attempt(2 * precision_bits);
  }
}

RadicalData radical_data_at(const DeMoivreInstance& inst, long prec) {
  const int n = inst.n;
  const BigFloat tol = numeric_tolerance(prec);
  const auto un = static_cast<unsigned long>(n);

  RadicalData rd;
  rd.precision_bits = prec;
  const BigFloat abs_sqrt_r = sqrt(BigFloat(Rational(abs(inst.R)), prec));
  rd.sqrt_r = sgn(inst.R) > 0 ? ComplexVal(abs_sqrt_r, BigFloat(prec))
                              : ComplexVal(BigFloat(prec), abs_sqrt_r);
  const ComplexVal w_plus = real(inst.d, prec) + rd.sqrt_r;
  const ComplexVal w_minus = real(inst.d, prec) - rd.sqrt_r;
  if (sgn(inst.R) > 0) {
    rd.y = ComplexVal(root(w_plus.re(), un), BigFloat(prec));
    rd.y_prime = ComplexVal(root(w_minus.re(), un), BigFloat(prec));
  } else {
    rd.y = principal_root(w_plus, un);
    rd.y_prime = principal_root(w_minus, un);
  }
  rd.z = rd.y * rd.y_prime;
  rd.u = pow(rd.z, (n - 1) / 2) * (rd.y + rd.y_prime);
  rd.zeta = ComplexVal::unit(BigFloat::pi(prec) * BigFloat(2, prec) / BigFloat(n, prec));

  const ComplexVal d_val = real(inst.D, prec);
  if (!close(pow(rd.y, n), w_plus, w_plus.abs(), tol) ||
      !close(pow(rd.y_prime, n), w_minus, w_minus.abs(), tol) ||
      !close(pow(rd.z, n), d_val, d_val.abs(), tol)) {
    throw PrecisionError("radical roots not accurate at " + std::to_string(prec) + " bits");
  }

  rd.a_of_u = evaluate(reduction_polynomial(inst), rd.u);
  const ComplexVal zpow = pow(rd.z, (n + 1) / 2);
  const ComplexVal centre = rd.u / (BigFloat(2, prec) * d_val.re());
  const ComplexVal offset = rd.a_of_u * rd.sqrt_r;
  const ComplexVal plus = zpow * (centre + offset);
  const ComplexVal minus = zpow * (centre - offset);
  const BigFloat scale = max(rd.y.abs(), rd.y_prime.abs());
  if (close(plus, rd.y, scale, tol) && close(minus, rd.y_prime, scale, tol)) {
    rd.orientation = 1;
  } else if (close(plus, rd.y_prime, scale, tol) && close(minus, rd.y, scale, tol)) {
    rd.orientation = -1;
  } else {
    throw PrecisionError("cannot resolve the reduction sign at " + std::to_string(prec) + " bits");
  }
  return rd;
}

ZeroSet all_zeros_at(const DeMoivreInstance& inst, long prec) {
  const int n = inst.n;
  const BigFloat tol = numeric_tolerance(prec);
  ZeroSet zs;
  zs.radicals = radical_data_at(inst, prec);
  zs.precision_bits = prec;
  const RadicalData& rd = zs.radicals;
  zs.zeros = zeros_from_roots(rd.y, rd.y_prime, rd.z, rd.index_root(), n);

  // Closed form u_k = u/2 (zeta^k + zeta^-k) + D A(u) sqrt(R) (zeta^k - zeta^-k).
  const ComplexVal half_u = rd.u / BigFloat(2, prec);
  const ComplexVal odd_part = rd.a_of_u * rd.sqrt_r * BigFloat(inst.D, prec);
  const ComplexVal zeta_inv = rd.zeta.conj();
  ComplexVal zk = real(1, prec);
  ComplexVal zk_inv = real(1, prec);
  BigFloat scale(prec);
  for (const auto& u : zs.zeros) scale = max(scale, u.abs());

  BigFloat mismatch(prec);
  BigFloat residual(prec);
  const RatPoly f = de_moivre_polynomial(inst);
  for (int k = 0; k < n; ++k) {
    const ComplexVal closed = half_u * (zk + zk_inv) + odd_part * (zk - zk_inv);
    const ComplexVal& u_k = zs.zeros[static_cast<std::size_t>(k)];
    mismatch = max(mismatch, distance(closed, u_k));
    const BigFloat r = evaluate(f, u_k).abs();
    if (r > tol * evaluation_scale(f, u_k.abs())) {
      throw PrecisionError("zero " + std::to_string(k) + " fails f_n(u_k) = 0 at " +
                           std::to_string(prec) + " bits");
    }
    residual = max(residual, r);
    zk *= rd.zeta;
    zk_inv *= zeta_inv;
  }
  zs.formula_mismatch = mismatch / scale;
  if (zs.formula_mismatch > tol) {
    throw PrecisionError("radical and closed-form zeros disagree at " + std::to_string(prec) +
                         " bits");
  }
  zs.residual = residual;
  BigFloat max_coeff(prec);
  for (const auto& c : f.coefficients()) max_coeff = max(max_coeff, BigFloat(Rational(abs(c)), prec));
  zs.relative_residual = residual / max_coeff;

  std::optional<BigFloat> min_sep;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      BigFloat dist = distance(zs.zeros[static_cast<std::size_t>(j)], zs.zeros[static_cast<std::size_t>(k)]);
      if (!min_sep || dist < *min_sep) min_sep = std::move(dist);
    }
  }
  zs.min_separation = *min_sep;
  if (zs.min_separation <= tol * scale) {
    throw PrecisionError("zeros not separated at " + std::to_string(prec) + " bits");
  }
  for (const auto& u : zs.zeros) zs.is_real.push_back(abs(u.im()) <= tol * scale);
  return zs;
}

}  // namespace

BigFloat numeric_tolerance(long precision_bits) {
  return BigFloat::exp2(-precision_bits / 2, precision_bits);
}

ComplexVal RadicalData::index_root() const { return orientation == 1 ? zeta : zeta.conj(); }

RadicalData radical_data(const DeMoivreInstance& inst, long precision_bits) {
  return with_retry(precision_bits, [&](long prec) { return radical_data_at(inst, prec); });
}

std::vector<ComplexVal> zeros_from_roots(const ComplexVal& y, const ComplexVal& y_prime,
                                         const ComplexVal& z, const ComplexVal& w, int n) {
  const long prec = y.precision();
  const ComplexVal zpow = pow(z, (n - 1) / 2);
  const ComplexVal w_inv = real(1, prec) / w;
  std::vector<ComplexVal> out;
  out.reserve(static_cast<std::size_t>(n));
  ComplexVal wk = real(1, prec);
  ComplexVal wk_inv = real(1, prec);
  for (int k = 0; k < n; ++k) {
    out.push_back(zpow * (y * wk + y_prime * wk_inv));
    wk *= w;
    wk_inv *= w_inv;
  }
  return out;
}

int ZeroSet::real_count() const {
  int c = 0;
  for (bool r : is_real) c += r ? 1 : 0;
  return c;
}

ZeroSet all_zeros(const DeMoivreInstance& inst, long precision_bits) {
  return with_retry(precision_bits, [&](long prec) { return all_zeros_at(inst, prec); });
}

ComplexVal reconstruct_zero(const ComplexVal& u, const ComplexVal& u1, const ComplexVal& un1,
                            const DeMoivreInstance& inst, int k) {
  const int n = inst.n;
  if (k < 1 || k > n - 1) {
    throw ValidationError("reconstruct_zero: k must lie in 1..n-1, got " + std::to_string(k));
  }
  const long prec = u.precision();
  const BigFloat tol = numeric_tolerance(prec);
  const BigFloat scale = max(max(u.abs(), u1.abs()), max(un1.abs(), BigFloat(1, prec)));
  if (u.abs() <= tol * scale) throw ValidationError("reconstruct_zero: u is zero");
  const ComplexVal da = evaluate(reduction_polynomial(inst), u) * BigFloat(inst.D, prec);
  if (da.abs() <= tol * scale) throw ValidationError("reconstruct_zero: A(u) vanishes");

  const bool odd = k % 2 == 1;
  const int index = odd ? k : n - k;
  const ComplexVal cos_arg = (u1 + un1) / u;
  const ComplexVal sin_arg = (u1 - un1) / (BigFloat(2, prec) * da);
  const ComplexVal even_part = u / BigFloat(2, prec) * evaluate(chebyshev_f(index), cos_arg);
  const ComplexVal odd_part = da * evaluate(odd_sine_polynomial(index, inst.R), sin_arg);
  return odd ? even_part + odd_part : even_part - odd_part;
}

SplittingFieldReport splitting_field_data(const DeMoivreInstance& inst, long precision_bits) {
  const ZeroSet zs = all_zeros(inst, precision_bits);
  const RadicalData& rd = zs.radicals;
  const long prec = zs.precision_bits;
  const BigFloat tol = numeric_tolerance(prec);
  const int n = inst.n;

  SplittingFieldReport rep;
  rep.precision_bits = prec;
  const ComplexVal zeta_inv = rd.zeta.conj();
  rep.generator = rd.sqrt_r * (rd.zeta - zeta_inv);
  const ComplexVal da = rd.a_of_u * BigFloat(inst.D, prec);
  rep.generator_from_zeros =
      (zs.zeros[1] - zs.zeros[static_cast<std::size_t>(n - 1)]) / (BigFloat(2, prec) * da);
  rep.generator_error = distance(rep.generator, rep.generator_from_zeros) / rep.generator.abs();

  rep.generator_squared = rep.generator * rep.generator;
  const ComplexVal zeta2 = rd.zeta * rd.zeta;
  const ComplexVal expected =
      (zeta2 + zeta2.conj() - real(2, prec)) * BigFloat(inst.R, prec);
  rep.generator_squared_error = distance(rep.generator_squared, expected) / expected.abs();

  const BigFloat sine_scale = BigFloat(2, prec) * rd.sqrt_r.abs();
  BigFloat sine_err(prec);
  ComplexVal zk = rd.zeta;
  ComplexVal zk_inv = zeta_inv;
  const ComplexVal zeta_sq = zeta2;
  const ComplexVal zeta_sq_inv = zeta2.conj();
  for (int k = 1; k < n; k += 2) {
    const ComplexVal lhs = rd.sqrt_r * (zk - zk_inv);
    const ComplexVal rhs = evaluate(odd_sine_polynomial(k, inst.R), rep.generator);
    sine_err = max(sine_err, distance(lhs, rhs) / sine_scale);
    zk *= zeta_sq;
    zk_inv *= zeta_sq_inv;
  }
  rep.sine_identity_error = sine_err;

  if (rep.generator_error > tol || rep.generator_squared_error > tol || rep.sine_identity_error > tol) {
    throw PrecisionError("splitting field identities fail at " + std::to_string(prec) + " bits");
  }

  rep.rational_zeros = rational_roots(de_moivre_polynomial(inst));
  const BigFloat u_scale = max(rd.u.abs(), BigFloat(1, prec));
  for (const auto& r : rep.rational_zeros) {
    if (close(rd.u, real(r, prec), u_scale, tol)) rep.u_is_rational = true;
  }
  rep.splitting_field_is_k = !rep.rational_zeros.empty();
  return rep;
}

}  // namespace demoivre
