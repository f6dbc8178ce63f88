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

#include "demoivre/galois.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "demoivre/analytic.hpp"
#include "demoivre/error.hpp"

namespace demoivre {
namespace {

long bit_length(const Integer& x) {
  return sgn(x) == 0 ? 0 : static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

// Bits of |num| + |den|, a crude height of a rational.
long height_bits(const Rational& x) {
  return std::max(bit_length(x.get_num()), bit_length(x.get_den())) + 1;
}

Integer mod4(const Integer& x) {
  return Integer(static_cast<unsigned long>(mpz_fdiv_ui(x.get_mpz_t(), 4)));
}

struct Candidate {
  BigFloat e;
  BigFloat f;
};

// Numeric (e, f) with e + f sqrt(r') running over the possible p-th roots of
// x in Q(sqrt(r')), as seen through one complex embedding.
std::vector<Candidate> root_candidates(const QuadElem& x, int p, long prec) {
  const auto up = static_cast<unsigned long>(p);
  const BigFloat a(x.a(), prec);
  const BigFloat b(x.b(), prec);
  const BigFloat s = sqrt(BigFloat(Rational(abs(x.r_prime())), prec));
  std::vector<Candidate> out;
  if (x.r_prime() > 0) {
    // Both embeddings are real and a real p-th root is unique (p odd). The
    // smaller embedding may suffer cancellation, so its root comes from the
    // exact norm instead: r1 r2 = N(x)^(1/p).
    const bool plus_is_larger = sgn(x.a()) * sgn(x.b()) >= 0;
    const BigFloat large = root(plus_is_larger ? a + b * s : a - b * s, up);
    const BigFloat small = root(BigFloat(x.norm(), prec), up) / large;
    const BigFloat& r1 = plus_is_larger ? large : small;
    const BigFloat& r2 = plus_is_larger ? small : large;
    const BigFloat two(2, prec);
    out.push_back({(r1 + r2) / two, (r1 - r2) / (two * s)});
    return out;
  }
  const ComplexVal w(a, b * s);
  const ComplexVal base = principal_root(w, up);
  const ComplexVal omega =
      ComplexVal::unit(BigFloat::pi(prec) * BigFloat(2, prec) / BigFloat(p, prec));
  ComplexVal c = base;
  for (int j = 0; j < p; ++j) {
    out.push_back({c.re(), c.im() / s});
    c *= omega;
  }
  return out;
}

std::optional<QuadElem> search_root(const QuadElem& x, int p, long prec, const Integer& bound,
                                    long magnitude, int& tested) {
  const Rational tol = BigFloat::exp2(magnitude + 16 - prec, prec).to_rational();
  for (const Candidate& c : root_candidates(x, p, prec)) {
    const auto e = rational_reconstruct(c.e, bound, tol);
    if (!e) continue;
    const auto f = rational_reconstruct(c.f, bound, tol);
    if (!f) continue;
    ++tested;
    QuadElem beta(*e, *f, x.r_prime());
    if (pow(beta, p) == x) return beta;
  }
  return std::nullopt;
}

bool is_power_of_three(int n) {
  while (n > 1 && n % 3 == 0) n /= 3;
  return n == 1;
}

// Products of (X - w_i) over a subset, as complex coefficients (ascending).
std::vector<ComplexVal> expand_roots(const std::vector<const ComplexVal*>& roots, long prec) {
  std::vector<ComplexVal> coeffs{ComplexVal(Rational(1), Rational(0), prec)};
  for (const ComplexVal* w : roots) {
    std::vector<ComplexVal> next(coeffs.size() + 1, ComplexVal(prec));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * *w;
    }
    coeffs = std::move(next);
  }
  return coeffs;
}

// Integer polynomial with the given complex coefficients if every one is
// within tol of an integer (imaginary parts within tol of zero).
std::optional<RatPoly> round_to_integer_poly(const std::vector<ComplexVal>& coeffs,
                                             const BigFloat& tol) {
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const ComplexVal& c : coeffs) {
    if (abs(c.im()) > tol) return std::nullopt;
    Integer r = round_to_integer(c.re());
    if (abs(c.re() - BigFloat(Rational(r), c.re().precision())) > tol) return std::nullopt;
    out.emplace_back(r);
  }
  return RatPoly(std::move(out));
}

// Calls visit(indices) for each size-k subset of 0..m-1 in lexicographic
// order until visit returns true.
template <typename Visit>
bool for_each_subset(int m, int k, Visit visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

QuadElem radicand_ratio(const DeMoivreInstance& inst) {
  // (d + s sqrt(r'))^2 / (d^2 - R)
  const Rational a = (inst.d * inst.d + inst.R) / inst.D;
  const Rational b = 2 * inst.d * inst.s / inst.D;
  return QuadElem(a, b, inst.r_prime);
}

PthPowerResult is_pth_power(const QuadElem& x, int p, const GaloisConfig& config) {
  if (x.is_zero()) throw ValidationError("is_pth_power: x must be nonzero");
  if (x.r_prime() == 1) throw ValidationError("is_pth_power: radicand 1 is not a field");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw ValidationError("is_pth_power: p must be an odd prime, got " + std::to_string(p));
  }
  // If beta^p = x then every prime ideal valuation of beta is at least
  // -v(delta)/p for the common denominator delta of x, so delta beta is
  // integral and the denominators of beta's coordinates divide 2 delta.
  Integer delta;
  mpz_lcm(delta.get_mpz_t(), x.a().get_den_mpz_t(), x.b().get_den_mpz_t());
  Integer bound = std::max<Integer>(config.max_den, 2 * delta);

  // |sigma(beta)| <= (|a| + |b| sqrt|r'|)^(1/p), bounded in bits.
  const long magnitude = std::max(height_bits(x.a()), height_bits(x.b()) + bit_length(x.r_prime())) / p + 2;

  PthPowerResult result;
  long prec = std::max<long>(config.precision_bits, 2 * bit_length(bound) + magnitude +
                                                        bit_length(abs(x.r_prime())) + 64);
  for (int attempt = 0; attempt < 2; ++attempt) {
    result.precision_used = prec;
    result.denominator_bound = bound;
    if (auto beta = search_root(x, p, prec, bound, magnitude, result.candidates_tested)) {
      result.is_power = true;
      result.root = *beta;
      result.method = PowerMethod::kExactVerifiedReconstruction;
      return result;
    }
    prec *= 2;
    bound *= 2;
  }
  result.method = PowerMethod::kExhaustedCandidates;
  return result;
}

IrreducibilityVerdict irreducible_by_pth_powers(const DeMoivreInstance& inst,
                                                const GaloisConfig& config) {
  IrreducibilityVerdict v;
  v.alpha = radicand_ratio(inst);
  v.method_chain.push_back("pth-power-test");
  bool any_power = false;
  bool any_error = false;
  for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(inst.n))) {
    PrimeWitness w;
    w.p = static_cast<int>(p);
    try {
      w.test = is_pth_power(v.alpha, w.p, config);
      any_power = any_power || w.test.is_power;
    } catch (const PrecisionError& e) {
      w.error = e.what();
      any_error = true;
    }
    v.witnesses.push_back(std::move(w));
  }
  v.verdict = any_power ? Verdict::kReducible : any_error ? Verdict::kUnknown : Verdict::kIrreducible;
  return v;
}

ValuationVerdict irreducible_by_valuations(const DeMoivreInstance& inst, unsigned long trial_bound) {
  ValuationVerdict out;
  if (!is_integer(inst.d) || !is_integer(inst.R)) {
    out.reason = "d and R must be integers";
    return out;
  }
  if (gcd(inst.d.get_num(), inst.R.get_num()) != 1) {
    out.reason = "gcd(d, R) != 1";
    return out;
  }
  const FactorMap fm = factor_integer(inst.D.get_num(), trial_bound);
  for (std::uint64_t p : prime_divisors(static_cast<std::uint64_t>(inst.n))) {
    bool found = false;
    for (const auto& [q, e] : fm.primes) {
      if (q >= 3 && e % 2 == 1 && e % p != 0) {
        out.witnesses.push_back({static_cast<int>(p), q, static_cast<long>(e)});
        found = true;
        break;
      }
    }
    if (!found) {
      out.witnesses.clear();
      out.reason = "no prime q >= 3 with v_q(D) odd and not divisible by " + std::to_string(p);
      if (!fm.complete()) out.reason += " (factorization of D incomplete)";
      return out;
    }
  }
  out.outcome = Prop7Outcome::kIrreducible;
  return out;
}

RationalZeroVerdict irreducible_by_rational_zero(const DeMoivreInstance& inst,
                                                 unsigned long trial_bound) {
  if (!is_prime(static_cast<std::uint64_t>(inst.n))) {
    throw ValidationError("rational zero criterion needs prime n, got " + std::to_string(inst.n));
  }
  RationalZeroVerdict out;
  out.rational_zeros = rational_roots(de_moivre_polynomial(inst), trial_bound);
  out.verdict = out.rational_zeros.empty() ? Verdict::kIrreducible : Verdict::kReducible;
  return out;
}

bool sqrt_in_cyclotomic(const Integer& r_prime, std::uint64_t n) {
  if (n < 3 || n % 2 == 0) throw ValidationError("sqrt_in_cyclotomic: n must be odd and >= 3");
  if (r_prime == 0) throw ValidationError("sqrt_in_cyclotomic: r' must be nonzero");
  if (mod4(r_prime) != 1) return false;
  const Integer m = abs(r_prime);
  return mpz_divisible_p(Integer(static_cast<unsigned long>(n)).get_mpz_t(), m.get_mpz_t()) != 0;
}

GaloisClass classify_galois_group(const DeMoivreInstance& inst, const GaloisConfig& config) {
  GaloisClass cls;
  cls.irreducibility = irreducible_by_pth_powers(inst, config);
  if (cls.irreducibility.verdict == Verdict::kUnknown) {
    throw PrecisionError("irreducibility could not be decided");
  }
  if (cls.irreducibility.verdict == Verdict::kReducible) {
    cls.tag = GaloisTag::kNotIrreducible;
    cls.notes.push_back("f_n is reducible over Q");
    return cls;
  }

  const int n = inst.n;
  const auto un = static_cast<std::uint64_t>(n);
  if (n % 3 == 0 && inst.r_prime == -3) {
    const auto primes = prime_divisors(un);
    const bool has_1_mod_3 =
        std::any_of(primes.begin(), primes.end(), [](std::uint64_t q) { return q % 3 == 1; });
    if (is_prime(un)) {
      cls.notes.push_back("R' = -3 with n prime: generic classification applies");
    } else if (n % 9 != 0 && !has_1_mod_3) {
      cls.notes.push_back("R' = -3, 9 does not divide n and no prime = 1 (mod 3) divides n");
    } else if (is_power_of_three(n)) {
      // P = Z^n - c with c = D^((n-1)/2)(d + sqrt(R)); the fields stay
      // disjoint only if c = a^3 zeta_3^(+-1) for some a in Q(sqrt(-3)).
      const QuadElem c = QuadElem(inst.d, inst.s, -3) * pow(inst.D, (n - 1) / 2);
      const QuadElem zeta3(Rational(-1, 2), Rational(1, 2), -3);
      const bool cube_twist = is_pth_power(c * zeta3.inverse(), 3, config).is_power ||
                              is_pth_power(c * zeta3, 3, config).is_power;
      if (!cube_twist) {
        cls.tag = GaloisTag::kExceptional3Undetermined;
        cls.notes.push_back(
            "n = 3^r, R' = -3 and D^((n-1)/2)(d + sqrt R) is not a^3 zeta_3^(+-1): "
            "K0(x) and K0(zeta_n) intersect beyond K0 (criterion stated without proof)");
        return cls;
      }
      cls.notes.push_back("n = 3^r, R' = -3 and P = Z^n - a^3 zeta_3^(+-1) (criterion stated without proof)");
    } else {
      cls.tag = GaloisTag::kExceptional3Undetermined;
      cls.notes.push_back("3 | n and R' = -3 outside the settled sub-cases; group not determined");
      return cls;
    }
  }

  const std::uint64_t full = un * euler_phi(un);
  if (inst.r_prime < 0 && sqrt_in_cyclotomic(inst.r_prime, un)) {
    cls.tag = GaloisTag::kHalfSemidirect;
    cls.group_order = full / 2;
    cls.notes.push_back("R' < 0 and sqrt(R') lies in Q(zeta_n)");
  } else {
    cls.tag = GaloisTag::kFullSemidirect;
    cls.group_order = full;
  }
  return cls;
}

std::vector<RatPoly> brute_force_factor(const DeMoivreInstance& inst, long precision_bits, int max_n) {
  const int n = inst.n;
  if (n > max_n) {
    throw ValidationError("brute_force_factor: n = " + std::to_string(n) + " exceeds max_n = " +
                          std::to_string(max_n));
  }
  const RatPoly f = de_moivre_polynomial(inst);
  const Integer c = denominator_lcm(f);
  // g(W) = c^n f(W / c) is monic with integer coefficients; its zeros are c u_k.
  std::vector<Rational> g_coeffs(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    g_coeffs[static_cast<std::size_t>(i)] = f.coeff(i) * pow(c, static_cast<unsigned long>(n - i));
  }
  RatPoly g(std::move(g_coeffs));

  ZeroSet zs = all_zeros(inst, precision_bits);
  // Size the precision so that products of up to n/2 zeros keep 64 clean bits.
  BigFloat max_abs(zs.precision_bits);
  for (const auto& u : zs.zeros) max_abs = max(max_abs, u.abs());
  const long mag = std::max<long>(magnitude_bits(max_abs) + bit_length(c) + 1, 1);
  const long needed = 2 * (mag * (n / 2 + 1) + 64);
  if (needed > zs.precision_bits) zs = all_zeros(inst, needed);
  const long prec = zs.precision_bits;
  const BigFloat c_val(Rational(c), prec);

  std::vector<ComplexVal> roots;
  for (const auto& u : zs.zeros) roots.push_back(u * c_val);
  std::sort(roots.begin(), roots.end(), [](const ComplexVal& a, const ComplexVal& b) {
    const int cr = compare(a.re(), b.re());
    return cr != 0 ? cr < 0 : a.im() < b.im();
  });
  const BigFloat tol = BigFloat::exp2(mag * (n / 2 + 1) - prec / 2, prec);
  if (tol > BigFloat(Rational(1, 8), prec)) {
    throw PrecisionError("brute_force_factor: insufficient precision for coefficient rounding");
  }

  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<RatPoly> factors;
  while (!remaining.empty()) {
    const int m = static_cast<int>(remaining.size());
    std::optional<RatPoly> factor;
    std::vector<int> used;
    for (int k = 1; k <= m / 2 && !factor; ++k) {
      for_each_subset(m, k, [&](const std::vector<int>& idx) {
        // The root sum must be an integer; cheap filter before expanding.
        ComplexVal sum(prec);
        for (int i : idx) sum += roots[static_cast<std::size_t>(remaining[static_cast<std::size_t>(i)])];
        if (abs(sum.im()) > tol) return false;
        if (abs(sum.re() - BigFloat(Rational(round_to_integer(sum.re())), prec)) > tol) return false;
        std::vector<const ComplexVal*> subset;
        for (int i : idx) subset.push_back(&roots[static_cast<std::size_t>(remaining[static_cast<std::size_t>(i)])]);
        auto h = round_to_integer_poly(expand_roots(subset, prec), tol);
        if (!h) return false;
        auto [q, r] = divrem(g, *h);
        if (!r.is_zero()) return false;
        factor = *h;
        g = std::move(q);
        used = idx;
        return true;
      });
    }
    if (!factor) {
      factors.push_back(g);
      break;
    }
    factors.push_back(*factor);
    for (auto it = used.rbegin(); it != used.rend(); ++it) {
      remaining.erase(remaining.begin() + *it);
    }
  }

  // Back to Z: h(W) -> c^(-deg h) h(c Z).
  std::vector<RatPoly> out;
  for (const RatPoly& h : factors) {
    std::vector<Rational> coeffs(h.coefficients().size());
    const int deg = h.degree();
    for (int i = 0; i <= deg; ++i) {
      coeffs[static_cast<std::size_t>(i)] = h.coeff(i) * pow(Rational(c), i - deg);
    }
    out.emplace_back(std::move(coeffs));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const RatPoly& a, const RatPoly& b) { return a.degree() < b.degree(); });
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kIrreducible: return "irreducible";
    case Verdict::kReducible: return "reducible";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Prop7Outcome v) {
  return v == Prop7Outcome::kIrreducible ? "irreducible" : "inconclusive";
}

std::string to_string(GaloisTag t) {
  switch (t) {
    case GaloisTag::kFullSemidirect: return "FullSemidirect";
    case GaloisTag::kHalfSemidirect: return "HalfSemidirect";
    case GaloisTag::kExceptional3Undetermined: return "Exceptional3Undetermined";
    case GaloisTag::kNotIrreducible: return "NotIrreducible";
  }
  return "unknown";
}

std::string to_string(PowerMethod m) {
  return m == PowerMethod::kExactVerifiedReconstruction ? "exact-verified-reconstruction"
                                                        : "exhausted-candidates";
}

}  // namespace demoivre
