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

#ifndef DEMOIVRE_GALOIS_HPP_
#define DEMOIVRE_GALOIS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "demoivre/bigfloat.hpp"
#include "demoivre/instance.hpp"
#include "demoivre/polynomial.hpp"
#include "demoivre/quadratic.hpp"
#include "demoivre/rational.hpp"

namespace demoivre {

struct GaloisConfig {
  long precision_bits = kDefaultPrecisionBits;
  // Lower bound on the denominator bound used when reconstructing p-th roots.
  Integer max_den = Integer("1000000000000");
  unsigned long trial_bound = 1'000'000;
};

enum class PowerMethod { kExactVerifiedReconstruction, kExhaustedCandidates };

struct PthPowerResult {
  bool is_power = false;
  // Present iff is_power; root^p equals the input exactly.
  std::optional<QuadElem> root;
  PowerMethod method = PowerMethod::kExhaustedCandidates;
  int candidates_tested = 0;
  long precision_used = 0;
  Integer denominator_bound;
};

// (d + sqrt(R)) / (d - sqrt(R)) = (d + sqrt(R))^2 / D over sqrt(r_prime);
// its norm is 1.
QuadElem radicand_ratio(const DeMoivreInstance& inst);

// Decides whether x = beta^p for some beta in Q(sqrt(r')). Candidates come
// from the complex p-th roots of x's embedding, reconstructed as rationals
// and verified by exact exponentiation, so a positive answer is always
// certified. The denominators of beta divide twice the common denominator of
// x; the precision is sized from that bound. Throws ValidationError for
// x = 0, r' = 1 or p not an odd prime.
PthPowerResult is_pth_power(const QuadElem& x, int p,
                            const GaloisConfig& config = {});

enum class Verdict { kIrreducible, kReducible, kUnknown };

struct PrimeWitness {
  int p = 0;
  PthPowerResult test;
  std::string error;  // set when the test could not be completed
};

struct IrreducibilityVerdict {
  Verdict verdict = Verdict::kUnknown;
  QuadElem alpha{0, 0, -1};
  std::vector<PrimeWitness> witnesses;
  std::vector<std::string> method_chain;
};

// f_n is irreducible iff for every prime p | n the radicand ratio is not a
// p-th power in Q(sqrt(R)).
IrreducibilityVerdict irreducible_by_pth_powers(const DeMoivreInstance& inst,
                                                const GaloisConfig& config = {});

enum class Prop7Outcome { kIrreducible, kInconclusive };

struct ValuationWitness {
  int p = 0;
  Integer q;
  long valuation = 0;
};

struct ValuationVerdict {
  Prop7Outcome outcome = Prop7Outcome::kInconclusive;
  std::vector<ValuationWitness> witnesses;
  std::string reason;
};

// Sufficient criterion for integral d, R with gcd(d, R) = 1: for every prime
// p | n some prime q >= 3 has v_q(D) odd and not divisible by p.
ValuationVerdict irreducible_by_valuations(const DeMoivreInstance& inst,
                                           unsigned long trial_bound = 1'000'000);

struct RationalZeroVerdict {
  Verdict verdict = Verdict::kUnknown;  // kIrreducible or kReducible
  std::vector<Rational> rational_zeros;
};

// For prime n: f_n is irreducible iff it has no rational zero. Throws
// ValidationError for composite n.
RationalZeroVerdict irreducible_by_rational_zero(const DeMoivreInstance& inst,
                                                 unsigned long trial_bound = 1'000'000);

// True iff sqrt(r') lies in the n-th cyclotomic field, for odd n >= 3 and
// squarefree r': r' = 1 (mod 4) and |r'| divides n.
bool sqrt_in_cyclotomic(const Integer& r_prime, std::uint64_t n);

enum class GaloisTag {
  kFullSemidirect,
  kHalfSemidirect,
  kExceptional3Undetermined,
  kNotIrreducible,
};

struct GaloisClass {
  GaloisTag tag = GaloisTag::kNotIrreducible;
  // n phi(n) or n phi(n)/2; 0 when not determined.
  std::uint64_t group_order = 0;
  std::vector<std::string> notes;
  IrreducibilityVerdict irreducibility;
};

// Classifies Gal(L/Q) for the splitting field L of f_n. Throws PrecisionError
// when irreducibility cannot be decided.
GaloisClass classify_galois_group(const DeMoivreInstance& inst,
                                  const GaloisConfig& config = {});

// Factorization of f_n into monic irreducible factors over Q, found by
// grouping numeric zeros into subsets whose products have integral
// coefficients (after Z -> W/c) and confirming every factor by exact
// division. Factors are ordered by degree and then by the lexicographic
// order of the zero subsets. Throws ValidationError for n > max_n and
// PrecisionError when the zeros are not accurate enough.
std::vector<RatPoly> brute_force_factor(const DeMoivreInstance& inst,
                                        long precision_bits = kDefaultPrecisionBits,
                                        int max_n = 15);

std::string to_string(Verdict v);
std::string to_string(Prop7Outcome v);
std::string to_string(GaloisTag t);
std::string to_string(PowerMethod m);

}  // namespace demoivre

#endif  // DEMOIVRE_GALOIS_HPP_
