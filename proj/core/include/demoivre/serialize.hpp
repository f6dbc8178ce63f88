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

#ifndef DEMOIVRE_SERIALIZE_HPP_
#define DEMOIVRE_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "demoivre/analytic.hpp"
#include "demoivre/bigfloat.hpp"
#include "demoivre/chebyshev.hpp"
#include "demoivre/galois.hpp"
#include "demoivre/instance.hpp"
#include "demoivre/polynomial.hpp"
#include "demoivre/quadratic.hpp"
#include "demoivre/rational.hpp"

// JSON encodings:
//   Rational          "p/q" ("p" when q = 1)
//   QuadElem          {"a": "p/q", "b": "p/q", "rprime": int}
//   RatPoly           ["c0", "c1", ...] ascending degree
//   ComplexVal        ["re", "im"]; the caller adds "precision_bits"
//   DeMoivreInstance  {"n", "d", "R", "s", "rprime", "D"}
namespace demoivre::json {

using nlohmann::json;

json encode(const Rational& x);
json encode(const Integer& x);
json encode(const QuadElem& x);
json encode(const RatPoly& p);
json encode(const ComplexVal& z);
json encode(const BigFloat& x);
json encode(const DeMoivreInstance& inst);
json encode(const ChebyshevIdentityReport& report);
json encode(const RadicalData& data);
json encode(const ZeroSet& zeros);
json encode(const SplittingFieldReport& report);
json encode(const PthPowerResult& result);
json encode(const IrreducibilityVerdict& verdict);
json encode(const ValuationVerdict& verdict);
json encode(const RationalZeroVerdict& verdict);
json encode(const GaloisClass& cls);

// Decoders throw ValidationError on malformed input.
Rational decode_rational(const json& j);
QuadElem decode_quad(const json& j);
RatPoly decode_poly(const json& j);
ComplexVal decode_complex(const json& j, long precision_bits);
DeMoivreInstance decode_instance(const json& j);

}  // namespace demoivre::json

#endif  // DEMOIVRE_SERIALIZE_HPP_
