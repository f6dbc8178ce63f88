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

#include "demoivre/serialize.hpp"

#include <string>

#include "demoivre/error.hpp"

namespace demoivre::json {
namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing JSON field \"") + key + "\"");
  }
  return j.at(key);
}

json encode_all(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

json encode_all(const std::vector<ComplexVal>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

}  // namespace

json encode(const Rational& x) { return to_string(x); }

json encode(const Integer& x) { return x.get_str(); }

json encode(const QuadElem& x) {
  return {{"a", encode(x.a())}, {"b", encode(x.b())}, {"rprime", encode(x.r_prime())}};
}

json encode(const RatPoly& p) { return encode_all(p.coefficients()); }

json encode(const ComplexVal& z) { return json::array({z.re().to_string(), z.im().to_string()}); }

json encode(const BigFloat& x) { return x.to_string(); }

json encode(const DeMoivreInstance& inst) {
  return {{"n", inst.n},           {"d", encode(inst.d)},
          {"R", encode(inst.R)},   {"s", encode(inst.s)},
          {"rprime", encode(inst.r_prime)}, {"D", encode(inst.D)}};
}

json encode(const ChebyshevIdentityReport& report) {
  return {{"n_max", report.n_max},
          {"ok", report.ok()},
          {"square_failures", report.square_failures},
          {"recurrence_failures", report.recurrence_failures},
          {"closed_form_failures", report.closed_form_failures}};
}

json encode(const RadicalData& data) {
  return {{"y", encode(data.y)},
          {"y_prime", encode(data.y_prime)},
          {"z", encode(data.z)},
          {"u", encode(data.u)},
          {"sqrt_R", encode(data.sqrt_r)},
          {"zeta", encode(data.zeta)},
          {"A_of_u", encode(data.a_of_u)},
          {"orientation", data.orientation},
          {"precision_bits", data.precision_bits}};
}

json encode(const ZeroSet& zeros) {
  json is_real = json::array();
  for (bool b : zeros.is_real) is_real.push_back(static_cast<bool>(b));
  return {{"zeros", encode_all(zeros.zeros)},
          {"is_real", is_real},
          {"real_count", zeros.real_count()},
          {"formula_mismatch", encode(zeros.formula_mismatch)},
          {"residual", encode(zeros.residual)},
          {"relative_residual", encode(zeros.relative_residual)},
          {"min_separation", encode(zeros.min_separation)},
          {"radicals", encode(zeros.radicals)},
          {"precision_bits", zeros.precision_bits}};
}

json encode(const SplittingFieldReport& report) {
  return {{"generator", encode(report.generator)},
          {"generator_from_zeros", encode(report.generator_from_zeros)},
          {"generator_error", encode(report.generator_error)},
          {"generator_squared", encode(report.generator_squared)},
          {"generator_squared_error", encode(report.generator_squared_error)},
          {"sine_identity_error", encode(report.sine_identity_error)},
          {"rational_zeros", encode_all(report.rational_zeros)},
          {"u_is_rational", report.u_is_rational},
          {"splitting_field_is_K", report.splitting_field_is_k},
          {"precision_bits", report.precision_bits}};
}

json encode(const PthPowerResult& result) {
  json out = {{"is_power", result.is_power},
              {"method", to_string(result.method)},
              {"candidates_tested", result.candidates_tested},
              {"precision_bits", result.precision_used},
              {"denominator_bound", encode(result.denominator_bound)}};
  out["root"] = result.root ? encode(*result.root) : json(nullptr);
  return out;
}

json encode(const IrreducibilityVerdict& verdict) {
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) {
    json entry = {{"p", w.p}, {"test", encode(w.test)}};
    if (!w.error.empty()) entry["error"] = w.error;
    witnesses.push_back(std::move(entry));
  }
  return {{"verdict", to_string(verdict.verdict)},
          {"alpha", encode(verdict.alpha)},
          {"witnesses", witnesses},
          {"method_chain", verdict.method_chain}};
}

json encode(const ValuationVerdict& verdict) {
  json witnesses = json::array();
  for (const auto& w : verdict.witnesses) {
    witnesses.push_back({{"p", w.p}, {"q", encode(w.q)}, {"v_q_D", w.valuation}});
  }
  json out = {{"outcome", to_string(verdict.outcome)}, {"witnesses", witnesses}};
  if (!verdict.reason.empty()) out["reason"] = verdict.reason;
  return out;
}

json encode(const RationalZeroVerdict& verdict) {
  return {{"verdict", to_string(verdict.verdict)},
          {"rational_zeros", encode_all(verdict.rational_zeros)}};
}

json encode(const GaloisClass& cls) {
  return {{"tag", to_string(cls.tag)},
          {"group_order", cls.group_order},
          {"notes", cls.notes},
          {"irreducibility", encode(cls.irreducibility)}};
}

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ValidationError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

QuadElem decode_quad(const json& j) {
  const Rational r = decode_rational(field(j, "rprime"));
  if (!is_integer(r)) throw ValidationError("rprime must be an integer");
  return QuadElem(decode_rational(field(j, "a")), decode_rational(field(j, "b")), r.get_num());
}

RatPoly decode_poly(const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be a JSON array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(decode_rational(c));
  return RatPoly(std::move(coeffs));
}

ComplexVal decode_complex(const json& j, long precision_bits) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
    throw ValidationError("complex value must be [\"re\", \"im\"], got " + j.dump());
  }
  return ComplexVal::parse(j[0].get<std::string>(), j[1].get<std::string>(), precision_bits);
}

DeMoivreInstance decode_instance(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer()) throw ValidationError("n must be an integer");
  DeMoivreInstance inst =
      make_instance(n.get<int>(), decode_rational(field(j, "d")), decode_rational(field(j, "R")));
  for (const char* key : {"s", "rprime", "D"}) {
    if (!j.contains(key)) continue;
    const Rational given = decode_rational(j.at(key));
    const Rational expected = std::string(key) == "s"        ? inst.s
                              : std::string(key) == "rprime" ? Rational(inst.r_prime)
                                                             : inst.D;
    if (given != expected) {
      throw ValidationError(std::string("instance field ") + key + " is inconsistent with d and R");
    }
  }
  return inst;
}

}  // namespace demoivre::json
