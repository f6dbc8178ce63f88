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

#include "demoivre/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "demoivre/analytic.hpp"
#include "demoivre/chebyshev.hpp"
#include "demoivre/error.hpp"
#include "demoivre/galois.hpp"
#include "demoivre/instance.hpp"
#include "demoivre/serialize.hpp"

namespace demoivre::cli {
namespace {

using nlohmann::json;
namespace js = demoivre::json;

struct Request {
  std::string command;
  std::string n = "9";
  std::string d = "26";
  std::string R = "675";
  long precision_bits = kDefaultPrecisionBits;
  std::string max_den = "1000000000000";
  unsigned long trial_bound = 1'000'000;
  std::string format = "json";
  std::string family = "none";
  int p = 0;
  std::string m;
  std::string s = "1";
  int n_max = 64;
  int max_n = 15;
  bool deterministic = false;
};

// Printed approximations of the worked example (n = 9, d = 26, R = 675).
constexpr double kExampleTolerance = 1e-5;
constexpr double kExampleU1[2] = {1.682098, -0.582651};
constexpr double kExampleAofU = -0.017445;
constexpr double kExampleU7[2] = {0.381301, 0.892673};

int parse_int(const std::string& text, const char* what) {
  const Rational r = parse_rational(text);
  if (!is_integer(r) || !r.get_num().fits_sint_p()) {
    throw ValidationError(std::string(what) + " must be a machine integer, got '" + text + "'");
  }
  return static_cast<int>(r.get_num().get_si());
}

DeMoivreInstance build_instance(const Request& req) {
  if (req.family == "filaseta") {
    if (req.m.empty()) throw ValidationError("--family filaseta needs --m");
    const Rational m = parse_rational(req.m);
    if (!is_integer(m)) throw ValidationError("--m must be an integer");
    return filaseta_instance(req.p, m.get_num());
  }
  if (req.family == "bruen") {
    return bruen_instance(req.p, parse_rational(req.d), parse_rational(req.s));
  }
  return make_instance(parse_int(req.n, "n"), parse_rational(req.d), parse_rational(req.R));
}

GaloisConfig config_of(const Request& req) {
  GaloisConfig c;
  c.precision_bits = req.precision_bits;
  const Rational md = parse_rational(req.max_den);
  if (!is_integer(md) || md < 1) throw ValidationError("--max-den must be a positive integer");
  c.max_den = md.get_num();
  c.trial_bound = req.trial_bound;
  return c;
}

json cmd_construct(const DeMoivreInstance& inst) {
  const RatPoly f = de_moivre_polynomial(inst);
  const RatPoly a = reduction_polynomial(inst);
  const RatPoly c = reduction_cofactor(inst);
  return {{"f_n", js::encode(f)},
          {"A", js::encode(a)},
          {"f_prime_n_minus_2", js::encode(c)},
          {"display", {{"f_n", f.to_string()}, {"A", a.to_string()}, {"f_prime_n_minus_2", c.to_string()}}}};
}

json cmd_identities(const DeMoivreInstance& inst, int n_max) {
  return {{"reduction_identity", verify_reduction_identity(inst)},
          {"chebyshev", js::encode(verify_chebyshev_identities(n_max))}};
}

json cmd_reconstruct(const DeMoivreInstance& inst, long prec) {
  const ZeroSet zs = all_zeros(inst, prec);
  const int n = inst.n;
  BigFloat scale(zs.precision_bits);
  for (const auto& u : zs.zeros) scale = max(scale, u.abs());
  json rows = json::array();
  BigFloat worst(zs.precision_bits);
  const auto& z = zs.zeros;
  for (int k = 1; k < n; ++k) {
    const ComplexVal rec = reconstruct_zero(z[0], z[1], z[static_cast<std::size_t>(n - 1)], inst, k);
    const BigFloat err = distance(rec, z[static_cast<std::size_t>(k)]) / scale;
    worst = max(worst, err);
    rows.push_back({{"k", k},
                    {"reconstructed", js::encode(rec)},
                    {"direct", js::encode(z[static_cast<std::size_t>(k)])},
                    {"relative_error", js::encode(err)}});
  }
  return {{"rows", rows}, {"max_relative_error", js::encode(worst)}, {"precision_bits", zs.precision_bits}};
}

json cmd_irreducible(const DeMoivreInstance& inst, const GaloisConfig& config) {
  json out = {{"pth_powers", js::encode(irreducible_by_pth_powers(inst, config))},
              {"valuations", js::encode(irreducible_by_valuations(inst, config.trial_bound))}};
  if (is_prime(static_cast<std::uint64_t>(inst.n))) {
    out["rational_zero"] = js::encode(irreducible_by_rational_zero(inst, config.trial_bound));
  }
  out["verdict"] = out["pth_powers"]["verdict"];
  return out;
}

json cmd_oracle(const DeMoivreInstance& inst, long prec, int max_n) {
  const auto factors = brute_force_factor(inst, prec, max_n);
  RatPoly product = RatPoly::constant(1);
  json arr = json::array();
  json display = json::array();
  for (const auto& f : factors) {
    product *= f;
    arr.push_back(js::encode(f));
    display.push_back(f.to_string());
  }
  return {{"factors", arr},
          {"display", display},
          {"irreducible", factors.size() == 1},
          {"product_matches", product == de_moivre_polynomial(inst)}};
}

bool near(const BigFloat& x, double expected) {
  return std::abs(x.to_double() - expected) <= kExampleTolerance;
}

json cmd_example(long prec, bool& passed) {
  const DeMoivreInstance inst = make_instance(9, 26, 675);
  const RatPoly expected = RatPoly{-4, -3, 0, 1} * RatPoly{13, -12, 9, 4, -6, 0, 1};
  const bool factor_ok = de_moivre_polynomial(inst) == expected;
  const ZeroSet zs = all_zeros(inst, prec);
  const ComplexVal& u1 = zs.zeros[1];
  const ComplexVal& u7 = zs.zeros[7];
  const BigFloat& a = zs.radicals.a_of_u.re();
  const bool u1_ok = near(u1.re(), kExampleU1[0]) && near(u1.im(), kExampleU1[1]);
  const bool a_ok = near(a, kExampleAofU) && zs.radicals.a_of_u.im().is_zero();
  const bool u7_ok = near(u7.re(), kExampleU7[0]) && near(u7.im(), kExampleU7[1]);
  passed = factor_ok && u1_ok && a_ok && u7_ok;
  return {{"passed", passed},
          {"tolerance", kExampleTolerance},
          {"checks",
           {{"factorization", factor_ok},
            {"u_1", {{"ok", u1_ok}, {"value", js::encode(u1)}, {"printed", {kExampleU1[0], kExampleU1[1]}}}},
            {"A_of_u", {{"ok", a_ok}, {"value", js::encode(a)}, {"printed", kExampleAofU}}},
            {"u_7", {{"ok", u7_ok}, {"value", js::encode(u7)}, {"printed", {kExampleU7[0], kExampleU7[1]}}}}}},
          {"orientation", zs.radicals.orientation},
          {"precision_bits", zs.precision_bits}};
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string() &&
             prefix.find("zeros") != std::string::npos) {
    out << prefix << " = " << j[0].get<std::string>() << " + (" << j[1].get<std::string>() << ")i\n";
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& report, const Request& req, std::ostream& out) {
  if (req.format == "text") {
    render_text(report, "", out);
  } else {
    out << report.dump(2) << "\n";
  }
}

json error_report(const std::string& command, const char* kind, const std::string& message) {
  return {{"command", command}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  if (const char* env = std::getenv("DEMOIVRE_PRECISION")) {
    try {
      req.precision_bits = std::stol(env);
    } catch (const std::exception&) {
      err << "ignoring malformed DEMOIVRE_PRECISION='" << env << "'\n";
    }
  }

  CLI::App app{"Odd-degree De Moivre polynomials: construction, zeros, irreducibility, Galois groups"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--n", req.n, "odd degree n >= 3");
  app.add_option("--d", req.d, "rational d (\"p/q\" or integer)");
  app.add_option("--R", req.R, "rational non-square R");
  app.add_option("--precision", req.precision_bits, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--max-den", req.max_den, "denominator bound for rational reconstruction");
  app.add_option("--trial-bound", req.trial_bound, "trial-division bound");
  app.add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--family", req.family, "instance family")->check(CLI::IsMember({"none", "filaseta", "bruen"}));
  app.add_option("--p", req.p, "family prime");
  app.add_option("--m", req.m, "filaseta parameter m >= 2");
  app.add_option("--s", req.s, "bruen parameter s (R = -p s^2)");
  app.add_option("--n-max", req.n_max, "largest index for the Chebyshev identity check");
  app.add_option("--max-n", req.max_n, "largest degree accepted by the factorization oracle");
  app.add_flag("--deterministic", req.deterministic, "omit the timestamp field");
  for (const char* name : {"construct", "identities", "zeros", "reconstruct", "irreducible", "galois",
                           "oracle", "example"}) {
    app.add_subcommand(name)->callback([&req, name] { req.command = name; });
  }
  app.get_subcommand("construct")->description("f_n, A and f'_{n-2} coefficients");
  app.get_subcommand("identities")->description("exact reduction and Chebyshev identity checks");
  app.get_subcommand("zeros")->description("all zeros via radicals and the closed form");
  app.get_subcommand("reconstruct")->description("zeros rebuilt from u, u_1, u_{n-1}");
  app.get_subcommand("irreducible")->description("irreducibility verdicts with certificates");
  app.get_subcommand("galois")->description("Galois group classification");
  app.get_subcommand("oracle")->description("exact factorization by zero grouping");
  app.get_subcommand("example")->description("regression against the printed n=9, d=26, R=675 values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << "\n";
    return kValidationError;
  }

  json report = {{"command", req.command}, {"status", "ok"}};
  try {
    const GaloisConfig config = config_of(req);
    if (req.command == "example") {
      bool passed = false;
      report["result"] = cmd_example(req.precision_bits, passed);
      if (!passed) report["status"] = "fail";
    } else {
      const DeMoivreInstance inst = build_instance(req);
      report["instance"] = js::encode(inst);
      if (req.command == "construct") {
        report["result"] = cmd_construct(inst);
      } else if (req.command == "identities") {
        report["result"] = cmd_identities(inst, req.n_max);
      } else if (req.command == "zeros") {
        report["result"] = js::encode(all_zeros(inst, req.precision_bits));
      } else if (req.command == "reconstruct") {
        report["result"] = cmd_reconstruct(inst, req.precision_bits);
      } else if (req.command == "irreducible") {
        report["result"] = cmd_irreducible(inst, config);
      } else if (req.command == "galois") {
        report["result"] = js::encode(classify_galois_group(inst, config));
      } else if (req.command == "oracle") {
        report["result"] = cmd_oracle(inst, req.precision_bits, req.max_n);
      }
    }
  } catch (const ValidationError& e) {
    emit(error_report(req.command, "validation", e.what()), req, out);
    err << "error: " << e.what() << "\n";
    return kValidationError;
  } catch (const PrecisionError& e) {
    emit(error_report(req.command, "precision", e.what()), req, out);
    err << "error: " << e.what() << "\n";
    return kPrecisionError;
  }
  report["precision_bits"] = req.precision_bits;
  if (!req.deterministic) report["timestamp"] = utc_timestamp();
  emit(report, req, out);
  return report["status"] == "fail" ? kValidationError : kOk;
}

}  // namespace demoivre::cli
