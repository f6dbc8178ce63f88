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

#include <gtest/gtest.h>

#include <random>

#include "demoivre/error.hpp"
#include "oracles.hpp"

namespace demoivre {
namespace {

namespace js = demoivre::json;

TEST(Json, ScalarFormats) {
  EXPECT_EQ(js::encode(parse_rational("-3/6")).get<std::string>(), "-1/2");
  EXPECT_EQ(js::encode(Rational(4)).get<std::string>(), "4");
  EXPECT_EQ(js::encode(QuadElem(7, 4, 3)).dump(), R"({"a":"7","b":"4","rprime":"3"})");
  EXPECT_EQ(js::encode(RatPoly{-4, -3, 0, 1}).dump(), R"(["-4","-3","0","1"])");
}

TEST(Json, RoundTrips) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 50; ++i) {
    const auto inst = testing::random_instance(rng, 15);
    const auto j = js::encode(inst);
    const auto back = js::decode_instance(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.n, inst.n);
    EXPECT_EQ(back.d, inst.d);
    EXPECT_EQ(back.R, inst.R);
    const RatPoly f = de_moivre_polynomial(inst);
    EXPECT_EQ(js::decode_poly(js::encode(f)), f);
    const QuadElem a = radicand_ratio(inst);
    EXPECT_EQ(js::decode_quad(js::encode(a)), a);
  }
  const ComplexVal z = ComplexVal::parse("1.25", "-3.5e-7", 192);
  const ComplexVal w = js::decode_complex(js::encode(z), 192);
  EXPECT_LT(distance(z, w), BigFloat::exp2(-185, 192));
}

TEST(Json, DecodersRejectMalformedInput) {
  using nlohmann::json;
  EXPECT_THROW(js::decode_rational(json(1.5)), ValidationError);
  EXPECT_THROW(js::decode_poly(json::object()), ValidationError);
  EXPECT_THROW(js::decode_complex(json::array({"1"}), 128), ValidationError);
  EXPECT_THROW(js::decode_instance(json{{"n", 9}, {"d", "26"}}), ValidationError);
  EXPECT_THROW(js::decode_instance(json{{"n", 9}, {"d", "26"}, {"R", "675"}, {"D", "2"}}), ValidationError);
}

TEST(Json, ReportsCarryCertificates) {
  const auto inst = make_instance(9, 26, 675);
  const auto j = js::encode(irreducible_by_pth_powers(inst));
  EXPECT_EQ(j["verdict"], "reducible");
  const QuadElem root = js::decode_quad(j["witnesses"][0]["test"]["root"]);
  EXPECT_EQ(pow(root, 3), js::decode_quad(j["alpha"]));
  const auto g = js::encode(classify_galois_group(filaseta_instance(5, 2)));
  EXPECT_EQ(g["tag"], "FullSemidirect");
  EXPECT_EQ(g["group_order"], 20);
  const auto zj = js::encode(all_zeros(inst));
  EXPECT_EQ(zj["zeros"].size(), 9u);
  EXPECT_EQ(zj["radicals"]["orientation"], -1);
}

}  // namespace
}  // namespace demoivre
