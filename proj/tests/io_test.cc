// Copyright 2026 The rankcodes Authors.
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


#include "rankcodes/io.h"

#include <gtest/gtest.h>

#include <random>

#include "rankcodes/error.h"
#include "test_util.h"

namespace rankcodes {
namespace {

using testing::alpha;

Json parse(const char* s) { return Json::parse(s); }

TEST(ElementIoTest, EveryEncodingRoundTrips) {
  for (const FieldTower& t : {FieldTower::make(2, 1, 2, 0, 3), FieldTower::make(3, 1, 2, 1, 4),
                              FieldTower::make(2, 2, 2, 1, 2)}) {
    for (uint64_t v = 0; v < t.order(); ++v) {
      const Element x{static_cast<uint32_t>(v)};
      EXPECT_EQ(parse_element(t, to_json(t, x)), x);
      EXPECT_EQ(parse_element(t, Json(t.format(x))), x) << t.format(x);
    }
  }
}

TEST(ElementIoTest, TextForms) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const Element a = alpha(t);
  EXPECT_EQ(parse_element_text(t, "a"), a);
  EXPECT_EQ(parse_element_text(t, "\xCE\xB1"), a);
  EXPECT_EQ(parse_element_text(t, "a^2"), t.mul(a, a));
  EXPECT_EQ(parse_element_text(t, "a^-1"), t.inv(a));
  EXPECT_EQ(parse_element_text(t, "a + 1"), t.mul(a, a));
  EXPECT_EQ(parse_element_text(t, "3"), t.one());
  EXPECT_EQ(parse_element_text(t, "g"), t.generator());
  EXPECT_EQ(parse_element(t, Json(1)), t.one());
  for (const char* bad : {"", "x", "a +", "b", "a^", "2 ** a"}) {
    EXPECT_THROW(parse_element_text(t, bad), Error) << bad;
  }
  EXPECT_THROW(parse_element(t, parse("[1, 2]")), Error);
  EXPECT_THROW(parse_element(t, parse("[1, 0, 0, 0, 0, 0, 0, 0, 0]")), Error);
  EXPECT_THROW(parse_element(t, parse("{}")), Error);
}

TEST(PolyIoTest, OrdinaryText) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const Element a = alpha(t);
  EXPECT_EQ(parse_cpoly_text(t, "x + \xCE\xB1"), CPoly({a, t.one()}));
  EXPECT_EQ(parse_cpoly_text(t, "x^2 + x + 1"), CPoly({t.one(), t.one(), t.one()}));
  EXPECT_EQ(parse_cpoly_text(t, "a^2*x^3 - a x"), CPoly({t.zero(), a, t.zero(), t.mul(a, a)}));
  EXPECT_EQ(parse_cpoly_text(t, "x + x"), CPoly());
  EXPECT_THROW(parse_cpoly_text(t, "x^[1]"), Error);
  EXPECT_THROW(parse_cpoly_text(t, "x x"), Error);
  EXPECT_EQ(parse_cpoly(t, parse("[\"a\", 1]")), CPoly({a, t.one()}));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const CPoly f = testing::random_cpoly(t, i % 5, 2, rng);
    EXPECT_EQ(parse_cpoly(t, to_json(t, f)), f);
    EXPECT_EQ(parse_cpoly_text(t, format_cpoly(t, f)), f) << format_cpoly(t, f);
  }
}

TEST(PolyIoTest, LinearizedText) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  const Element a = alpha(t);
  EXPECT_EQ(parse_lpoly_text(t, "x^[1] + a x", 1), LPoly(1, {a, t.one()}));
  EXPECT_EQ(parse_lpoly_text(t, "x^[2] - x", 1), x_rn_minus_x(t, 1, 2));
  EXPECT_THROW(parse_lpoly_text(t, "x^2", 1), Error);
  EXPECT_THROW(parse_lpoly_text(t, "x + 1", 1), Error);
  EXPECT_EQ(parse_lpoly(t, parse("{\"r\": 1, \"coeffs\": [\"a\", 1]}"), 0), LPoly(1, {a, t.one()}));
  EXPECT_THROW(parse_lpoly(t, parse("[1]"), 0), Error);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const LPoly f = testing::random_lpoly(t, 1, i % 3, rng);
    EXPECT_EQ(parse_lpoly(t, to_json(t, f), 1), f);
    EXPECT_EQ(parse_lpoly_text(t, format_lpoly(t, f), 1), f) << format_lpoly(t, f);
  }
}

TEST(CodeIoTest, AllGeneratorTypesAgree) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const LinearCode expected = code_from_gpoly(t, CPoly({t.one(), t.one()}), 3);
  const char* specs[] = {
      R"({"n": 3, "generator": {"type": "conv_poly", "data": "x + 1"}})",
      R"({"n": 3, "generator": {"type": "conv_poly", "data": [1, 1]}})",
      R"({"n": 3, "generator": {"type": "matrix", "data": [[1, 1, 0], [0, 1, 1], [1, 0, 1]]}})",
      R"({"n": 3, "generator": {"type": "root_exponents", "data": {"n": 3, "exponents": [0]}}})",
      R"({"n": 3, "generator": {"type": "root_exponents", "data": [0]}})",
  };
  for (const char* s : specs) EXPECT_EQ(build_code(t, parse_code_spec(parse(s))), expected) << s;
  EXPECT_EQ(build_code(t, parse_code_spec(to_json(t, expected))), expected);
}

TEST(CodeIoTest, LinearizedAndIdealGenerators) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  const LPoly g(1, {alpha(t), t.one()});
  const LinearCode c = build_code(
      t, parse_code_spec(parse(R"({"n": 2, "generator": {"type": "lin_poly", "data": "x^[1] + a x"}})")));
  EXPECT_EQ(c, code_from_glpoly(t, g, 2));
  // x + a does not divide x^2 - 1 over GF(4); the ideal it generates is everything.
  const LinearCode ideal = build_code(
      t, parse_code_spec(parse(R"({"n": 2, "generator": {"type": "conv_poly", "data": "x + a"}})")));
  EXPECT_EQ(ideal, LinearCode::full(t, 2));
}

TEST(CodeIoTest, RejectsBadSpecs) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const char* bad_specs[] = {
      R"({"n": 3})",
      R"({"n": 0, "generator": {"type": "matrix", "data": []}})",
      R"({"n": 3, "generator": {"type": "bogus", "data": []}})",
      R"({"n": 3, "generator": {"type": "matrix", "data": []}, "extra": 1})",
  };
  for (const char* s : bad_specs) EXPECT_THROW(parse_code_spec(parse(s)), Error) << s;
  EXPECT_THROW(build_code(t, parse_code_spec(parse(
                                 R"({"n": 3, "generator": {"type": "matrix", "data": [[1, 1]]}})"))),
               Error);
  // g lies outside GF(4) when the ambient field is larger.
  const FieldTower big = FieldTower::make(2, 1, 2, 0, 5);
  ASSERT_GT(big.N(), 2u);
  EXPECT_THROW(build_code(big, parse_code_spec(parse(
                                   R"({"n": 5, "generator": {"type": "conv_poly", "data": "x + g"}})"))),
               Error);
}

TEST(JobIoTest, FieldAndDefaults) {
  const JobSpec job = parse_job(parse(R"({"field": {"q": 9, "m": 2},
      "code": {"n": 4, "generator": {"type": "conv_poly", "data": "x - 1"}},
      "analyses": ["lengths", "shorten"], "caps": {"enum": 100}})"));
  EXPECT_EQ(job.field.p, 3u);
  EXPECT_EQ(job.field.e, 2u);
  EXPECT_EQ(job.field.n, 4u);
  EXPECT_EQ(job.enum_cap, 100u);
  EXPECT_EQ(job.analyses.size(), 2u);
  const JobSpec lin = parse_job(parse(R"({"field": {"p": 2, "m": 2},
      "code": {"n": 2, "generator": {"type": "lin_poly", "data": {"r": 1, "coeffs": [1, 1]}}}})"));
  EXPECT_EQ(lin.field.r, 1u);
  const char* bad_jobs[] = {
      R"({"field": {"q": 6, "m": 2}, "code": {"n": 3, "generator": {"type": "matrix", "data": []}}})",
      R"({"field": {"q": 4, "p": 2, "m": 2}, "code": {"n": 3, "generator": {"type": "matrix", "data": []}}})",
      R"({"field": {"q": 4, "m": 2, "n": 4}, "code": {"n": 3, "generator": {"type": "matrix", "data": []}}})",
      R"({"field": {"q": 4, "m": 2}, "code": {"n": 3, "generator": {"type": "lin_poly", "data": "x"}}})",
      R"({"field": {"q": 4, "m": 2}, "code": {"n": 3, "generator": {"type": "matrix", "data": []}},
          "analyses": ["everything"]})",
  };
  for (const char* s : bad_jobs) EXPECT_THROW(parse_job(parse(s)), Error) << s;
}

TEST(JobIoTest, FieldSerializationRebuildsTheTower) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  const FieldSpec f = parse_field(to_json(t));
  const FieldTower u = build_tower(f, uint64_t{1} << 24);
  EXPECT_EQ(u.modulus(), t.modulus());
  EXPECT_EQ(u.N(), t.N());
}

TEST(ReportIoTest, LengthReportSchema) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const LinearCode c = code_from_gpoly(t, CPoly({alpha(t), t.one()}), 3);
  const Json j = to_json(t, analyze(t, c));
  for (const char* key : {"n", "k", "l_R", "l_P", "shift_lengths", "skew_bounds", "degenerate", "criteria"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["l_R"], 3);
  EXPECT_EQ(j["degenerate"], false);
  EXPECT_EQ(j["shift_lengths"][0]["a"], "1");
  EXPECT_EQ(j["skew_bounds"]["lower"], 3);
  EXPECT_EQ(j.dump(), to_json(t, analyze(t, c)).dump());
}

TEST(ReportIoTest, ShorteningAndEquivalence) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const LinearCode rep = code_from_gpoly(t, CPoly({t.one(), t.one(), t.one()}), 3);
  const Json s = to_json(t, shorten_pseudo_cyclic(t, rep));
  EXPECT_EQ(s["code"]["n"], 1);
  EXPECT_EQ(s["distribution"], parse(R"([{"weight": 0, "count": 1}, {"weight": 1, "count": 3}])"));
  EXPECT_EQ(build_code(t, parse_code_spec(s["code"])).k(), 1u);
  const std::optional<RankEquivalence> eq = shift_equivalence(t, rep, t.one(), 0);
  ASSERT_TRUE(eq);
  const Json e = to_json(t, *eq);
  EXPECT_EQ(parse_element(t, e["beta"]), eq->beta);
  EXPECT_EQ(e["A"].size(), 3u);
  EXPECT_EQ(e["A"][0].size(), 1u);
}

TEST(ReportIoTest, TextRendering) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  EXPECT_EQ(format_cpoly(t, CPoly({alpha(t), t.one()})), "x + a");
  EXPECT_EQ(format_cpoly(t, CPoly()), "0");
  EXPECT_EQ(format_lpoly(t, LPoly(1, {alpha(t), t.zero(), t.one()})), "x^[2] + a*x");
  const LinearCode rep = code_from_gpoly(t, CPoly({t.one(), t.one(), t.one()}), 3);
  const std::string text = render_text(t, analyze(t, rep));
  EXPECT_NE(text.find("rank length l_R = 1"), std::string::npos);
  EXPECT_NE(text.find("degenerate: yes"), std::string::npos);
}

}  // namespace
}  // namespace rankcodes
