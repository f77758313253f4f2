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


// JSON and text front end: job specifications, element and polynomial
// encodings, and serializers for every report type.
//
// Elements serialize as GF(p) coefficient lists of the ambient residue,
// constant term first. On input an element may also be an integer (an
// element of GF(p)) or a string: "a" or "α" for the primitive element of
// GF(q^m), "g" for the ambient generator, optionally raised to "^k".
//
// Polynomials are coefficient lists, constant term first, or text such as
// "x^2 + a*x + 1". Linearized text uses "x^[i]" for x^{q^{ri}}; a bare "x"
// is x^[0].
#ifndef RANKCODES_IO_H_
#define RANKCODES_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rankcodes/code.h"
#include "rankcodes/cpoly.h"
#include "rankcodes/gf.h"
#include "rankcodes/lengths.h"
#include "rankcodes/lpoly.h"
#include "rankcodes/sweep.h"

namespace rankcodes {

using Json = nlohmann::ordered_json;

struct FieldSpec {
  uint32_t p = 2;
  uint32_t e = 1;
  uint32_t m = 1;
  uint32_t r = 0;
  uint32_t n = 0;
  std::optional<std::vector<uint32_t>> modulus;
};

struct CodeSpec {
  size_t n = 0;
  // conv_poly | lin_poly | matrix | root_exponents
  std::string type;
  Json data;
};

struct JobSpec {
  FieldSpec field;
  CodeSpec code;
  std::vector<std::string> analyses;
  uint64_t ambient_cap = uint64_t{1} << 24;
  uint64_t enum_cap = uint64_t{1} << 16;
  bool exhaustive_skew = false;
};

// All parse failures raise ParseError.
FieldSpec parse_field(const Json& j);
CodeSpec parse_code_spec(const Json& j);
// {"field": ..., "code": ..., "analyses": [...], "caps": {"ambient", "enum"},
//  "skew_search": {"exhaustive": bool}}. Missing field n and r are taken
// from the code.
JobSpec parse_job(const Json& j);

FieldTower build_tower(const FieldSpec& f, uint64_t ambient_cap);
LinearCode build_code(const FieldTower& t, const CodeSpec& c);

Element parse_element(const FieldTower& t, const Json& j);
Element parse_element_text(const FieldTower& t, const std::string& s);
CPoly parse_cpoly(const FieldTower& t, const Json& j);
CPoly parse_cpoly_text(const FieldTower& t, const std::string& s);
// Accepts {"r", "coeffs"}, a coefficient list or text; r is used when the
// JSON does not carry one.
LPoly parse_lpoly(const FieldTower& t, const Json& j, uint32_t r);
LPoly parse_lpoly_text(const FieldTower& t, const std::string& s, uint32_t r);
RootSet parse_root_set(const Json& j, size_t n);

Json to_json(const FieldTower& t);
Json to_json(const FieldTower& t, Element x);
Json to_json(const FieldTower& t, const CPoly& f);
Json to_json(const FieldTower& t, const LPoly& f);
Json to_json(const RootSet& s);
// Code JSON of type "matrix" holding the reduced generator matrix.
Json to_json(const FieldTower& t, const LinearCode& c);
Json to_json(const std::map<size_t, uint64_t>& distribution);
Json to_json(const FieldTower& t, const LengthReport& r);
Json to_json(const DegeneracyReport& d);
Json to_json(const FieldTower& t, const RankEquivalence& eq);
Json to_json(const FieldTower& t, const ShortenedCode& s);
Json to_json(const SingletonAudit& a);
Json to_json(const SweepSummary& s);

// Human-readable forms.
std::string format_cpoly(const FieldTower& t, const CPoly& f);
std::string format_lpoly(const FieldTower& t, const LPoly& f);
std::string render_text(const FieldTower& t, const LengthReport& r);
std::string render_text(const FieldTower& t, const ShortenedCode& s);
std::string render_text(const SweepSummary& s);

}  // namespace rankcodes

#endif  // RANKCODES_IO_H_
