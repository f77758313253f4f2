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

#include <cctype>
#include <set>
#include <sstream>

#include "rankcodes/error.h"

namespace rankcodes {
namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::kParseError, msg); }

uint64_t get_uint(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0) parse_error(what + " must be a nonnegative integer");
  return j.get<uint64_t>();
}

uint32_t get_u32(const Json& j, const std::string& what) {
  const uint64_t v = get_uint(j, what);
  if (v > UINT32_MAX) parse_error(what + " is too large");
  return static_cast<uint32_t>(v);
}

void check_keys(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) parse_error(what + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) parse_error("unknown key '" + key + "' in " + what);
  }
}

// Tokens of the polynomial grammar: signed sums of terms, each a product of
// integers, powers of a, alpha or g, and at most one power of x.
class TextParser {
 public:
  struct Term {
    Element coeff;
    std::optional<uint64_t> power;
    bool bracket = false;
  };

  TextParser(const FieldTower& t, const std::string& s) : t_(t), s_(s) {}

  std::vector<Term> parse() {
    std::vector<Term> out;
    skip();
    if (at_end()) fail("empty expression");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Term term = parse_term();
      if (negate) term.coeff = t_.neg(term.coeff);
      out.push_back(term);
      skip();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  static constexpr const char* kAlpha = "\xCE\xB1";  // α

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_alpha() const { return s_.compare(pos_, 2, kAlpha) == 0; }
  bool starts_factor() const {
    if (at_end()) return false;
    const char ch = peek();
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'a' || ch == 'g' || ch == 'x' ||
           at_alpha();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    parse_error(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  uint64_t parse_uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (uint64_t{1} << 40)) fail("number too large");
      v = v * 10 + static_cast<uint64_t>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  Term parse_term() {
    Term term{t_.one(), std::nullopt, false};
    bool any = false;
    for (;;) {
      skip();
      if (!at_end() && peek() == '*') {
        if (!any) fail("'*' without a left factor");
        ++pos_;
        skip();
        if (!starts_factor()) fail("expected a factor after '*'");
      }
      if (!starts_factor()) break;
      parse_factor(term);
      any = true;
    }
    if (!any) fail("expected a term");
    return term;
  }

  void parse_factor(Term& term) {
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const uint64_t v = parse_uint();
      term.coeff = t_.mul(term.coeff, t_.from_int(static_cast<int64_t>(v % t_.p())));
      return;
    }
    if (ch == 'x') {
      ++pos_;
      if (term.power) fail("two powers of x in one term");
      term.power = 1;
      skip();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip();
        if (!at_end() && peek() == '[') {
          ++pos_;
          skip();
          term.power = parse_uint();
          skip();
          if (at_end() || peek() != ']') fail("expected ']'");
          ++pos_;
          term.bracket = true;
        } else {
          term.power = parse_uint();
        }
      }
      return;
    }
    Element base;
    if (at_alpha()) {
      pos_ += 2;
      base = t_.subfield_primitive(t_.m());
    } else {
      base = ch == 'a' ? t_.subfield_primitive(t_.m()) : t_.generator();
      ++pos_;
    }
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (!at_end() && peek() == '-') {
        negative = true;
        ++pos_;
      }
      const uint64_t k = parse_uint();
      base = t_.pow(negative ? t_.inv(base) : base, k);
    }
    term.coeff = t_.mul(term.coeff, base);
  }

  const FieldTower& t_;
  const std::string& s_;
  size_t pos_ = 0;
};

constexpr uint64_t kMaxTextDegree = uint64_t{1} << 16;

void require_in_code_field(const FieldTower& t, Element x) {
  if (!t.in_subfield(x, t.m())) parse_error("element " + t.format(x) + " is not in GF(q^m)");
}

Json vector_json(const FieldTower& t, std::span<const Element> v) {
  Json out = Json::array();
  for (Element x : v) out.push_back(to_json(t, x));
  return out;
}

Json optional_json(const std::optional<uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string format_term(const FieldTower& t, Element c, const std::string& mono) {
  if (mono.empty()) return t.format(c);
  if (c == t.one()) return mono;
  return t.format(c) + "*" + mono;
}

}  // namespace

FieldSpec parse_field(const Json& j) {
  check_keys(j, {"p", "e", "q", "m", "r", "n", "modulus"}, "field");
  FieldSpec f;
  if (j.contains("q")) {
    if (j.contains("p") || j.contains("e")) parse_error("field gives both q and p/e");
    const uint32_t q = get_u32(j["q"], "q");
    if (q < 2) parse_error("q must be a prime power");
    uint32_t p = 2;
    while (q % p != 0) ++p;
    uint32_t e = 0;
    for (uint32_t v = q; v > 1; v /= p) {
      if (v % p != 0) parse_error(std::to_string(q) + " is not a prime power");
      ++e;
    }
    f.p = p;
    f.e = e;
  } else {
    if (!j.contains("p")) parse_error("field needs p or q");
    f.p = get_u32(j["p"], "p");
    if (j.contains("e")) f.e = get_u32(j["e"], "e");
  }
  if (!j.contains("m")) parse_error("field needs m");
  f.m = get_u32(j["m"], "m");
  if (j.contains("r")) f.r = get_u32(j["r"], "r");
  if (j.contains("n")) f.n = get_u32(j["n"], "n");
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array()) parse_error("modulus must be a coefficient list");
    std::vector<uint32_t> mod;
    for (const Json& c : j["modulus"]) mod.push_back(get_u32(c, "modulus coefficient"));
    f.modulus = mod;
  }
  if (f.e == 0 || f.m == 0) parse_error("e and m must be positive");
  return f;
}

CodeSpec parse_code_spec(const Json& j) {
  check_keys(j, {"n", "generator"}, "code");
  if (!j.contains("n") || !j.contains("generator")) parse_error("code needs n and generator");
  CodeSpec c;
  c.n = get_uint(j["n"], "n");
  if (c.n == 0) parse_error("code length must be positive");
  const Json& g = j["generator"];
  check_keys(g, {"type", "data"}, "generator");
  if (!g.contains("type") || !g["type"].is_string() || !g.contains("data")) {
    parse_error("generator needs a string type and data");
  }
  c.type = g["type"].get<std::string>();
  static const std::set<std::string> kTypes = {"conv_poly", "lin_poly", "matrix", "root_exponents"};
  if (!kTypes.contains(c.type)) parse_error("unknown generator type '" + c.type + "'");
  c.data = g["data"];
  return c;
}

JobSpec parse_job(const Json& j) {
  check_keys(j, {"field", "code", "analyses", "caps", "skew_search"}, "job");
  if (!j.contains("field") || !j.contains("code")) parse_error("job needs field and code");
  JobSpec job;
  job.field = parse_field(j["field"]);
  job.code = parse_code_spec(j["code"]);
  if (job.field.n == 0) job.field.n = static_cast<uint32_t>(job.code.n);
  if (job.field.n != job.code.n) parse_error("field n differs from code n");
  if (job.code.type == "lin_poly" && job.field.r == 0) {
    if (job.code.data.is_object() && job.code.data.contains("r")) {
      job.field.r = get_u32(job.code.data["r"], "r");
    }
    if (job.field.r == 0) parse_error("lin_poly codes need r");
  }
  if (j.contains("analyses")) {
    static const std::set<std::string> kAnalyses = {"lengths", "degeneracy", "shorten",
                                                    "equivalence", "singleton"};
    if (!j["analyses"].is_array()) parse_error("analyses must be a list");
    for (const Json& a : j["analyses"]) {
      if (!a.is_string() || !kAnalyses.contains(a.get<std::string>())) {
        parse_error("unknown analysis " + a.dump());
      }
      job.analyses.push_back(a.get<std::string>());
    }
  }
  if (j.contains("caps")) {
    check_keys(j["caps"], {"ambient", "enum"}, "caps");
    if (j["caps"].contains("ambient")) job.ambient_cap = get_uint(j["caps"]["ambient"], "ambient cap");
    if (j["caps"].contains("enum")) job.enum_cap = get_uint(j["caps"]["enum"], "enum cap");
  }
  if (j.contains("skew_search")) {
    check_keys(j["skew_search"], {"exhaustive"}, "skew_search");
    const Json& e = j["skew_search"].value("exhaustive", Json(false));
    if (!e.is_boolean()) parse_error("skew_search.exhaustive must be a boolean");
    job.exhaustive_skew = e.get<bool>();
  }
  return job;
}

FieldTower build_tower(const FieldSpec& f, uint64_t ambient_cap) {
  TowerOptions options;
  options.ambient_cap = ambient_cap;
  options.modulus = f.modulus;
  return FieldTower::make(f.p, f.e, f.m, f.r, f.n, options);
}

LinearCode build_code(const FieldTower& t, const CodeSpec& c) {
  const size_t n = c.n;
  if (c.type == "conv_poly") {
    const CPoly g = parse_cpoly(t, c.data);
    for (Element x : g.coeffs()) require_in_code_field(t, x);
    if (g.is_zero()) return LinearCode::zero(n);
    const CPoly xn = xn_minus_1(t, n);
    return divides(t, g, xn) ? code_from_gpoly(t, monic(t, g), n) : code_from_ideal_element(t, g, n);
  }
  if (c.type == "lin_poly") {
    const LPoly g = parse_lpoly(t, c.data, t.r());
    for (Element x : g.coeffs()) require_in_code_field(t, x);
    return code_from_glpoly(t, g, n);
  }
  if (c.type == "matrix") {
    if (!c.data.is_array()) parse_error("matrix data must be a list of rows");
    Matrix rows(0, n);
    for (const Json& row : c.data) {
      if (!row.is_array() || row.size() != n) {
        parse_error("every matrix row must have " + std::to_string(n) + " entries");
      }
      Vec v;
      for (const Json& x : row) {
        v.push_back(parse_element(t, x));
        require_in_code_field(t, v.back());
      }
      rows.append_row(v);
    }
    return rows.rows() == 0 ? LinearCode::zero(n) : LinearCode::span(t, rows);
  }
  if (c.type == "root_exponents") return code_from_root_exponents(t, parse_root_set(c.data, n));
  parse_error("unknown generator type '" + c.type + "'");
}

Element parse_element_text(const FieldTower& t, const std::string& s) {
  Element out = t.zero();
  for (const TextParser::Term& term : TextParser(t, s).parse()) {
    if (term.power) parse_error("x in an element '" + s + "'");
    out = t.add(out, term.coeff);
  }
  return out;
}

Element parse_element(const FieldTower& t, const Json& j) {
  if (j.is_number_integer()) return t.from_int(j.get<int64_t>());
  if (j.is_string()) return parse_element_text(t, j.get<std::string>());
  if (j.is_array()) {
    std::vector<uint32_t> coeffs;
    for (const Json& c : j) coeffs.push_back(get_u32(c, "element coefficient"));
    return t.from_coeffs(coeffs);
  }
  parse_error("bad element encoding " + j.dump());
}

CPoly parse_cpoly_text(const FieldTower& t, const std::string& s) {
  std::vector<Element> coeffs;
  for (const TextParser::Term& term : TextParser(t, s).parse()) {
    if (term.bracket) parse_error("x^[i] in an ordinary polynomial '" + s + "'");
    const uint64_t d = term.power.value_or(0);
    if (d > kMaxTextDegree) parse_error("degree too large in '" + s + "'");
    if (coeffs.size() <= d) coeffs.resize(d + 1, t.zero());
    coeffs[d] = t.add(coeffs[d], term.coeff);
  }
  return CPoly(coeffs);
}

CPoly parse_cpoly(const FieldTower& t, const Json& j) {
  if (j.is_string()) return parse_cpoly_text(t, j.get<std::string>());
  if (!j.is_array()) parse_error("polynomial must be a coefficient list or text");
  std::vector<Element> coeffs;
  for (const Json& c : j) coeffs.push_back(parse_element(t, c));
  return CPoly(coeffs);
}

LPoly parse_lpoly_text(const FieldTower& t, const std::string& s, uint32_t r) {
  std::vector<Element> coeffs;
  for (const TextParser::Term& term : TextParser(t, s).parse()) {
    if (!term.power) parse_error("constant term in a linearized polynomial '" + s + "'");
    if (!term.bracket && *term.power != 1) {
      parse_error("linearized terms are x or x^[i], got x^" + std::to_string(*term.power));
    }
    const uint64_t i = term.bracket ? *term.power : 0;
    if (i > kMaxTextDegree) parse_error("q-degree too large in '" + s + "'");
    if (coeffs.size() <= i) coeffs.resize(i + 1, t.zero());
    coeffs[i] = t.add(coeffs[i], term.coeff);
  }
  return LPoly(r, coeffs);
}

LPoly parse_lpoly(const FieldTower& t, const Json& j, uint32_t r) {
  if (j.is_object()) {
    check_keys(j, {"r", "coeffs"}, "linearized polynomial");
    if (!j.contains("coeffs")) parse_error("linearized polynomial needs coeffs");
    const uint32_t rr = j.contains("r") ? get_u32(j["r"], "r") : r;
    if (rr == 0) parse_error("linearized polynomial needs r > 0");
    return parse_lpoly(t, j["coeffs"], rr);
  }
  if (r == 0) parse_error("linearized polynomial needs r > 0");
  if (j.is_string()) return parse_lpoly_text(t, j.get<std::string>(), r);
  if (!j.is_array()) parse_error("linearized polynomial must be an object, list or text");
  std::vector<Element> coeffs;
  for (const Json& c : j) coeffs.push_back(parse_element(t, c));
  return LPoly(r, coeffs);
}

RootSet parse_root_set(const Json& j, size_t n) {
  RootSet s;
  s.n = n;
  const Json* exps = &j;
  if (j.is_object()) {
    check_keys(j, {"n", "exponents"}, "root set");
    if (j.contains("n") && get_uint(j["n"], "n") != n) parse_error("root set n differs from code n");
    if (!j.contains("exponents")) parse_error("root set needs exponents");
    exps = &j["exponents"];
  }
  if (!exps->is_array()) parse_error("root exponents must be a list");
  for (const Json& e : *exps) s.exponents.push_back(get_uint(e, "root exponent"));
  return s;
}

Json to_json(const FieldTower& t) {
  Json j;
  j["p"] = t.p();
  j["e"] = t.e();
  j["m"] = t.m();
  j["r"] = t.r();
  j["n"] = t.n();
  j["modulus"] = t.modulus();
  return j;
}

Json to_json(const FieldTower& t, Element x) { return Json(t.coeffs(x)); }

Json to_json(const FieldTower& t, const CPoly& f) { return vector_json(t, f.coeffs()); }

Json to_json(const FieldTower& t, const LPoly& f) {
  Json j;
  j["r"] = f.r();
  j["coeffs"] = vector_json(t, f.coeffs());
  return j;
}

Json to_json(const RootSet& s) {
  Json j;
  j["n"] = s.n;
  j["exponents"] = s.exponents;
  return j;
}

Json to_json(const FieldTower& t, const LinearCode& c) {
  Json rows = Json::array();
  for (size_t i = 0; i < c.k(); ++i) rows.push_back(vector_json(t, c.generator().row(i)));
  Json j;
  j["n"] = c.n();
  j["generator"] = {{"type", "matrix"}, {"data", rows}};
  return j;
}

Json to_json(const std::map<size_t, uint64_t>& distribution) {
  Json out = Json::array();
  for (const auto& [w, count] : distribution) out.push_back({{"weight", w}, {"count", count}});
  return out;
}

Json to_json(const FieldTower& t, const LengthReport& r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["l_R"] = r.l_R;
  j["l_P"] = r.l_P;
  j["shift_lengths"] = Json::array();
  for (const ShiftLength& s : r.shift_lengths) {
    j["shift_lengths"].push_back({{"a", t.format(s.a)}, {"r", s.r}, {"value", optional_json(s.value)}});
  }
  Json skew;
  skew["order"] = r.skew.order;
  skew["lower"] = r.skew.lower;
  skew["upper"] = r.skew.upper;
  skew["attained"] = r.skew.attained ? Json(*r.skew.attained) : Json(nullptr);
  if (r.skew.exact) skew["exact"] = *r.skew.exact;
  if (r.skew.witness) skew["witness"] = to_json(t, *r.skew.witness);
  j["skew_bounds"] = skew;
  j["degenerate"] = r.degenerate;
  j["criteria"] = Json::array();
  for (const Criterion& c : r.criteria) j["criteria"].push_back({{"id", c.id}, {"value", c.value}});
  j["skipped"] = r.skipped;
  j["rank_paths"] = Json::array();
  for (const PathValue& p : r.rank_paths) {
    j["rank_paths"].push_back({{"path", p.path}, {"value", p.value}});
  }
  return j;
}

Json to_json(const DegeneracyReport& d) {
  Json j;
  j["degenerate"] = d.degenerate;
  j["criteria"] = Json::array();
  for (const Criterion& c : d.criteria) j["criteria"].push_back({{"id", c.id}, {"value", c.value}});
  j["skipped"] = d.skipped;
  return j;
}

Json to_json(const FieldTower& t, const RankEquivalence& eq) {
  Json j;
  j["a"] = to_json(t, eq.a);
  j["r"] = eq.r;
  j["b"] = to_json(t, eq.b);
  j["beta"] = to_json(t, eq.beta);
  Json a = Json::array();
  for (size_t i = 0; i < eq.A.rows(); ++i) a.push_back(vector_json(t, eq.A.row(i)));
  j["A"] = a;
  j["domain"] = to_json(t, eq.domain);
  j["codomain"] = to_json(t, eq.codomain);
  return j;
}

Json to_json(const FieldTower& t, const ShortenedCode& s) {
  Json j;
  j["code"] = to_json(t, s.code);
  if (s.modulus) j["modulus"] = to_json(t, *s.modulus);
  if (s.lmodulus) j["modulus"] = to_json(t, *s.lmodulus);
  if (s.multiplier) j["multiplier"] = to_json(t, *s.multiplier);
  if (s.lmultiplier) j["multiplier"] = to_json(t, *s.lmultiplier);
  j["map"] = s.description;
  j["original_distribution"] = to_json(s.original_distribution);
  j["distribution"] = to_json(s.distribution);
  j["cyclic"] = s.cyclic;
  return j;
}

Json to_json(const SingletonAudit& a) {
  Json j;
  j["d_R"] = a.d_R ? Json(*a.d_R) : Json(nullptr);
  j["checks"] = Json::array();
  for (const SingletonCheck& c : a.checks) {
    j["checks"].push_back({{"length", c.length}, {"value", c.value}, {"holds", c.holds}});
  }
  j["holds"] = a.holds;
  return j;
}

Json to_json(const SweepSummary& s) {
  Json j;
  j["ok"] = s.ok();
  j["cyclic_codes"] = s.cyclic_codes;
  j["skew_codes"] = s.skew_codes;
  Json inv = Json::object();
  for (const auto& [name, tally] : s.tallies) {
    inv[name] = {{"pass", tally.pass}, {"fail", tally.fail}, {"skipped", tally.skipped}};
  }
  j["invariants"] = inv;
  j["skipped_criteria"] = Json::object();
  for (const auto& [id, count] : s.skipped_criteria) j["skipped_criteria"][id] = count;
  j["failures"] = s.failures;
  return j;
}

std::string format_cpoly(const FieldTower& t, const CPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    const Element c = f.coeffs()[i];
    if (c == t.zero()) continue;
    const std::string mono = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
    out += (out.empty() ? "" : " + ") + format_term(t, c, mono);
  }
  return out;
}

std::string format_lpoly(const FieldTower& t, const LPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (size_t i = f.coeffs().size(); i-- > 0;) {
    const Element c = f.coeffs()[i];
    if (c == t.zero()) continue;
    const std::string mono = i == 0 ? "x" : "x^[" + std::to_string(i) + "]";
    out += (out.empty() ? "" : " + ") + format_term(t, c, mono);
  }
  return out;
}

std::string render_text(const FieldTower& t, const LengthReport& r) {
  std::ostringstream os;
  os << "code: n = " << r.n << ", k = " << r.k << "\n";
  os << "rank length l_R = " << r.l_R << " (";
  for (size_t i = 0; i < r.rank_paths.size(); ++i) {
    os << (i ? ", " : "") << r.rank_paths[i].path << " = " << r.rank_paths[i].value;
  }
  os << ")\n";
  os << "period length l_P = " << r.l_P << "\n";
  os << "shift lengths:\n";
  for (const ShiftLength& s : r.shift_lengths) {
    os << "  a = " << t.format(s.a) << ", r = " << s.r << ": "
       << (s.value ? std::to_string(*s.value) : "inf") << "\n";
  }
  os << "skew length (order " << r.skew.order << "): " << r.skew.lower << " <= l_Sk <= "
     << r.skew.upper;
  if (r.skew.attained) os << (*r.skew.attained ? ", lower bound attained" : ", not attained");
  if (r.skew.exact) os << ", exact " << *r.skew.exact;
  os << "\n";
  os << "degenerate: " << (r.degenerate ? "yes" : "no") << " (" << r.criteria.size()
     << " criteria agree";
  if (!r.skipped.empty()) os << ", " << r.skipped.size() << " skipped";
  os << ")\n";
  return os.str();
}

std::string render_text(const FieldTower& t, const ShortenedCode& s) {
  std::ostringstream os;
  os << "shortened code: n = " << s.code.n() << ", k = " << s.code.k()
     << (s.cyclic ? ", cyclic" : "") << "\n";
  os << "map: " << s.description << "\n";
  if (s.modulus) os << "modulus: " << format_cpoly(t, *s.modulus) << "\n";
  if (s.lmodulus) os << "modulus: " << format_lpoly(t, *s.lmodulus) << "\n";
  if (s.multiplier) os << "multiplier: " << format_cpoly(t, *s.multiplier) << "\n";
  if (s.lmultiplier) os << "multiplier: " << format_lpoly(t, *s.lmultiplier) << "\n";
  os << "rank weight distribution:";
  for (const auto& [w, count] : s.distribution) os << " " << w << ":" << count;
  os << " (unchanged)\n";
  return os.str();
}

std::string render_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "checked " << s.cyclic_codes << " cyclic and " << s.skew_codes << " skew cyclic codes\n";
  for (const auto& [name, tally] : s.tallies) {
    os << "  " << name << ": pass " << tally.pass << ", fail " << tally.fail << ", skipped "
       << tally.skipped << "\n";
  }
  if (!s.skipped_criteria.empty()) {
    os << "degeneracy criteria skipped by their gate:";
    for (const auto& [id, count] : s.skipped_criteria) os << " " << id << " (" << count << ")";
    os << "\n";
  }
  for (const std::string& f : s.failures) os << "FAIL " << f << "\n";
  os << (s.ok() ? "all invariants hold" : "invariant failures") << "\n";
  return os.str();
}

}  // namespace rankcodes
