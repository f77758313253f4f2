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


#include "rankcodes/sweep.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "rankcodes/code.h"
#include "rankcodes/cpoly.h"
#include "rankcodes/error.h"
#include "rankcodes/gf.h"
#include "rankcodes/lengths.h"
#include "rankcodes/linalg.h"
#include "rankcodes/lpoly.h"

namespace rankcodes {
namespace {

constexpr size_t kMaxFailures = 50;

enum class Outcome { kPass, kFail, kSkip };

// q = p^e.
std::pair<uint32_t, uint32_t> split_prime_power(uint32_t q) {
  if (q < 2) throw Error(ErrorKind::kParseError, "q must be a prime power");
  uint32_t p = 2;
  while (q % p != 0) ++p;
  uint32_t e = 0;
  for (uint32_t v = q; v > 1; v /= p) {
    if (v % p != 0) throw Error(ErrorKind::kParseError, std::to_string(q) + " is not a prime power");
    ++e;
  }
  return {p, e};
}

uint32_t parse_u32(const std::string& s, const std::string& item) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 9) {
    throw Error(ErrorKind::kParseError, "bad number '" + s + "' in '" + item + "'");
  }
  return static_cast<uint32_t>(std::stoul(s));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t pos; (pos = s.find(sep, start)) != std::string::npos; start = pos + 1) {
    out.push_back(s.substr(start, pos - start));
  }
  out.push_back(s.substr(start));
  return out;
}

// "a-b" or "a".
std::pair<uint32_t, uint32_t> parse_range(const std::string& s, const std::string& item) {
  const size_t dash = s.find('-');
  if (dash == std::string::npos) {
    const uint32_t v = parse_u32(s, item);
    return {v, v};
  }
  const uint32_t lo = parse_u32(s.substr(0, dash), item), hi = parse_u32(s.substr(dash + 1), item);
  if (lo > hi) throw Error(ErrorKind::kParseError, "empty range in '" + item + "'");
  return {lo, hi};
}

std::string join(const FieldTower& t, const std::vector<Element>& coeffs) {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + t.format(coeffs[i]);
  return s + "]";
}

Vec times(const FieldTower& t, std::span<const Element> v, const Matrix& a) {
  Matrix row(0, v.size());
  row.append_row(v);
  const Matrix out = multiply(t, row, a);
  return Vec(out.row(0).begin(), out.row(0).end());
}

Codeword scaled(const FieldTower& t, Codeword v, Element c) {
  for (Element& x : v) x = t.mul(x, c);
  return v;
}

class Runner {
 public:
  Runner(const SweepOptions& options, SweepSummary& summary)
      : options_(options), summary_(summary) {}

  // Records the outcome of body under inv. Cap errors count as skips; any
  // other library error is a failure.
  void check(Invariant inv, const std::string& label,
             const std::function<Outcome(std::string&)>& body) {
    if (!options_.only.empty() && !options_.only.contains(inv)) return;
    Tally& tally = summary_.tallies[InvariantName(inv)];
    std::string why;
    Outcome outcome;
    try {
      outcome = body(why);
    } catch (const Error& e) {
      outcome = IsCapExceeded(e.kind()) ? Outcome::kSkip : Outcome::kFail;
      why = e.what();
    } catch (const std::exception& e) {
      outcome = Outcome::kFail;
      why = e.what();
    }
    switch (outcome) {
      case Outcome::kPass:
        ++tally.pass;
        break;
      case Outcome::kSkip:
        ++tally.skipped;
        break;
      case Outcome::kFail:
        ++tally.fail;
        if (summary_.failures.size() < kMaxFailures) {
          summary_.failures.push_back(InvariantName(inv) + " " + label + ": " + why);
        }
        break;
    }
  }

  const SweepOptions& options() const { return options_; }
  void note_skipped(const std::vector<std::string>& ids) {
    for (const std::string& id : ids) ++summary_.skipped_criteria[id];
  }

 private:
  const SweepOptions& options_;
  SweepSummary& summary_;
};

Outcome fail(std::string& why, const std::string& msg) {
  why = msg;
  return Outcome::kFail;
}

void cyclic_checks(Runner& run, const FieldTower& t, const CPoly& g, const std::string& label) {
  const size_t n = t.n();
  const uint64_t cap = run.options().enum_cap;
  const LinearCode c = code_from_gpoly(t, g, n);
  const CPoly xn = xn_minus_1(t, n);
  const CPoly h = divmod(t, xn, g).first;

  run.check(Invariant::kRankLength, label, [&](std::string& why) {
    std::vector<PathValue> paths;
    const uint64_t l = rank_length(t, c, &paths);
    const ClosurePolys cp = closure_polys(t, c);
    const uint64_t dim = galois_closure(t, c).k();
    if (l != dim || static_cast<int>(dim) != cp.h_zero.degree() ||
        dim != n - cp.g_star.degree()) {
      return fail(why, "dim C* = " + std::to_string(dim) + ", deg h0 = " +
                           std::to_string(cp.h_zero.degree()) + ", n - deg g* = " +
                           std::to_string(n - cp.g_star.degree()));
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kPeriod, label, [&](std::string& why) {
    const uint64_t lp = period_length(t, c);
    uint64_t scan = n;
    for (uint64_t p = 1; p <= n; ++p) {
      if (n % p == 0 && a_period_check(t, c, p, t.one())) {
        scan = p;
        break;
      }
    }
    const std::optional<uint64_t> ord = order_a(t, closure_polys(t, c).h_zero, t.one());
    if (!ord || *ord != lp || lp != scan) {
      return fail(why, "ord(h0) = " + (ord ? std::to_string(*ord) : "inf") + ", l_P = " +
                           std::to_string(lp) + ", scan = " + std::to_string(scan));
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kEtaDuality, label, [&](std::string& why) {
    if (std::gcd(t.q(), uint64_t{n}) != 1) return Outcome::kSkip;
    const auto [eta, lr] = eta_duality_check(t, c);
    const uint64_t lr_paths = rank_length(t, dual(t, c));
    if (eta != lr || lr != lr_paths) {
      return fail(why, "eta = " + std::to_string(eta) + ", l_R(dual) = " + std::to_string(lr_paths));
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kClosurePolys, label, [&](std::string& why) {
    const ClosurePolys cp = closure_polys(t, c);
    const LinearCode cs = galois_closure(t, c), c0 = galois_interior(t, c);
    const GenCheck gs = generator_check_poly(t, cs), g0 = generator_check_poly(t, c0);
    if (gs.g != cp.g_star || gs.h != cp.h_zero) return fail(why, "(g*, h0) of C* differ");
    if (g0.g != cp.g_zero || g0.h != cp.h_star) return fail(why, "(g0, h*) of C0 differ");
    const auto [g_star, g_zero] = conjugate_closures(t, g);
    const auto [h_star, h_zero] = conjugate_closures(t, h);
    if (g_star != cp.g_star || g_zero != cp.g_zero || h_star != cp.h_star ||
        h_zero != cp.h_zero) {
      return fail(why, "conjugate closures of g, h differ from the closures' polynomials");
    }
    if (gcd(t, g, h).degree() != 0) return Outcome::kPass;
    const CPoly e = idempotent_generator(t, c);
    CPoly prod = CPoly::constant(t.one()), prod_complement = CPoly::constant(t.one());
    for (uint32_t i = 0; i < t.m(); ++i) {
      const CPoly ei = apply_frobenius(t, e, i);
      prod = mod(t, mul(t, prod, ei), xn);
      prod_complement = mod(t, mul(t, prod_complement, sub(t, CPoly::constant(t.one()), ei)), xn);
    }
    if (idempotent_generator(t, c0) != prod) return fail(why, "idempotent of C0");
    if (idempotent_generator(t, cs) != sub(t, CPoly::constant(t.one()), prod_complement)) {
      return fail(why, "idempotent of C*");
    }
    const LinearCode cc = cyclic_complement(t, c);
    if (gcd(t, g0.g, g0.h).degree() == 0 &&
        galois_closure(t, cc) != cyclic_complement(t, c0)) {
      return fail(why, "(C^c)* differs from (C0)^c");
    }
    if (gcd(t, gs.g, gs.h).degree() == 0 &&
        galois_interior(t, cc) != cyclic_complement(t, cs)) {
      return fail(why, "(C^c)0 differs from (C*)^c");
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kDegeneracy, label, [&](std::string& why) {
    const DegeneracyReport rep = degeneracy_report(t, c);
    run.note_skipped(rep.skipped);
    if (rep.degenerate != (galois_closure(t, c).k() < n)) {
      return fail(why, "criteria agree with each other but not with l_R < n");
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kEquivalence, label, [&](std::string& why) {
    const CPoly h0 = closure_polys(t, c).h_zero;
    const int e = h0.degree();
    if (e <= 0) return Outcome::kSkip;
    for (int i = 1; i < e; ++i) {
      if (h0.coeff(i) != t.zero()) return Outcome::kSkip;
    }
    const Element ae = t.neg(h0.coeff(0));
    std::optional<Element> a;
    for (Element x : t.subfield_elements(1)) {
      if (x != t.zero() && t.pow(x, e) == ae) {
        a = x;
        break;
      }
    }
    if (!a) return Outcome::kSkip;
    const LinearCode cs = galois_closure(t, c);
    const LinearCode sub[] = {c};
    const RankEquivalence eq = build_equivalence(t, cs, LinearCode::full(t, e), *a, 0, t.one(), sub);
    const LinearCode image = apply(t, eq, c);
    if (image.n() != static_cast<size_t>(e) || image.k() != c.k()) {
      return fail(why, "image has the wrong shape");
    }
    // s(G) A = ab G s(A), with s(A) shifting the columns of A.
    Matrix shifted(eq.A.rows(), eq.A.cols());
    for (size_t i = 0; i < eq.A.rows(); ++i) {
      const Codeword row = cyclic_shift(eq.A.row(i));
      for (size_t j = 0; j < row.size(); ++j) shifted(i, j) = row[j];
    }
    const Element ab = t.mul(eq.a, eq.b);
    for (size_t i = 0; i < cs.k(); ++i) {
      const auto row = cs.generator().row(i);
      if (times(t, cyclic_shift(row), eq.A) != scaled(t, times(t, row, shifted), ab)) {
        return fail(why, "commutation identity fails on generator row " + std::to_string(i));
      }
    }
    const auto dist = rank_weight_distribution(t, c, cap);
    if (rank_weight_distribution(t, image, cap) != dist) {
      return fail(why, "equivalence changes the weight distribution");
    }
    const ShortenedCode sh = shorten_pseudo_cyclic(t, c, cap);
    if (sh.code.n() != static_cast<size_t>(e) || sh.distribution != dist) {
      return fail(why, "shortening changes the length or weight distribution");
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kSingleton, label, [&](std::string& why) {
    if (codeword_count(t, c) > cap) return Outcome::kSkip;
    const LengthReport rep = analyze(t, c);
    const SingletonAudit audit = singleton_audit(t, c, rep, cap);
    const std::optional<size_t> d = min_rank_distance(t, c, cap);
    if (audit.d_R != d) return fail(why, "audit distance differs");
    for (const SingletonCheck& s : audit.checks) {
      if (d && *d + c.k() > s.value + 1) return fail(why, "d_R > " + s.length + " - k + 1");
    }
    if (!audit.holds) return fail(why, "audit reports a violation");
    return Outcome::kPass;
  });

  run.check(Invariant::kShortening, label, [&](std::string& why) {
    const ShortenedCode sh = shorten_pseudo_cyclic(t, c, cap);
    const CPoly h0 = closure_polys(t, c).h_zero;
    const size_t e = h0.degree();
    if (sh.code.n() != rank_length(t, c)) return fail(why, "length differs from l_R");
    const CPoly x = CPoly::monomial(t.one(), 1);
    for (size_t i = 0; i < sh.code.k(); ++i) {
      const CPoly xf = mod(t, mul(t, x, as_cpoly(sh.code.generator().row(i))), h0);
      if (!sh.code.contains(t, as_codeword(t, xf, e))) return fail(why, "not an ideal mod h0");
    }
    if (rank_weight_distribution(t, sh.code, cap) != rank_weight_distribution(t, c, cap)) {
      return fail(why, "weight distribution changes");
    }
    if (e > 0 && h0 == binomial(t, e, t.one()) && !is_cyclic(t, sh.code)) {
      return fail(why, "h0 = x^e - 1 but the output is not cyclic");
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kLengthChain, label, [&](std::string& why) {
    const LengthReport rep = analyze(t, c);
    uint64_t shift = std::numeric_limits<uint64_t>::max();
    for (const ShiftLength& s : rep.shift_lengths) {
      if (s.value) shift = std::min(shift, *s.value);
    }
    if (!(rep.l_R <= rep.skew.upper && rep.skew.upper <= shift && shift <= rep.l_P &&
          rep.l_P <= n && n % rep.l_P == 0)) {
      return fail(why, "length chain broken");
    }
    return Outcome::kPass;
  });
}

void skew_checks(Runner& run, const FieldTower& t, const LPoly& g, const LPoly& g2,
                 const std::string& label) {
  const uint32_t r = g.r(), n = t.n();
  const uint64_t cap = run.options().enum_cap;
  const LinearCode c = code_from_glpoly(t, g, n);

  run.check(Invariant::kLinearized, label, [&](std::string& why) {
    if (!root_spaces_available(t, r, n)) return Outcome::kSkip;
    const auto [d, l] = rgcd_llcm(t, g, g2);
    const RootSpace zf = root_space(t, g, n), zg = root_space(t, g2, n);
    if (!same_space(root_space(t, d, n), intersect(t, zf, zg))) {
      return fail(why, "Z(rgcd) differs from the intersection");
    }
    if (!same_space(root_space(t, l, n), sum(t, zf, zg))) return fail(why, "Z(llcm) differs from the sum");
    const LPoly normalized = scale(t, g, t.inv(g.lead()));
    if (top(t, perp(t, g), n) != normalized || perp(t, top(t, g, n)) != normalized) {
      return fail(why, "perp/top does not return F/F_d");
    }
    if (generator_check_lpoly(t, dual(t, c), r).h != monic(t, top(t, g, n))) {
      return fail(why, "check polynomial of the dual differs from G^top");
    }
    const ClosurePolys cp = closure_polys(t, c);
    const LGenCheck closed = generator_check_lpoly(t, galois_closure(t, c), r);
    if (closed.g != lift_L(cp.g_star, r)) return fail(why, "generator of C* differs from L(g*)");
    if (closed.h != lift_L(cp.h_zero, r)) return fail(why, "check of C* differs from L(h0)");
    return Outcome::kPass;
  });

  run.check(Invariant::kRankLength, label, [&](std::string& why) {
    const uint64_t dim = galois_closure(t, c).k();
    if (rank_length(t, c) != dim) return fail(why, "l_R differs from dim C*");
    return Outcome::kPass;
  });

  run.check(Invariant::kDegeneracy, label, [&](std::string& why) {
    const DegeneracyReport rep = degeneracy_report(t, c);
    run.note_skipped(rep.skipped);
    if (rep.degenerate != (galois_closure(t, c).k() < n)) {
      return fail(why, "criteria agree with each other but not with l_R < n");
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kSingleton, label, [&](std::string& why) {
    if (codeword_count(t, c) > cap) return Outcome::kSkip;
    const SingletonAudit audit = singleton_audit(t, c, analyze(t, c), cap);
    if (!audit.holds) return fail(why, "audit reports a violation");
    return Outcome::kPass;
  });

  run.check(Invariant::kShortening, label, [&](std::string& why) {
    if (codeword_count(t, c) > cap) return Outcome::kSkip;
    try {
      const ShortenedCode sh = shorten_pseudo_skew(t, c, r, cap);
      if (sh.code.n() != galois_closure(t, c).k()) return fail(why, "length differs from l_R");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kH0NotCentral) return Outcome::kSkip;
      throw;
    }
    return Outcome::kPass;
  });

  run.check(Invariant::kLengthChain, label, [&](std::string&) {
    analyze(t, c);
    return Outcome::kPass;
  });
}

}  // namespace

const std::vector<Invariant>& AllInvariants() {
  static const std::vector<Invariant> all = {
      Invariant::kRankLength, Invariant::kPeriod,      Invariant::kEtaDuality,
      Invariant::kClosurePolys, Invariant::kDegeneracy, Invariant::kEquivalence,
      Invariant::kLinearized, Invariant::kSingleton,   Invariant::kShortening,
      Invariant::kLengthChain};
  return all;
}

std::string InvariantName(Invariant inv) {
  switch (inv) {
    case Invariant::kRankLength: return "rank_length";
    case Invariant::kPeriod: return "period";
    case Invariant::kEtaDuality: return "eta_duality";
    case Invariant::kClosurePolys: return "closure_polys";
    case Invariant::kDegeneracy: return "degeneracy";
    case Invariant::kEquivalence: return "equivalence";
    case Invariant::kLinearized: return "linearized";
    case Invariant::kSingleton: return "singleton";
    case Invariant::kShortening: return "shortening";
    case Invariant::kLengthChain: return "length_chain";
  }
  return "unknown";
}

bool SweepSummary::ok() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const auto& kv) { return kv.second.fail == 0; });
}

SweepOptions DefaultSweep() {
  SweepOptions o;
  o.grid = ParseGrid("2:2:3-7,2:3:3-7,3:2:2,3:2:4");
  o.skew = ParseSkewGrid("2:2:1:2,2:2:1:4,2:2:2:2,2:2:2:3");
  return o;
}

std::vector<GridPoint> ParseGrid(const std::string& text) {
  std::vector<GridPoint> out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const std::vector<std::string> parts = split(item, ':');
    if (parts.size() != 3) throw Error(ErrorKind::kParseError, "expected q:m:n, got '" + item + "'");
    const uint32_t q = parse_u32(parts[0], item), m = parse_u32(parts[1], item);
    split_prime_power(q);
    const auto [lo, hi] = parse_range(parts[2], item);
    if (m == 0 || lo == 0) throw Error(ErrorKind::kParseError, "m and n must be positive");
    for (uint32_t n = lo; n <= hi; ++n) out.push_back({q, m, n});
  }
  return out;
}

std::vector<SkewConfig> ParseSkewGrid(const std::string& text) {
  std::vector<SkewConfig> out;
  if (text.empty()) return out;
  for (const std::string& item : split(text, ',')) {
    const std::vector<std::string> parts = split(item, ':');
    if (parts.size() != 4) {
      throw Error(ErrorKind::kParseError, "expected q:m:r:n, got '" + item + "'");
    }
    const SkewConfig s{parse_u32(parts[0], item), parse_u32(parts[1], item),
                       parse_u32(parts[2], item), parse_u32(parts[3], item)};
    split_prime_power(s.q);
    if (s.m == 0 || s.r == 0 || s.n == 0) {
      throw Error(ErrorKind::kParseError, "m, r and n must be positive");
    }
    out.push_back(s);
  }
  return out;
}

void ParseSweepGrid(const std::string& text, SweepOptions* options) {
  options->grid.clear();
  options->skew.clear();
  if (text.empty()) return;
  for (const std::string& item : split(text, ',')) {
    const size_t fields = std::count(item.begin(), item.end(), ':') + 1;
    if (fields == 4) {
      options->skew.push_back(ParseSkewGrid(item).front());
    } else {
      for (const GridPoint& g : ParseGrid(item)) options->grid.push_back(g);
    }
  }
}

SweepSummary RunSweep(const SweepOptions& options) {
  SweepSummary summary;
  Runner run(options, summary);
  TowerOptions tower;
  tower.ambient_cap = options.ambient_cap;
  for (const GridPoint& gp : options.grid) {
    const auto [p, e] = split_prime_power(gp.q);
    const FieldTower t = FieldTower::make(p, e, gp.m, 0, gp.n, tower);
    const std::string point =
        "q=" + std::to_string(gp.q) + " m=" + std::to_string(gp.m) + " n=" + std::to_string(gp.n);
    for (const CPoly& g : all_divisors(t, factor_xn_minus_1(t, gp.n))) {
      cyclic_checks(run, t, g, point + " g=" + join(t, g.coeffs()));
      ++summary.cyclic_codes;
    }
  }
  for (const SkewConfig& sc : options.skew) {
    const auto [p, e] = split_prime_power(sc.q);
    const FieldTower t = FieldTower::make(p, e, sc.m, sc.r, sc.n, tower);
    std::seed_seq seq{options.seed, uint64_t{sc.q}, uint64_t{sc.m}, uint64_t{sc.r}, uint64_t{sc.n}};
    std::mt19937_64 rng(seq);
    const std::string point = "q=" + std::to_string(sc.q) + " m=" + std::to_string(sc.m) +
                              " r=" + std::to_string(sc.r) + " n=" + std::to_string(sc.n);
    for (uint32_t i = 0; i < options.skew_samples; ++i) {
      const LPoly g = sample_right_divisor(t, sc.r, sc.n, rng() % (sc.n + 1), rng);
      const LPoly g2 = sample_right_divisor(t, sc.r, sc.n, rng() % (sc.n + 1), rng);
      skew_checks(run, t, g, g2, point + " sample=" + std::to_string(i) + " G=" + join(t, g.coeffs()));
      ++summary.skew_codes;
    }
  }
  return summary;
}

}  // namespace rankcodes
