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


// Rank-metric lengths of skew cyclic codes and the constructions that
// realize them.
//
// Every quantity with more than one characterization is computed along each
// applicable path; a mismatch raises PathDisagreement or
// CriterionDisagreement rather than being reconciled.
#ifndef RANKCODES_LENGTHS_H_
#define RANKCODES_LENGTHS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankcodes/code.h"
#include "rankcodes/cpoly.h"
#include "rankcodes/gf.h"
#include "rankcodes/linalg.h"
#include "rankcodes/lpoly.h"

namespace rankcodes {

// One computation path and its value, kept for reporting.
struct PathValue {
  std::string path;
  uint64_t value = 0;
};

// Generator and check polynomials of C* and C^0 from the cyclic view of C*.
// Throws NotSkewCyclic when C* is not cyclic.
struct ClosurePolys {
  CPoly g_star, h_zero;  // C*
  CPoly g_zero, h_star;  // C^0
};
ClosurePolys closure_polys(const FieldTower& t, const LinearCode& c);

// dim C*, cross-checked along every applicable polynomial and root path.
uint64_t rank_length(const FieldTower& t, const LinearCode& c,
                     std::vector<PathValue>* paths = nullptr);

// c_{i+p} = a c_i (indices mod n) on a generating set.
bool a_period_check(const FieldTower& t, const LinearCode& c, uint64_t p, Element a);

// ord(h0), checked against the least divisor p of n that is a 1-period.
uint64_t period_length(const FieldTower& t, const LinearCode& c);

// min over feasible b in GF(q)* of ord_{ab}(h0); nullopt means infinity.
// a must lie in GF(q)*. Also checks that e = ord_a(h0) is an a^{-e}-period.
std::optional<uint64_t> shift_length(const FieldTower& t, const LinearCode& c, Element a,
                                     uint32_t r);

struct ShiftLength {
  Element a;
  uint32_t r = 0;
  std::optional<uint64_t> value;
};

struct SkewBounds {
  uint32_t order = 0;
  uint64_t lower = 0;
  uint64_t upper = 0;
  // nullopt when neither the binomial test nor a search decides.
  std::optional<bool> attained;
  std::optional<LinearCode> witness;
  // Set when the exhaustive search ran.
  std::optional<uint64_t> exact;
};

struct SkewSearchOptions {
  bool exhaustive = false;
  // Bound on candidate generators times candidate matrices.
  uint64_t work_cap = uint64_t{1} << 22;
};

SkewBounds skew_length_bounds(const FieldTower& t, const LinearCode& c, uint32_t s,
                              const SkewSearchOptions& options = {});

struct Criterion {
  std::string id;
  bool value = false;
};

struct DegeneracyReport {
  bool degenerate = false;
  std::vector<Criterion> criteria;
  // Items whose gate (coprimality, m | rn, available root spaces, search
  // size) was not met.
  std::vector<std::string> skipped;
};

// Evaluates every applicable degeneracy criterion independently. Throws
// CriterionDisagreement unless all agree.
DegeneracyReport degeneracy_report(const FieldTower& t, const LinearCode& c);

// c -> beta * c * A between cyclic Galois closed spaces.
struct RankEquivalence {
  Element beta;
  Matrix A;  // n x n', entries in GF(q)
  LinearCode domain;
  LinearCode codomain;
  Element a;
  uint32_t r = 0;
  Element b;
};

Codeword apply(const FieldTower& t, const RankEquivalence& eq, std::span<const Element> c);
LinearCode apply(const FieldTower& t, const RankEquivalence& eq, const LinearCode& c);

// Builds phi(s^i(g)) = (ab)^i beta s^i(g') for i < k and verifies
// bijectivity, rank-weight preservation, the commutation identity and that
// each subcode keeps its skew orders.
RankEquivalence build_equivalence(const FieldTower& t, const LinearCode& v,
                                  const LinearCode& v_prime, Element a, uint32_t r,
                                  Element beta, std::span<const LinearCode> subcodes = {});

// A rank equivalence from C* onto a cyclic Galois closed space of length
// l_{Sh,a,r}(C) with check polynomial (ab)^{-k} h0(abx), for the b that
// attains the minimum. nullopt when the shift length is infinite.
std::optional<RankEquivalence> shift_equivalence(const FieldTower& t, const LinearCode& c,
                                                 Element a, uint32_t r);

struct ShortenedCode {
  LinearCode code;
  // Modulus of the quotient ring, h0 or H_0.
  std::optional<CPoly> modulus;
  std::optional<LPoly> lmodulus;
  // g* or G*; phi(f) = f g* (resp. F (x) G*).
  std::optional<CPoly> multiplier;
  std::optional<LPoly> lmultiplier;
  std::map<size_t, uint64_t> original_distribution;
  std::map<size_t, uint64_t> distribution;
  bool cyclic = false;
  std::string description;
};

ShortenedCode shorten_pseudo_cyclic(const FieldTower& t, const LinearCode& c,
                                    uint64_t cap = uint64_t{1} << 16);
// Throws H0NotCentral when the check polynomial of C* is not central.
ShortenedCode shorten_pseudo_skew(const FieldTower& t, const LinearCode& c, uint32_t r,
                                  uint64_t cap = uint64_t{1} << 16);

// (eta_q(C), l_R(C^perp)); requires gcd(q, n) = 1.
std::pair<uint64_t, uint64_t> eta_duality_check(const FieldTower& t, const LinearCode& c);

struct LengthReport {
  size_t n = 0;
  size_t k = 0;
  uint64_t l_R = 0;
  uint64_t l_P = 0;
  std::vector<ShiftLength> shift_lengths;
  SkewBounds skew;
  bool degenerate = false;
  std::vector<Criterion> criteria;
  std::vector<std::string> skipped;
  std::vector<PathValue> rank_paths;
};

// Full analysis of a skew cyclic code. Checks the chain
// l_R <= upper <= min shift length <= l_P <= n and l_P | n.
LengthReport analyze(const FieldTower& t, const LinearCode& c,
                     const SkewSearchOptions& options = {});

struct SingletonCheck {
  std::string length;
  uint64_t value = 0;
  bool holds = false;
};

struct SingletonAudit {
  std::optional<size_t> d_R;
  std::vector<SingletonCheck> checks;
  bool holds = true;
};

// d_R <= l - k + 1 for every finite length of the report.
SingletonAudit singleton_audit(const FieldTower& t, const LinearCode& c,
                               const LengthReport& report, uint64_t cap = uint64_t{1} << 16);

}  // namespace rankcodes

#endif  // RANKCODES_LENGTHS_H_
