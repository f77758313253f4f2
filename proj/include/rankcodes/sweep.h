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


// Verification sweeps: every cyclic code of a parameter grid and seeded
// samples of skew cyclic codes, each run through the redundant computation
// paths of the lengths module.
#ifndef RANKCODES_SWEEP_H_
#define RANKCODES_SWEEP_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rankcodes {

struct GridPoint {
  uint32_t q = 2;
  uint32_t m = 2;
  uint32_t n = 3;
};

struct SkewConfig {
  uint32_t q = 2;
  uint32_t m = 2;
  uint32_t r = 1;
  uint32_t n = 2;
};

// Checks, one per acceptance property.
enum class Invariant {
  kRankLength,      // dim C* = deg h0 = n - deg g*, all paths
  kPeriod,          // ord(h0) = least 1-period
  kEtaDuality,      // eta_q(C) = l_R(C^perp), gcd(q, n) = 1
  kClosurePolys,    // (g*, h0), (g0, h*) and the idempotent identities
  kDegeneracy,      // all degeneracy criteria agree
  kEquivalence,     // binomial h0: equivalence and shortening keep weights
  kLinearized,      // root spaces, perp/top, dual check, L(g*)
  kSingleton,       // d_R <= l - k + 1
  kShortening,      // pseudo-cyclic shortening
  kLengthChain,     // full analysis and its inequalities
};

const std::vector<Invariant>& AllInvariants();
std::string InvariantName(Invariant inv);

struct SweepOptions {
  std::vector<GridPoint> grid;
  std::vector<SkewConfig> skew;
  uint32_t skew_samples = 50;
  uint64_t seed = 0;
  uint64_t enum_cap = uint64_t{1} << 16;
  uint64_t ambient_cap = uint64_t{1} << 24;
  // Empty selects every invariant.
  std::set<Invariant> only;
};

struct Tally {
  uint64_t pass = 0;
  uint64_t fail = 0;
  uint64_t skipped = 0;
};

struct SweepSummary {
  uint64_t cyclic_codes = 0;
  uint64_t skew_codes = 0;
  std::map<std::string, Tally> tallies;
  // Degeneracy criteria whose gate was not met, by id, with counts.
  std::map<std::string, uint64_t> skipped_criteria;
  // First failures, with the code that triggered them.
  std::vector<std::string> failures;
  bool ok() const;
};

// The acceptance grid: q = 2, m in {2, 3}, n in 3..7 and q = 3, m = 2,
// n in {2, 4}; skew samples at (r, n) in {(1, 2), (1, 4), (2, 2), (2, 3)}
// over GF(4).
SweepOptions DefaultSweep();

// "q:m:n" items separated by commas; n may be a range "a-b". Throws
// ParseError.
std::vector<GridPoint> ParseGrid(const std::string& text);
// "q:m:r:n" items separated by commas.
std::vector<SkewConfig> ParseSkewGrid(const std::string& text);

// Mixed list: items with three fields go to the cyclic grid, items with
// four to the skew configurations. An empty string clears both.
void ParseSweepGrid(const std::string& text, SweepOptions* options);

SweepSummary RunSweep(const SweepOptions& options);

}  // namespace rankcodes

#endif  // RANKCODES_SWEEP_H_
