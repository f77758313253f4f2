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

#include <gtest/gtest.h>

#include "rankcodes/error.h"

namespace rankcodes {
namespace {

TEST(SweepGridTest, ParsesRangesAndLists) {
  const std::vector<GridPoint> g = ParseGrid("2:2:3-5,3:2:2");
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0].n, 3u);
  EXPECT_EQ(g[2].n, 5u);
  EXPECT_EQ(g[3].q, 3u);
  EXPECT_TRUE(ParseGrid("").empty());
  const std::vector<SkewConfig> s = ParseSkewGrid("2:2:1:4");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].r, 1u);
  EXPECT_EQ(s[0].n, 4u);
}

TEST(SweepGridTest, RejectsMalformedItems) {
  for (const char* bad : {"2:2", "6:2:3", "2:2:5-3", "2:x:3", "2:0:3", "2:2:3,"}) {
    EXPECT_THROW(ParseGrid(bad), Error) << bad;
  }
  EXPECT_THROW(ParseSkewGrid("2:2:0:3"), Error);
  EXPECT_THROW(ParseSkewGrid("2:2:3"), Error);
}

TEST(SweepGridTest, MixedListSplitsByFieldCount) {
  SweepOptions o = DefaultSweep();
  ParseSweepGrid("2:2:3-4,2:2:1:2", &o);
  EXPECT_EQ(o.grid.size(), 2u);
  ASSERT_EQ(o.skew.size(), 1u);
  EXPECT_EQ(o.skew[0].r, 1u);
  ParseSweepGrid("", &o);
  EXPECT_TRUE(o.grid.empty() && o.skew.empty());
}

TEST(SweepTest, NonCoprimeLengthSkipsRootSetCriteria) {
  SweepOptions o;
  o.grid = ParseGrid("2:2:6");
  o.only = {Invariant::kDegeneracy};
  const SweepSummary s = RunSweep(o);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.tallies.at("degeneracy").pass, s.cyclic_codes);
  EXPECT_FALSE(s.skipped_criteria.empty());
}

TEST(SweepTest, EmptyGridPasses) {
  const SweepSummary s = RunSweep({});
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.cyclic_codes + s.skew_codes, 0u);
}

TEST(SweepTest, SmallGridHoldsEveryInvariant) {
  SweepOptions o;
  o.grid = ParseGrid("2:2:3-4,3:2:2");
  o.skew = ParseSkewGrid("2:2:1:2,2:2:2:2");
  o.skew_samples = 8;
  const SweepSummary s = RunSweep(o);
  for (const std::string& f : s.failures) ADD_FAILURE() << f;
  EXPECT_TRUE(s.ok());
  // GF(4): 8 divisors of x^3 - 1 and 5 of x^4 - 1; GF(9): 4 of x^2 - 1.
  EXPECT_EQ(s.cyclic_codes, 17u);
  EXPECT_EQ(s.skew_codes, 16u);
  for (Invariant inv : AllInvariants()) {
    const Tally& tally = s.tallies.at(InvariantName(inv));
    EXPECT_GT(tally.pass, 0u) << InvariantName(inv);
  }
}

TEST(SweepTest, SelectionRestrictsChecks) {
  SweepOptions o;
  o.grid = ParseGrid("2:2:3");
  o.only = {Invariant::kPeriod};
  const SweepSummary s = RunSweep(o);
  ASSERT_EQ(s.tallies.size(), 1u);
  EXPECT_EQ(s.tallies.begin()->first, "period");
  EXPECT_EQ(s.tallies.begin()->second.pass, 8u);
}

TEST(SweepTest, SameSeedSameSamples) {
  SweepOptions o;
  o.skew = ParseSkewGrid("2:2:1:4");
  o.skew_samples = 5;
  o.only = {Invariant::kRankLength};
  const SweepSummary a = RunSweep(o), b = RunSweep(o);
  EXPECT_EQ(a.tallies.at("rank_length").pass, b.tallies.at("rank_length").pass);
  EXPECT_EQ(a.failures, b.failures);
}

}  // namespace
}  // namespace rankcodes
