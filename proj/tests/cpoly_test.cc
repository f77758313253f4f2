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


#include "rankcodes/cpoly.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "rankcodes/error.h"
#include "test_util.h"

namespace rankcodes {
namespace {

using testing::alpha;
using testing::random_cpoly;

class Gf4Test : public ::testing::Test {
 protected:
  Gf4Test() : t(FieldTower::make(2, 1, 2, 0, 3)), a(alpha(t)), a2(t.mul(a, a)) {}
  CPoly lin(Element c) const { return CPoly({c, t.one()}); }  // x + c
  CPoly poly(std::vector<Element> c) const { return CPoly(std::move(c)); }

  FieldTower t;
  Element a, a2;
};

TEST_F(Gf4Test, PrimitiveRelation) { EXPECT_EQ(a2, t.add(a, t.one())); }

TEST_F(Gf4Test, Divmod) {
  const CPoly x3m1 = xn_minus_1(t, 3);
  auto [q1, r1] = divmod(t, x3m1, lin(t.one()));
  EXPECT_EQ(q1, poly({t.one(), t.one(), t.one()}));
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = divmod(t, x3m1, lin(a));
  EXPECT_EQ(q2, poly({a2, a, t.one()}));
  EXPECT_TRUE(r2.is_zero());
  EXPECT_EQ(mul(t, q2, lin(a)), x3m1);
  auto [q3, r3] = divmod(t, q2, q2);
  EXPECT_EQ(q3, CPoly::constant(t.one()));
  EXPECT_TRUE(r3.is_zero());
  EXPECT_THROW(divmod(t, q2, CPoly()), Error);
}

TEST_F(Gf4Test, GcdLcm) {
  const CPoly f = poly({a, a2, a});
  EXPECT_EQ(gcd(t, f, CPoly()), monic(t, f));
  auto [g, l] = gcd_lcm(t, lin(a), lin(a2));
  EXPECT_EQ(g, CPoly::constant(t.one()));
  EXPECT_EQ(l, poly({t.one(), t.one(), t.one()}));
  EXPECT_THROW(gcd(t, CPoly(), CPoly()), Error);
}

TEST_F(Gf4Test, GcdLcmDegreeIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int i = 0; i < 100; ++i) {
    const CPoly f = random_cpoly(t, deg(rng), 2, rng);
    const CPoly g = random_cpoly(t, deg(rng), 2, rng);
    auto [d, l] = gcd_lcm(t, f, g);
    EXPECT_EQ(d.degree() + l.degree(), f.degree() + g.degree());
    EXPECT_TRUE(divides(t, d, f) && divides(t, d, g));
    EXPECT_TRUE(divides(t, f, l) && divides(t, g, l));
    const Bezout b = extended_gcd(t, f, g);
    EXPECT_EQ(add(t, mul(t, b.a, f), mul(t, b.b, g)), d);
  }
}

TEST_F(Gf4Test, Frobenius) {
  const CPoly rational = poly({t.one(), t.zero(), t.one(), t.one()});
  EXPECT_EQ(apply_frobenius(t, rational, 1), rational);
  EXPECT_EQ(apply_frobenius(t, lin(a), 1), lin(a2));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const CPoly f = random_cpoly(t, 3, 2, rng), g = random_cpoly(t, 2, 2, rng);
    EXPECT_EQ(apply_frobenius(t, mul(t, f, g), 1),
              mul(t, apply_frobenius(t, f, 1), apply_frobenius(t, g, 1)));
  }
}

TEST_F(Gf4Test, ConjugateClosures) {
  const CPoly rational = poly({t.one(), t.one(), t.zero(), t.one()});
  EXPECT_EQ(conjugate_closures(t, rational), std::make_pair(rational, rational));
  auto [s1, z1] = conjugate_closures(t, lin(a));
  EXPECT_EQ(s1, CPoly::constant(t.one()));
  EXPECT_EQ(z1, poly({t.one(), t.one(), t.one()}));
  const CPoly f = poly({a2, a, t.one()});
  EXPECT_EQ(f, mul(t, lin(t.one()), lin(a2)));
  EXPECT_EQ(conjugate_closures(t, f).second, xn_minus_1(t, 3));
  EXPECT_EQ(conjugate_closures(t, f).first, lin(t.one()));
  EXPECT_THROW(conjugate_closures(t, CPoly()), Error);
}

TEST_F(Gf4Test, ReciprocalDual) {
  EXPECT_EQ(reciprocal_dual(t, lin(t.one())), lin(t.one()));
  const CPoly f = poly({a2, a, t.one()});
  const CPoly fp = reciprocal_dual(t, f);
  // reversed [1, a, a^2] scaled by a^{-2}
  EXPECT_EQ(fp, scale(t, poly({t.one(), a, a2}), t.inv(a2)));
  EXPECT_EQ(reciprocal_dual(t, fp), f);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    CPoly g = random_cpoly(t, 4, 2, rng);
    if (g.coeff(0) == t.zero()) g = add(t, g, CPoly::constant(t.one()));
    EXPECT_EQ(reciprocal_dual(t, g).degree(), g.degree());
  }
  EXPECT_THROW(reciprocal_dual(t, CPoly::monomial(t.one(), 2)), Error);
}

TEST_F(Gf4Test, RootSets) {
  const RootSet all = root_set(t, xn_minus_1(t, 3), 3);
  EXPECT_EQ(all.exponents, (std::vector<uint64_t>{0, 1, 2}));
  const Element zeta = t.root_of_unity(3);
  const RootSet one = root_set(t, lin(a), 3);
  ASSERT_EQ(one.exponents.size(), 1u);
  EXPECT_EQ(t.pow(zeta, one.exponents[0]), a);  // x + a has root a in characteristic 2
  for (const CPoly& g : all_divisors(t, factor_xn_minus_1(t, 3))) {
    const RootSet s = root_set(t, g, 3);
    std::vector<uint64_t> scaled;
    for (uint64_t e : s.exponents) scaled.push_back(e * t.q() % 3);
    std::sort(scaled.begin(), scaled.end());
    EXPECT_EQ(root_set(t, apply_frobenius(t, g, 1), 3).exponents, scaled);
    EXPECT_EQ(from_root_set(t, s), monic(t, g));
  }
  EXPECT_THROW(root_set(t, CPoly({t.one(), t.one(), t.one(), t.one()}), 3), Error);
}

TEST_F(Gf4Test, MuEta) {
  const CPoly rational = poly({t.one(), t.one(), t.one()});
  EXPECT_EQ(mu_eta(t, rational, 3), std::make_pair(rational, uint64_t{2}));
  EXPECT_EQ(mu_eta(t, lin(a), 3), std::make_pair(rational, uint64_t{2}));
  EXPECT_EQ(mu_eta(t, xn_minus_1(t, 3), 3).second, 3u);
}

TEST_F(Gf4Test, Factorization) {
  const auto over_q = factor_xn_minus_1(t, 3, 1);
  ASSERT_EQ(over_q.size(), 2u);
  EXPECT_EQ(over_q[0].poly, lin(t.one()));
  EXPECT_EQ(over_q[1].poly, poly({t.one(), t.one(), t.one()}));
  const auto over_qm = factor_xn_minus_1(t, 3);
  ASSERT_EQ(over_qm.size(), 3u);
  std::set<std::vector<Element>> got, want{lin(t.one()).coeffs(), lin(a).coeffs(), lin(a2).coeffs()};
  for (const Factor& f : over_qm) got.insert(f.poly.coeffs());
  EXPECT_EQ(got, want);

  const FieldTower t2 = FieldTower::make(2, 1, 2, 0, 4);
  const auto f4 = factor_xn_minus_1(t2, 4);
  ASSERT_EQ(f4.size(), 1u);
  EXPECT_EQ(f4[0].multiplicity, 4u);
  EXPECT_EQ(f4[0].poly, CPoly({t2.one(), t2.one()}));
}

TEST(OrderTest, Examples) {
  const FieldTower t = FieldTower::make(3, 1, 2, 0, 4);
  const Element two = t.from_int(2);
  EXPECT_EQ(order_a(t, binomial(t, 1, two), two), 1u);
  EXPECT_EQ(order_a(t, CPoly::monomial(t.one(), 1), t.one()), std::nullopt);
  EXPECT_EQ(order_a(t, CPoly({t.one(), t.one()}), t.one()), 2u);
  EXPECT_THROW(order_a(t, CPoly({t.one(), t.one()}), alpha(t)), Error);
  EXPECT_THROW(order_a(t, CPoly(), t.one()), Error);
}

// ord_a(f) = e is the least e with f | x^e - a^e.
TEST(OrderTest, DirectRecheck) {
  for (auto [p, m, n] : std::vector<std::array<uint32_t, 3>>{{2, 2, 3}, {2, 2, 6}, {3, 2, 4}, {3, 2, 2}}) {
    const FieldTower t = FieldTower::make(p, 1, m, 0, n);
    for (const CPoly& f : all_divisors(t, factor_xn_minus_1(t, n))) {
      for (Element a : t.subfield_elements(1)) {
        if (a == t.zero()) continue;
        const auto e = order_a(t, f, a);
        if (!e) {
          // only possible when no power of x^n ... divides
          for (uint64_t k = 1; k <= 4 * n; ++k) EXPECT_FALSE(divides(t, f, binomial(t, k, t.pow(a, k))));
          continue;
        }
        EXPECT_TRUE(divides(t, f, binomial(t, *e, t.pow(a, *e))));
        for (uint64_t k = 1; k < *e; ++k) EXPECT_FALSE(divides(t, f, binomial(t, k, t.pow(a, k))));
      }
    }
  }
}

TEST(ClosureProperties, DivisorSweep) {
  for (auto [p, m, n] : std::vector<std::array<uint32_t, 3>>{
           {2, 2, 3}, {2, 2, 5}, {2, 2, 6}, {2, 3, 7}, {3, 2, 4}, {2, 2, 4}}) {
    const FieldTower t = FieldTower::make(p, 1, m, 0, n);
    const CPoly xn = xn_minus_1(t, n);
    const bool coprime = gcd_u64(t.q(), n) == 1;
    for (const CPoly& g : all_divisors(t, factor_xn_minus_1(t, n))) {
      const CPoly h = divmod(t, xn, g).first;
      const auto [gs, g0] = conjugate_closures(t, g);
      const auto [hs, h0] = conjugate_closures(t, h);
      EXPECT_EQ(mul(t, gs, h0), xn);
      EXPECT_EQ(mul(t, g0, hs), xn);
      EXPECT_EQ(apply_frobenius(t, gs, 1), gs);
      EXPECT_EQ(apply_frobenius(t, g0, 1), g0);
      if (!coprime) continue;
      std::set<uint64_t> uni, inter;
      const RootSet z = root_set(t, g, n);
      for (uint64_t s : z.exponents) inter.insert(s);
      uint64_t qi = 1;
      for (uint32_t i = 0; i < m; ++i) {
        std::set<uint64_t> img;
        for (uint64_t s : z.exponents) img.insert(s * qi % n);
        uni.insert(img.begin(), img.end());
        std::set<uint64_t> keep;
        std::set_intersection(inter.begin(), inter.end(), img.begin(), img.end(),
                              std::inserter(keep, keep.begin()));
        inter = keep;
        qi = qi * t.q() % n;
      }
      const auto zs = root_set(t, gs, n).exponents, z0 = root_set(t, g0, n).exponents;
      EXPECT_EQ(std::set<uint64_t>(z0.begin(), z0.end()), uni);
      EXPECT_EQ(std::set<uint64_t>(zs.begin(), zs.end()), inter);
      EXPECT_NO_THROW(mu_eta(t, g, n));
    }
  }
}

}  // namespace
}  // namespace rankcodes
