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


#include "rankcodes/code.h"

#include <gtest/gtest.h>

#include <random>

#include "rankcodes/error.h"
#include "test_util.h"

namespace rankcodes {
namespace {

using testing::alpha;

struct Grid {
  uint32_t p, m, n;
};

const std::vector<Grid> kCyclicGrid = {{2, 2, 3}, {2, 2, 4}, {2, 2, 5}, {2, 2, 6},
                                       {2, 3, 3}, {3, 2, 2}, {3, 2, 4}};

std::vector<LinearCode> all_cyclic(const FieldTower& t, uint32_t n) {
  std::vector<LinearCode> out;
  for (const CPoly& g : all_divisors(t, factor_xn_minus_1(t, n))) {
    out.push_back(code_from_gpoly(t, g, n));
  }
  return out;
}

Matrix rows_of(std::vector<Vec> rows, size_t n) { return Matrix::from_rows(rows, n); }

TEST(RankWeightTest, Examples) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const Element a = alpha(t);
  EXPECT_EQ(rank_weight(t, Vec(3, t.zero())), 0u);
  EXPECT_EQ(rank_weight(t, Vec(3, t.one())), 1u);
  EXPECT_EQ(rank_weight(t, Vec{t.one(), a, t.zero()}), 2u);
}

TEST(RankWeightTest, ScalingInvarianceAndPaths) {
  // e = 2 exercises the Moore-matrix path; e = 1 the digit paths.
  for (auto [p, e, m] : std::vector<std::array<uint32_t, 3>>{{2, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
    const FieldTower t = FieldTower::make(p, e, m, 0, 4);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
      Vec c(4);
      for (Element& x : c) x = testing::random_in(t, m, rng);
      Element beta = testing::random_in(t, m, rng);
      if (beta == t.zero()) beta = t.one();
      Vec bc = c;
      for (Element& x : bc) x = t.mul(x, beta);
      const size_t w = rank_weight(t, c);
      EXPECT_EQ(rank_weight(t, bc), w);
      EXPECT_LE(w, std::min<size_t>(m, 4));
      // Oracle: count GF(q)-combinations giving zero = q^{n - w}.
      const auto base = t.subfield_elements(1);
      uint64_t zeros = 0;
      std::vector<size_t> idx(4, 0);
      for (;;) {
        Element s = t.zero();
        for (size_t j = 0; j < 4; ++j) s = t.add(s, t.mul(base[idx[j]], c[j]));
        zeros += s == t.zero();
        size_t pos = 0;
        while (pos < 4 && ++idx[pos] == base.size()) idx[pos++] = 0;
        if (pos == 4) break;
      }
      EXPECT_EQ(zeros, ipow(t.q(), 4 - w));
    }
  }
}

TEST(CodeTest, DualSumIntersect) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  EXPECT_EQ(dual(t, LinearCode::full(t, 3)), LinearCode::zero(3));
  for (const Grid& g : kCyclicGrid) {
    const FieldTower tw = FieldTower::make(g.p, 1, g.m, 0, g.n);
    const auto codes = all_cyclic(tw, g.n);
    for (size_t i = 0; i < codes.size(); ++i) {
      const LinearCode& c = codes[i];
      EXPECT_EQ(dual(tw, dual(tw, c)), c);
      EXPECT_EQ(dual(tw, c).k(), c.n() - c.k());
      EXPECT_EQ(sum(tw, c, c), c);
      EXPECT_EQ(intersect(tw, c, c), c);
      const LinearCode& d = codes[(i * 7 + 3) % codes.size()];
      EXPECT_EQ(sum(tw, c, d).k() + intersect(tw, c, d).k(), c.k() + d.k());
    }
  }
  EXPECT_THROW(sum(t, LinearCode::zero(2), LinearCode::zero(3)), Error);
}

TEST(CodeTest, GaloisClosureExamples) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 2);
  const Element a = alpha(t);
  const LinearCode rational = LinearCode::span(t, rows_of({{t.one(), t.one()}}, 2));
  EXPECT_EQ(galois_closure(t, rational), rational);
  EXPECT_EQ(galois_interior(t, rational), rational);
  const LinearCode c = LinearCode::span(t, rows_of({{t.one(), a}}, 2));
  EXPECT_EQ(galois_closure(t, c), LinearCode::full(t, 2));
  EXPECT_EQ(galois_interior(t, c), LinearCode::zero(2));
}

TEST(CodeTest, StichtenothDualityAndClosureFacts) {
  for (const Grid& g : kCyclicGrid) {
    const FieldTower t = FieldTower::make(g.p, 1, g.m, 0, g.n);
    for (const LinearCode& c : all_cyclic(t, g.n)) {
      const LinearCode cs = galois_closure(t, c), c0 = galois_interior(t, c);
      EXPECT_EQ(galois_closure(t, dual(t, c)), dual(t, c0));
      EXPECT_EQ(galois_interior(t, dual(t, c)), dual(t, cs));
      EXPECT_TRUE(is_galois_closed(t, cs));
      EXPECT_TRUE(is_galois_closed(t, c0));
      EXPECT_EQ(intersect(t, cs, c), c);
      EXPECT_EQ(sum(t, c0, c), c);
      if (is_galois_closed(t, c)) EXPECT_EQ(cs, c);
      // Galois closed iff a GF(q) generator matrix exists: the RREF of a
      // Galois closed code has GF(q) entries.
      bool rational = true;
      for (size_t i = 0; i < cs.k(); ++i)
        for (Element x : cs.generator().row(i)) rational = rational && t.in_subfield(x, 1);
      EXPECT_TRUE(rational);
      // Galois closed codes that are cyclic are skew cyclic of all orders.
      EXPECT_EQ(skew_orders(t, cs).size(), g.m);
    }
  }
}

TEST(CodeTest, CyclicityExamples) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  for (int64_t s = 0; s < 2; ++s) {
    EXPECT_TRUE(is_qr_cyclic(t, LinearCode::full(t, 3), s));
    EXPECT_TRUE(is_qr_cyclic(t, LinearCode::zero(3), s));
  }
  const LinearCode rep = LinearCode::span(t, rows_of({{t.one(), t.one(), t.one()}}, 3));
  EXPECT_TRUE(is_cyclic(t, rep));
  EXPECT_TRUE(is_galois_closed(t, rep));
  const LinearCode not_cyclic = LinearCode::span(t, rows_of({{t.one(), t.zero(), t.zero()}}, 3));
  EXPECT_FALSE(is_cyclic(t, not_cyclic));
  EXPECT_THROW(generator_check_poly(t, not_cyclic), Error);
}

TEST(CodeTest, GeneratorCheckExamples) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const Element a = alpha(t), a2 = t.mul(a, a);
  const GenCheck full = generator_check_poly(t, LinearCode::full(t, 3));
  EXPECT_EQ(full.g, CPoly::constant(t.one()));
  EXPECT_EQ(full.h, xn_minus_1(t, 3));
  const GenCheck zero = generator_check_poly(t, LinearCode::zero(3));
  EXPECT_EQ(zero.g, xn_minus_1(t, 3));
  EXPECT_EQ(zero.h, CPoly::constant(t.one()));
  const GenCheck gh = generator_check_poly(t, code_from_gpoly(t, CPoly({a, t.one()}), 3));
  EXPECT_EQ(gh.g, CPoly({a, t.one()}));
  EXPECT_EQ(gh.h, CPoly({a2, a, t.one()}));
}

TEST(CodeTest, GeneratorCheckLinearizedExamples) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  const LGenCheck full = generator_check_lpoly(t, LinearCode::full(t, 2), 1);
  EXPECT_EQ(full.g, LPoly::identity(1));
  EXPECT_EQ(full.h, x_rn_minus_x(t, 1, 2));
  const LGenCheck zero = generator_check_lpoly(t, LinearCode::zero(2), 1);
  EXPECT_EQ(zero.g, x_rn_minus_x(t, 1, 2));
  EXPECT_EQ(zero.h, LPoly::identity(1));
  // W = GF(2): annihilator x^[1] + x.
  const LPoly g = annihilator(t, span_of(t, 1, 2, {t.one()}));
  EXPECT_EQ(g, LPoly(1, {t.one(), t.one()}));
  const LinearCode c = code_from_glpoly(t, g, 2);
  EXPECT_EQ(generator_check_lpoly(t, c, 1).g, g);
  EXPECT_THROW(code_from_glpoly(t, LPoly(1, {alpha(t), t.zero(), t.one()}), 2), Error);
}

TEST(CodeTest, IdempotentAndComplement) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const Element a = alpha(t), a2 = t.mul(a, a);
  EXPECT_EQ(idempotent_generator(t, LinearCode::full(t, 3)), CPoly::constant(t.one()));
  EXPECT_TRUE(idempotent_generator(t, LinearCode::zero(3)).is_zero());
  EXPECT_EQ(cyclic_complement(t, LinearCode::full(t, 3)), LinearCode::zero(3));
  const LinearCode c = code_from_gpoly(t, CPoly({a, t.one()}), 3);
  const CPoly e = idempotent_generator(t, c);
  EXPECT_EQ(code_from_ideal_element(t, e, 3), c);
  const LinearCode cc = cyclic_complement(t, c);
  EXPECT_EQ(cc, code_from_gpoly(t, CPoly({a2, a, t.one()}), 3));
  EXPECT_EQ(add(t, e, idempotent_generator(t, cc)), CPoly::constant(t.one()));
  EXPECT_EQ(intersect(t, c, cc).k(), 0u);
  EXPECT_EQ(sum(t, c, cc), LinearCode::full(t, 3));
  const FieldTower t4 = FieldTower::make(2, 1, 2, 0, 4);
  EXPECT_THROW(idempotent_generator(t4, code_from_gpoly(t4, CPoly({t4.one(), t4.one()}), 4)), Error);
}

TEST(CodeTest, ComplementRankEquivalentToDual) {
  for (const Grid& g : kCyclicGrid) {
    const FieldTower t = FieldTower::make(g.p, 1, g.m, 0, g.n);
    for (const LinearCode& c : all_cyclic(t, g.n)) {
      const GenCheck gh = generator_check_poly(t, c);
      if (gcd(t, gh.g, gh.h).degree() != 0) continue;
      const LinearCode cc = cyclic_complement(t, c);
      EXPECT_EQ(rank_weight_distribution(t, cc), rank_weight_distribution(t, dual(t, c)));
      const CPoly e = idempotent_generator(t, c);
      const CPoly xn = xn_minus_1(t, g.n);
      EXPECT_EQ(mod(t, add(t, e, idempotent_generator(t, cc)), xn), CPoly::constant(t.one()));
    }
  }
}

TEST(CodeTest, Constructors) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  EXPECT_EQ(code_from_gpoly(t, CPoly::constant(t.one()), 3), LinearCode::full(t, 3));
  EXPECT_EQ(code_from_root_exponents(t, RootSet{3, {}, 0}), LinearCode::full(t, 3));
  EXPECT_EQ(code_from_root_exponents(t, RootSet{3, {0, 1, 2}, 0}), LinearCode::zero(3));
  EXPECT_THROW(code_from_gpoly(t, CPoly({t.one(), t.zero(), t.one()}), 3), Error);
  const FieldTower t5 = FieldTower::make(2, 1, 2, 0, 5);
  EXPECT_THROW(code_from_root_exponents(t5, RootSet{5, {1}, 0}), Error);  // 4 is missing
  for (const Grid& g : kCyclicGrid) {
    const FieldTower tw = FieldTower::make(g.p, 1, g.m, 0, g.n);
    const CPoly xn = xn_minus_1(tw, g.n);
    for (const CPoly& d : all_divisors(tw, factor_xn_minus_1(tw, g.n))) {
      const GenCheck gh = generator_check_poly(tw, code_from_gpoly(tw, d, g.n));
      EXPECT_EQ(gh.g, d);
      EXPECT_EQ(gh.h, divmod(tw, xn, d).first);
      if (gcd_u64(tw.q(), g.n) == 1) {
        EXPECT_EQ(code_from_root_exponents(tw, root_set(tw, d, g.n)), code_from_gpoly(tw, d, g.n));
      }
    }
  }
}

TEST(CodeTest, MinRankDistance) {
  const FieldTower t = FieldTower::make(2, 1, 2, 0, 3);
  const LinearCode rep = LinearCode::span(t, rows_of({{t.one(), t.one(), t.one()}}, 3));
  EXPECT_EQ(min_rank_distance(t, rep), 1u);
  EXPECT_EQ(min_rank_distance(t, LinearCode::full(t, 3)), 1u);
  EXPECT_EQ(min_rank_distance(t, LinearCode::zero(3)), std::nullopt);
  EXPECT_THROW(min_rank_distance(t, LinearCode::full(t, 3), 10), Error);
  uint64_t total = 0;
  for (const auto& [w, count] : rank_weight_distribution(t, LinearCode::full(t, 3))) total += count;
  EXPECT_EQ(total, 64u);
  for (const Grid& g : kCyclicGrid) {
    const FieldTower tw = FieldTower::make(g.p, 1, g.m, 0, g.n);
    for (const LinearCode& c : all_cyclic(tw, g.n)) {
      if (c.k() == 0 || codeword_count(tw, c) > (1u << 16)) continue;
      EXPECT_LE(*min_rank_distance(tw, c), c.n() - c.k() + 1);
    }
  }
}

// Galois closed <=> g rational <=> h rational <=> e rational <=> q*Z(g) = Z(g).
TEST(CodeTest, PolynomialCharacterizationsOfGaloisClosedness) {
  for (const Grid& g : kCyclicGrid) {
    const FieldTower t = FieldTower::make(g.p, 1, g.m, 0, g.n);
    for (const LinearCode& c : all_cyclic(t, g.n)) {
      const bool closed = is_galois_closed(t, c);
      const GenCheck gh = generator_check_poly(t, c);
      EXPECT_EQ(coefficients_in(t, gh.g, 1), closed);
      EXPECT_EQ(coefficients_in(t, gh.h, 1), closed);
      if (gcd(t, gh.g, gh.h).degree() == 0) {
        EXPECT_EQ(coefficients_in(t, idempotent_generator(t, c), 1), closed);
        EXPECT_EQ(is_galois_closed(t, cyclic_complement(t, c)), closed);
      }
      if (gcd_u64(t.q(), g.n) == 1) {
        const auto z = root_set(t, gh.g, g.n).exponents;
        bool stable = true;
        for (uint64_t s : z) stable = stable && std::count(z.begin(), z.end(), s * t.q() % g.n);
        EXPECT_EQ(stable, closed);
      }
    }
  }
}

}  // namespace
}  // namespace rankcodes
