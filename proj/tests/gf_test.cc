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


#include "rankcodes/gf.h"

#include <gtest/gtest.h>

#include <random>

#include "rankcodes/error.h"
#include "rankcodes/linalg.h"
#include "test_util.h"

namespace rankcodes {
namespace {

using testing::alpha;
using testing::random_ambient;

TEST(TowerTest, SmallestSkewTower) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  EXPECT_EQ(t.q(), 2u);
  EXPECT_EQ(t.N(), 4u);
  EXPECT_EQ(t.order(), 16u);
  EXPECT_EQ(t.modulus(), (std::vector<uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_TRUE(t.has_subfield(2));
}

TEST(TowerTest, CyclicAndOddCharacteristic) {
  const FieldTower c = FieldTower::make(2, 1, 2, 0, 3);
  EXPECT_EQ(c.N() % 2, 0u);
  EXPECT_EQ((c.order() - 1) % 3, 0u);
  const FieldTower t = FieldTower::make(3, 1, 2, 1, 4);
  EXPECT_EQ(t.q(), 3u);
  EXPECT_TRUE(t.has_subfield(2));
  EXPECT_TRUE(t.has_subfield(4));
}

TEST(TowerTest, Errors) {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParseError;
  };
  EXPECT_EQ(kind_of([] { FieldTower::make(4, 1, 2, 0, 3); }), ErrorKind::kNonPrimeCharacteristic);
  EXPECT_EQ(kind_of([] { FieldTower::make(2, 1, 2, 1, 3); }),
            ErrorKind::kSkewDivisibilityViolated);
  TowerOptions tiny;
  tiny.ambient_cap = 2;
  EXPECT_EQ(kind_of([&] { FieldTower::make(2, 1, 2, 1, 2, tiny); }), ErrorKind::kAmbientTooLarge);
}

TEST(TowerTest, ModulusIsIrreducibleAndGeneratorPrimitive) {
  for (auto [p, e, m, r, n] : std::vector<std::array<uint32_t, 5>>{
           {2, 1, 2, 1, 2}, {2, 1, 3, 0, 7}, {3, 1, 2, 1, 4}, {2, 2, 2, 1, 2}, {5, 1, 1, 0, 4}}) {
    const FieldTower t = FieldTower::make(p, e, m, r, n);
    ASSERT_EQ(t.modulus().size(), t.N() + 1);
    EXPECT_EQ(t.modulus().back(), 1u);
    // generator order is p^N - 1.
    const uint64_t ord = t.order() - 1;
    for (uint64_t f : prime_factors(ord)) EXPECT_NE(t.pow(t.generator(), ord / f), t.one());
    EXPECT_EQ(t.pow(t.generator(), ord), t.one());
    // A reducible modulus would give zero divisors.
    for (uint64_t v = 1; v < std::min<uint64_t>(t.order(), 300); ++v) {
      EXPECT_NE(t.mul(Element{static_cast<uint32_t>(v)}, t.inv(Element{static_cast<uint32_t>(v)})),
                t.zero());
    }
  }
}

TEST(FieldTest, InverseAndAutomorphism) {
  const FieldTower t = FieldTower::make(3, 1, 2, 1, 4);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Element x = random_ambient(t, rng), y = random_ambient(t, rng);
    if (x != t.zero()) {
      EXPECT_EQ(t.mul(x, t.inv(x)), t.one());
      EXPECT_EQ(t.inv(t.inv(x)), x);
    }
    for (int64_t s : {1, 2, 3, -1}) {
      EXPECT_EQ(t.frobenius(t.add(x, y), s), t.add(t.frobenius(x, s), t.frobenius(y, s)));
      EXPECT_EQ(t.frobenius(t.mul(x, y), s), t.mul(t.frobenius(x, s), t.frobenius(y, s)));
    }
  }
}

TEST(FieldTest, FrobeniusLaws) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 4);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const Element x = random_ambient(t, rng);
    EXPECT_EQ(t.frobenius(x, 0), x);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) EXPECT_EQ(t.frobenius(t.frobenius(x, a), b), t.frobenius(x, a + b));
    }
  }
  for (uint64_t v = 0; v < t.order(); ++v) {
    const Element x{static_cast<uint32_t>(v)};
    EXPECT_EQ(t.frobenius(x, t.N() / t.e()), x);
  }
  for (Element x : t.subfield_elements(1)) EXPECT_EQ(t.frobenius(x, 3), x);
}

TEST(FieldTest, SubfieldMembership) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  int count = 0;
  for (uint64_t v = 0; v < t.order(); ++v) count += t.in_subfield(Element{static_cast<uint32_t>(v)}, 2);
  EXPECT_EQ(count, 4);
  for (uint32_t d : {1u, 2u, 4u}) {
    EXPECT_TRUE(t.in_subfield(t.zero(), d));
    EXPECT_TRUE(t.in_subfield(t.one(), d));
  }
  EXPECT_FALSE(t.in_subfield(alpha(t), 1));
  EXPECT_THROW(t.in_subfield(t.one(), 3), Error);
}

TEST(FieldTest, SolveBeta) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  ASSERT_TRUE(t.solve_beta(t.one(), 1).has_value());
  EXPECT_EQ(*t.solve_beta(t.one(), 1), t.one());
  int solutions = 0;
  for (Element b : t.subfield_elements(2)) {
    if (b != t.zero() && t.frobenius(b, 1) == b) ++solutions;
  }
  EXPECT_EQ(solutions, 1);
  EXPECT_THROW(t.solve_beta(t.zero(), 1), Error);

  const FieldTower t3 = FieldTower::make(3, 1, 2, 1, 4);
  const auto beta = t3.solve_beta(t3.from_int(2), 1);
  ASSERT_TRUE(beta.has_value());
  EXPECT_EQ(t3.frobenius(*beta, 1), t3.mul(t3.from_int(2), *beta));
}

TEST(FieldTest, SolveBetaMatchesScan) {
  for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 2}, {5, 2}, {2, 3}, {3, 3}}) {
    const FieldTower t = FieldTower::make(p, 1, m, 0, 1);
    for (Element b : t.subfield_elements(1)) {
      if (b == t.zero()) continue;
      for (int64_t r = 0; r < m; ++r) {
        bool found = false;
        for (Element x : t.subfield_elements(m)) {
          if (x != t.zero() && t.frobenius(x, r) == t.mul(b, x)) found = true;
        }
        const auto beta = t.solve_beta(b, r);
        EXPECT_EQ(beta.has_value(), found);
        if (beta) EXPECT_EQ(t.frobenius(*beta, r), t.mul(b, *beta));
      }
    }
  }
}

TEST(FieldTest, SubfieldCoordinatesRoundTrip) {
  const FieldTower t = FieldTower::make(2, 1, 2, 2, 3);
  const SubfieldCoordinates sc(t, 6, 2);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Element x = testing::random_in(t, 6, rng);
    const auto c = sc.expand(x);
    for (Element y : c) EXPECT_TRUE(t.in_subfield(y, 2));
    EXPECT_EQ(sc.combine(c), x);
  }
}

TEST(LinalgTest, KernelOverSubfield) {
  const FieldTower t = FieldTower::make(2, 1, 2, 1, 2);
  Matrix id(3, 3);
  for (int i = 0; i < 3; ++i) id(i, i) = t.one();
  EXPECT_EQ(kernel_over_subfield(t, id, 1).rows(), 0u);
  EXPECT_EQ(kernel_over_subfield(t, Matrix(3, 3), 2).rows(), 3u);

  const Element a = alpha(t);
  Matrix m(2, 2);
  m(0, 0) = t.one();
  m(0, 1) = a;
  m(1, 0) = a;
  m(1, 1) = t.mul(a, a);
  const Matrix ker = kernel_over_subfield(t, m, 1, 2);
  EXPECT_EQ(ker.rows(), 2u);
  // Brute force: |kernel in GF(4)^2| = 2^dim.
  int count = 0;
  for (Element x : t.subfield_elements(2)) {
    for (Element y : t.subfield_elements(2)) {
      if (t.add(t.mul(m(0, 0), x), t.mul(m(0, 1), y)) == t.zero() &&
          t.add(t.mul(m(1, 0), x), t.mul(m(1, 1), y)) == t.zero()) {
        ++count;
      }
    }
  }
  EXPECT_EQ(count, 4);
  EXPECT_EQ(rank(t, ker), 1u);  // GF(2)-independent but GF(4)-dependent
}

TEST(LinalgTest, SumIntersectionDimensions) {
  const FieldTower t = FieldTower::make(3, 1, 2, 1, 4);
  std::mt19937_64 rng(4);
  for (int it = 0; it < 30; ++it) {
    Matrix a(2, 4), b(3, 4);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 4; ++j) a(i, j) = testing::random_in(t, 2, rng);
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 4; ++j) b(i, j) = testing::random_in(t, 2, rng);
    EXPECT_EQ(span_sum(t, a, b).rows() + span_intersection(t, a, b).rows(),
              rank(t, a) + rank(t, b));
  }
}

}  // namespace
}  // namespace rankcodes
