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

// Conventional polynomials over GF(q^m): Euclidean arithmetic, Frobenius
// conjugation, the star/zero closures f* = gcd of conjugates and
// f0 = lcm of conjugates, reciprocal duals, a-orders, root sets and the
// factorization of x^n - 1.

#ifndef RANKCODES_CPOLY_H_
#define RANKCODES_CPOLY_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankcodes/gf.h"

namespace rankcodes {

class CPoly {
 public:
  // deg(0).
  static constexpr int kZeroDegree = -1;

  CPoly() = default;
  explicit CPoly(std::vector<Element> coeffs);
  static CPoly constant(Element c) { return CPoly({c}); }
  static CPoly monomial(Element c, size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Constant term first, no trailing zeros.
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element lead() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  friend bool operator==(const CPoly&, const CPoly&) = default;

 private:
  std::vector<Element> coeffs_;
};

// Exponents s of zeta^s, zeta = root_of_unity(n), that are roots.
struct RootSet {
  uint64_t n = 0;
  std::vector<uint64_t> exponents;  // sorted
  uint32_t zeta_degree = 0;         // [GF(q)(zeta) : GF(q)]

  friend bool operator==(const RootSet&, const RootSet&) = default;
};

struct Factor {
  CPoly poly;
  uint32_t multiplicity = 1;
};

struct Bezout {
  CPoly gcd;  // monic
  CPoly a;    // a*f + b*g = gcd
  CPoly b;
};

// x^k - c.
CPoly binomial(const FieldTower& t, size_t k, Element c);
CPoly xn_minus_1(const FieldTower& t, size_t n);

CPoly add(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly sub(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly mul(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly scale(const FieldTower& t, const CPoly& f, Element c);
// f(c x).
CPoly scale_variable(const FieldTower& t, const CPoly& f, Element c);
Element eval(const FieldTower& t, const CPoly& f, Element x);

std::pair<CPoly, CPoly> divmod(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly mod(const FieldTower& t, const CPoly& f, const CPoly& g);
bool divides(const FieldTower& t, const CPoly& d, const CPoly& f);
CPoly monic(const FieldTower& t, const CPoly& f);
// (gcd, lcm), both monic; lcm with a zero argument is zero.
std::pair<CPoly, CPoly> gcd_lcm(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly gcd(const FieldTower& t, const CPoly& f, const CPoly& g);
CPoly lcm(const FieldTower& t, const CPoly& f, const CPoly& g);
Bezout extended_gcd(const FieldTower& t, const CPoly& f, const CPoly& g);
// x^k mod f.
CPoly x_pow_mod(const FieldTower& t, uint64_t k, const CPoly& f);

// Coefficient-wise x -> x^{q^s}.
CPoly apply_frobenius(const FieldTower& t, const CPoly& f, int64_t s);
bool coefficients_in(const FieldTower& t, const CPoly& f, uint32_t d);
// (f*, f0) over the conjugates f, theta_1(f), ..., theta_{m-1}(f).
std::pair<CPoly, CPoly> conjugate_closures(const FieldTower& t, const CPoly& f);
// x^{deg f} f(1/x) / f(0).
CPoly reciprocal_dual(const FieldTower& t, const CPoly& f);

// Least e >= 1 with f | x^e - a^e; nullopt means infinity.
std::optional<uint64_t> order_a(const FieldTower& t, const CPoly& f, Element a,
                                uint64_t search_cap = 1u << 20);

RootSet root_set(const FieldTower& t, const CPoly& f, uint64_t n);
CPoly from_root_set(const FieldTower& t, const RootSet& s);
// mu_q(g) = product of the GF(q)-minimal polynomials of the roots of g, and
// eta = deg mu_q(g). Computed as g0 and through minimal polynomials; the two
// must agree.
std::pair<CPoly, uint64_t> mu_eta(const FieldTower& t, const CPoly& g, uint64_t n);

// Orbits of Z_n under multiplication by mult, each sorted, ordered by least
// element.
std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t n, uint64_t mult);
// Irreducible factors of x^n - 1 over GF(q^d) (d = m by default) with
// multiplicities.
std::vector<Factor> factor_xn_minus_1(const FieldTower& t, uint64_t n, uint32_t d = 0);
// All monic divisors from a factorization, in mixed-radix order.
std::vector<CPoly> all_divisors(const FieldTower& t, const std::vector<Factor>& factors,
                                size_t cap = 1u << 16);

}  // namespace rankcodes

#endif  // RANKCODES_CPOLY_H_
