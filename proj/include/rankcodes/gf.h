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

// Finite field tower GF(p) <= GF(q) <= GF(q^m) <= GF(q^{rn}) <= GF(p^N).
//
// Every subfield lives inside one ambient field GF(p^N). An element is the
// coefficient vector of its residue modulo the ambient modulus, packed into
// an integer in base p (constant coefficient least significant). Subfield
// membership is decided by the Frobenius fixed-point test.

#ifndef RANKCODES_GF_H_
#define RANKCODES_GF_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rankcodes {

struct Element {
  uint32_t value = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

struct TowerOptions {
  // Largest admissible ambient field size p^N.
  uint64_t ambient_cap = uint64_t{1} << 24;
  // Also embed GF(q^{mn}) when it fits, so cyclic codes can be studied
  // through their q^m-linearized description with root spaces.
  bool linearized_cyclic_view = true;
  // Explicit ambient modulus (constant term first). Must be irreducible of
  // the computed degree N.
  std::optional<std::vector<uint32_t>> modulus;
};

class FieldTower {
 public:
  // q = p^e. r = 0 requests a purely cyclic tower.
  static FieldTower make(uint32_t p, uint32_t e, uint32_t m, uint32_t r,
                         uint32_t n, const TowerOptions& options = {});

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t m() const { return m_; }
  uint32_t r() const { return r_; }
  uint32_t n() const { return n_; }
  // Ambient degree over GF(p).
  uint32_t N() const { return N_; }
  uint64_t q() const { return q_; }
  // p^N.
  uint64_t order() const { return order_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  Element generator() const { return generator_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  // Image of an integer in GF(p).
  Element from_int(int64_t v) const;
  Element from_coeffs(std::span<const uint32_t> coeffs) const;
  std::vector<uint32_t> coeffs(Element x) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const;
  Element pow(Element a, uint64_t k) const;
  // x^{q^s}; s may be negative.
  Element frobenius(Element x, int64_t s) const;
  // Discrete logarithm to the base generator(); x must be nonzero.
  uint64_t log(Element x) const;
  Element exp(uint64_t k) const;

  // GF(q^d) embeds iff e*d divides N.
  bool has_subfield(uint32_t d) const;
  // x^{q^d} == x. Throws UndeclaredSubfield.
  bool in_subfield(Element x, uint32_t d) const;
  uint64_t subfield_order(uint32_t d) const;
  Element subfield_primitive(uint32_t d) const;
  // 0 followed by the powers 1, a, a^2, ... of subfield_primitive(d).
  std::vector<Element> subfield_elements(uint32_t d) const;
  // Primitive k-th root of unity; k must divide p^N - 1.
  Element root_of_unity(uint64_t k) const;

  // Least beta in the enumeration of GF(q^m)^* with beta^{q^r} = b*beta.
  std::optional<Element> solve_beta(Element b, int64_t r) const;

  // "0", integers for GF(p), "a^i" inside GF(q^m), "g^i" otherwise.
  std::string format(Element x) const;

 private:
  struct Tables;

  FieldTower() = default;
  Element mul_slow(Element a, Element b) const;
  Element pow_slow(Element a, uint64_t k) const;
  uint64_t q_power_mod(int64_t s, uint64_t mod) const;

  uint32_t p_ = 2, e_ = 1, m_ = 1, r_ = 0, n_ = 1, N_ = 1;
  uint64_t q_ = 2, order_ = 2;
  std::vector<uint32_t> modulus_;
  Element generator_{1};
  std::shared_ptr<const Tables> tables_;
};

// Coordinates of GF(q^big) over GF(q^small) in the basis 1, xi, ..., xi^{t-1},
// xi = subfield_primitive(big). Solves the conjugate Vandermonde system.
class SubfieldCoordinates {
 public:
  SubfieldCoordinates(const FieldTower& tower, uint32_t big, uint32_t small);

  uint32_t dimension() const { return t_; }
  const std::vector<Element>& basis() const { return basis_; }
  // Entries lie in GF(q^small).
  std::vector<Element> expand(Element x) const;
  Element combine(std::span<const Element> coords) const;

 private:
  const FieldTower* tower_;
  uint32_t small_ = 1;
  uint32_t t_ = 1;
  std::vector<Element> basis_;
  std::vector<Element> inverse_;  // t x t, row-major
};

// Integer helpers shared by the tower and the polynomial code.
uint64_t ipow(uint64_t base, uint32_t exp);
bool is_prime(uint64_t v);
std::vector<uint64_t> prime_factors(uint64_t v);
uint64_t multiplicative_order_mod(uint64_t base, uint64_t modulus);
uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);

}  // namespace rankcodes

#endif  // RANKCODES_GF_H_
