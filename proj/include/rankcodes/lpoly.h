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


// q^r-linearized polynomials F_0 x + F_1 x^[r] + ... + F_d x^[dr] over
// GF(q^m) with composition as product, plus root spaces in GF(q^{rn}).

#ifndef RANKCODES_LPOLY_H_
#define RANKCODES_LPOLY_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rankcodes/cpoly.h"
#include "rankcodes/gf.h"
#include "rankcodes/linalg.h"

namespace rankcodes {

class LPoly {
 public:
  LPoly() = default;
  LPoly(uint32_t r, std::vector<Element> coeffs);
  // x, the identity map.
  static LPoly identity(uint32_t r);
  // c x^[ri].
  static LPoly monomial(uint32_t r, Element c, size_t i);

  uint32_t r() const { return r_; }
  // deg_{q^r}; -1 for zero.
  int qdegree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }
  Element coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
  Element lead() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }

  friend bool operator==(const LPoly&, const LPoly&) = default;

 private:
  uint32_t r_ = 1;
  std::vector<Element> coeffs_;
};

// x^[rn] - x.
LPoly x_rn_minus_x(const FieldTower& t, uint32_t r, uint32_t n);

LPoly add(const FieldTower& t, const LPoly& f, const LPoly& g);
LPoly sub(const FieldTower& t, const LPoly& f, const LPoly& g);
// (c x) (x) F.
LPoly scale(const FieldTower& t, const LPoly& f, Element c);
LPoly monic(const FieldTower& t, const LPoly& f);
// (F (x) G)_k = sum_{i+j=k} F_i G_j^[ri]. With reduce_n > 0 the result is
// reduced modulo x^[r reduce_n] - x.
LPoly symbolic_product(const FieldTower& t, const LPoly& f, const LPoly& g,
                       uint32_t reduce_n = 0);
// Canonical representative of qdeg < n modulo x^[rn] - x (needs m | rn).
LPoly reduce(const FieldTower& t, const LPoly& f, uint32_t n);
Element eval(const FieldTower& t, const LPoly& f, Element v);

// F = Q (x) G + R.
std::pair<LPoly, LPoly> right_divmod(const FieldTower& t, const LPoly& f, const LPoly& g);
bool right_divides(const FieldTower& t, const LPoly& d, const LPoly& f);
// f = g (x) q + rem with qdeg rem < qdeg g.
std::pair<LPoly, LPoly> left_divmod(const FieldTower& t, const LPoly& f, const LPoly& g);
bool left_divides(const FieldTower& t, const LPoly& d, const LPoly& f);
LPoly rgcd(const FieldTower& t, const LPoly& f, const LPoly& g);
// Least common left multiple: monic M = A (x) F = B (x) G of least degree.
LPoly llcm(const FieldTower& t, const LPoly& f, const LPoly& g);
std::pair<LPoly, LPoly> rgcd_llcm(const FieldTower& t, const LPoly& f, const LPoly& g);

LPoly apply_frobenius(const FieldTower& t, const LPoly& f, int64_t s);
bool coefficients_in(const FieldTower& t, const LPoly& f, uint32_t d);
LPoly perp(const FieldTower& t, const LPoly& f);
LPoly top(const FieldTower& t, const LPoly& f, uint32_t n);

struct LClosures {
  LPoly star;        // F*
  LPoly zero;        // F^0
  LPoly lower_star;  // F_*
  LPoly lower_zero;  // F_0
};
LClosures conjugate_closures_l(const FieldTower& t, const LPoly& f, uint32_t n);
// (F*, F^0) only; no lowest-coefficient requirement.
std::pair<LPoly, LPoly> star_zero_l(const FieldTower& t, const LPoly& f);

// L(f_0 + f_1 x + ...) = f_0 x + f_1 x^[r] + ...
LPoly lift_L(const CPoly& f, uint32_t r);
// Inverse of lift_L on coefficient lists.
CPoly unlift_L(const LPoly& f);

// Coefficients in GF(q^gcd(m,r)) at indices divisible by lcm(m,r)/r.
bool is_central(const FieldTower& t, const LPoly& f);

// A GF(q^r)-subspace of GF(q^{rn}). coords holds a reduced basis as
// coordinate rows over GF(q^r) in the basis of SubfieldCoordinates(rn, r).
struct RootSpace {
  uint32_t r = 1;
  uint32_t n = 1;
  Matrix coords;
  std::vector<Element> basis;

  size_t dim() const { return basis.size(); }
};

// Whether GF(q^{rn}) embeds in the ambient field.
bool root_spaces_available(const FieldTower& t, uint32_t r, uint32_t n);
RootSpace root_space(const FieldTower& t, const LPoly& f, uint32_t n);
RootSpace span_of(const FieldTower& t, uint32_t r, uint32_t n, const std::vector<Element>& vs);
// { z^{q^s} : z in Z }.
RootSpace frobenius_image(const FieldTower& t, const RootSpace& z, int64_t s);
RootSpace intersect(const FieldTower& t, const RootSpace& a, const RootSpace& b);
RootSpace sum(const FieldTower& t, const RootSpace& a, const RootSpace& b);
bool same_space(const RootSpace& a, const RootSpace& b);
// Monic annihilator of a subspace, by iterated elementary factors
// x^[r] - w^{q^r - 1} x.
LPoly annihilator(const FieldTower& t, const RootSpace& w);

// A right divisor of x^[rn] - x: the annihilator of the GF(q^r)-span of the
// q^m-Frobenius orbits of `count` random elements of GF(q^{rn}).
LPoly sample_right_divisor(const FieldTower& t, uint32_t r, uint32_t n, size_t count,
                           std::mt19937_64& rng);

}  // namespace rankcodes

#endif  // RANKCODES_LPOLY_H_
