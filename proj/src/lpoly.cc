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


#include "rankcodes/lpoly.h"

#include <algorithm>
#include <numeric>

#include "rankcodes/error.h"

namespace rankcodes {

LPoly::LPoly(uint32_t r, std::vector<Element> coeffs) : r_(r), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Element{}) coeffs_.pop_back();
}

LPoly LPoly::identity(uint32_t r) { return LPoly(r, {Element{1}}); }

LPoly LPoly::monomial(uint32_t r, Element c, size_t i) {
  std::vector<Element> v(i + 1);
  v[i] = c;
  return LPoly(r, std::move(v));
}

namespace {

void same_order(const LPoly& f, const LPoly& g) {
  if (f.r() != g.r()) throw Error(ErrorKind::kMixedSkewOrder, "q^r-polynomials of different r");
}

// Frobenius by q^{r i}.
Element frob_ri(const FieldTower& t, Element x, uint32_t r, size_t i) {
  return t.frobenius(x, static_cast<int64_t>(r) * static_cast<int64_t>(i));
}

}  // namespace

LPoly x_rn_minus_x(const FieldTower& t, uint32_t r, uint32_t n) {
  std::vector<Element> v(n + 1, t.zero());
  v[n] = t.one();
  v[0] = t.sub(v[0], t.one());
  return LPoly(r, std::move(v));
}

LPoly add(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  std::vector<Element> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = t.add(f.coeff(i), g.coeff(i));
  return LPoly(f.r(), std::move(v));
}

LPoly sub(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  std::vector<Element> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = t.sub(f.coeff(i), g.coeff(i));
  return LPoly(f.r(), std::move(v));
}

LPoly scale(const FieldTower& t, const LPoly& f, Element c) {
  std::vector<Element> v = f.coeffs();
  for (Element& x : v) x = t.mul(x, c);
  return LPoly(f.r(), std::move(v));
}

LPoly monic(const FieldTower& t, const LPoly& f) {
  if (f.is_zero()) return f;
  return scale(t, f, t.inv(f.lead()));
}

LPoly reduce(const FieldTower& t, const LPoly& f, uint32_t n) {
  if ((static_cast<uint64_t>(f.r()) * n) % t.m() != 0) {
    throw Error(ErrorKind::kSkewDivisibilityViolated, "x^[rn] - x is central only when m | rn");
  }
  if (f.qdegree() < static_cast<int>(n)) return f;
  std::vector<Element> v(n, t.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) v[i % n] = t.add(v[i % n], f.coeffs()[i]);
  return LPoly(f.r(), std::move(v));
}

LPoly symbolic_product(const FieldTower& t, const LPoly& f, const LPoly& g, uint32_t reduce_n) {
  same_order(f, g);
  if (f.is_zero() || g.is_zero()) return LPoly(f.r(), {});
  const uint32_t r = f.r();
  std::vector<Element> v(f.coeffs().size() + g.coeffs().size() - 1, t.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element fi = f.coeffs()[i];
    if (fi == t.zero()) continue;
    for (size_t j = 0; j < g.coeffs().size(); ++j) {
      v[i + j] = t.add(v[i + j], t.mul(fi, frob_ri(t, g.coeffs()[j], r, i)));
    }
  }
  LPoly out(r, std::move(v));
  return reduce_n > 0 ? reduce(t, out, reduce_n) : out;
}

Element eval(const FieldTower& t, const LPoly& f, Element v) {
  Element acc = t.zero();
  Element pw = v;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    acc = t.add(acc, t.mul(f.coeffs()[i], pw));
    pw = t.frobenius(pw, f.r());
  }
  return acc;
}

std::pair<LPoly, LPoly> right_divmod(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  if (g.is_zero()) throw Error(ErrorKind::kDivisionByZeroPoly, "right division by zero");
  const uint32_t r = f.r();
  const int dg = g.qdegree();
  std::vector<Element> rem = f.coeffs();
  if (f.qdegree() < dg) return {LPoly(r, {}), f};
  std::vector<Element> quo(f.qdegree() - dg + 1, t.zero());
  for (int k = f.qdegree(); k >= dg; --k) {
    if (rem[k] == t.zero()) continue;
    const size_t d = k - dg;
    const Element c = t.div(rem[k], frob_ri(t, g.lead(), r, d));
    quo[d] = c;
    for (int j = 0; j <= dg; ++j) {
      rem[d + j] = t.sub(rem[d + j], t.mul(c, frob_ri(t, g.coeffs()[j], r, d)));
    }
  }
  rem.resize(dg);
  return {LPoly(r, std::move(quo)), LPoly(r, std::move(rem))};
}

std::pair<LPoly, LPoly> left_divmod(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  if (g.is_zero()) throw Error(ErrorKind::kDivisionByZeroPoly, "left division by zero");
  const uint32_t r = f.r();
  const int dg = g.qdegree();
  std::vector<Element> rem = f.coeffs();
  if (f.qdegree() < dg) return {LPoly(r, {}), f};
  std::vector<Element> quo(f.qdegree() - dg + 1, t.zero());
  const int64_t back = -static_cast<int64_t>(r) * dg;
  for (int k = f.qdegree(); k >= dg; --k) {
    if (rem[k] == t.zero()) continue;
    const size_t d = k - dg;
    // (g (x) c x^[rd])_{i+d} = g_i c^[ri].
    const Element c = t.frobenius(t.div(rem[k], g.lead()), back);
    quo[d] = c;
    for (int i = 0; i <= dg; ++i) {
      rem[i + d] = t.sub(rem[i + d], t.mul(g.coeffs()[i], frob_ri(t, c, r, i)));
    }
  }
  rem.resize(dg);
  return {LPoly(r, std::move(quo)), LPoly(r, std::move(rem))};
}

bool left_divides(const FieldTower& t, const LPoly& d, const LPoly& f) {
  if (d.is_zero()) return f.is_zero();
  return left_divmod(t, f, d).second.is_zero();
}

bool right_divides(const FieldTower& t, const LPoly& d, const LPoly& f) {
  if (d.is_zero()) return f.is_zero();
  return right_divmod(t, f, d).second.is_zero();
}

LPoly rgcd(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::kBothZero, "rgcd(0, 0)");
  LPoly a = f, b = g;
  while (!b.is_zero()) {
    LPoly rem = right_divmod(t, a, b).second;
    a = std::move(b);
    b = std::move(rem);
  }
  return monic(t, a);
}

LPoly llcm(const FieldTower& t, const LPoly& f, const LPoly& g) {
  same_order(f, g);
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::kBothZero, "llcm(0, 0)");
  if (f.is_zero() || g.is_zero()) return LPoly(f.r(), {});
  const uint32_t r = f.r();
  const int a = f.qdegree(), b = g.qdegree();
  int target = a + b - rgcd(t, f, g).qdegree();
  for (;; ++target) {
    const size_t na = target - a + 1, nb = target - b + 1;
    Matrix sys(target + 1, na + nb);
    // Column i of A contributes F_{k-i}^[ri] to row k; B likewise with a sign.
    for (size_t i = 0; i < na; ++i) {
      for (int j = 0; j <= a; ++j) sys(i + j, i) = frob_ri(t, f.coeffs()[j], r, i);
    }
    for (size_t i = 0; i < nb; ++i) {
      for (int j = 0; j <= b; ++j) sys(i + j, na + i) = t.neg(frob_ri(t, g.coeffs()[j], r, i));
    }
    const Matrix ker = right_kernel(t, sys);
    for (size_t row = 0; row < ker.rows(); ++row) {
      std::vector<Element> left(ker.row(row).begin(), ker.row(row).begin() + na);
      LPoly coef(r, std::move(left));
      if (coef.is_zero()) continue;
      LPoly m = monic(t, symbolic_product(t, coef, f));
      if (!right_divides(t, f, m) || !right_divides(t, g, m)) {
        throw Error(ErrorKind::kVerificationFailed, "llcm candidate is not a common multiple");
      }
      return m;
    }
  }
}

std::pair<LPoly, LPoly> rgcd_llcm(const FieldTower& t, const LPoly& f, const LPoly& g) {
  return {rgcd(t, f, g), llcm(t, f, g)};
}

LPoly apply_frobenius(const FieldTower& t, const LPoly& f, int64_t s) {
  std::vector<Element> v = f.coeffs();
  for (Element& x : v) x = t.frobenius(x, s);
  return LPoly(f.r(), std::move(v));
}

bool coefficients_in(const FieldTower& t, const LPoly& f, uint32_t d) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [&](Element x) { return t.in_subfield(x, d); });
}

namespace {

void require_lowest(const FieldTower& t, const LPoly& f) {
  if (f.is_zero() || f.coeff(0) == t.zero()) {
    throw Error(ErrorKind::kZeroLowestCoefficient, "dual requires F_0 != 0");
  }
}

}  // namespace

LPoly perp(const FieldTower& t, const LPoly& f) {
  require_lowest(t, f);
  const uint32_t r = f.r();
  const size_t d = f.qdegree();
  const Element denom = t.inv(frob_ri(t, f.coeff(0), r, d));
  std::vector<Element> v(d + 1);
  for (size_t j = 0; j <= d; ++j) v[j] = t.mul(frob_ri(t, f.coeff(d - j), r, j), denom);
  return LPoly(r, std::move(v));
}

LPoly top(const FieldTower& t, const LPoly& f, uint32_t n) {
  require_lowest(t, f);
  const uint32_t r = f.r();
  const size_t d = f.qdegree();
  const Element inv0 = t.inv(f.coeff(0));
  std::vector<Element> v(d + 1);
  for (size_t j = 0; j <= d; ++j) {
    const int64_t shift = static_cast<int64_t>(r) * (static_cast<int64_t>(n) - d + j);
    v[j] = t.frobenius(t.mul(f.coeff(d - j), inv0), shift);
  }
  return LPoly(r, std::move(v));
}

std::pair<LPoly, LPoly> star_zero_l(const FieldTower& t, const LPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::kZeroPoly, "closures of the zero polynomial");
  LPoly star = monic(t, f), zero = monic(t, f);
  for (uint32_t i = 1; i < t.m(); ++i) {
    const LPoly conj = apply_frobenius(t, f, i);
    star = rgcd(t, star, conj);
    zero = llcm(t, zero, conj);
  }
  if (!coefficients_in(t, star, 1) || !coefficients_in(t, zero, 1)) {
    throw Error(ErrorKind::kVerificationFailed, "closure q^r-polynomial is not over GF(q)");
  }
  return {star, zero};
}

LClosures conjugate_closures_l(const FieldTower& t, const LPoly& f, uint32_t n) {
  auto [star, zero] = star_zero_l(t, f);
  const LPoly fp = perp(t, f);
  LPoly g = monic(t, fp), l = monic(t, fp);
  for (uint32_t i = 1; i < t.m(); ++i) {
    const LPoly conj = perp(t, apply_frobenius(t, f, i));
    g = rgcd(t, g, conj);
    l = llcm(t, l, conj);
  }
  LClosures out{std::move(star), std::move(zero), top(t, g, n), top(t, l, n)};
  if (!coefficients_in(t, out.lower_star, 1) || !coefficients_in(t, out.lower_zero, 1)) {
    throw Error(ErrorKind::kVerificationFailed, "closure q^r-polynomial is not over GF(q)");
  }
  return out;
}

LPoly lift_L(const CPoly& f, uint32_t r) { return LPoly(r, f.coeffs()); }

CPoly unlift_L(const LPoly& f) { return CPoly(f.coeffs()); }

bool is_central(const FieldTower& t, const LPoly& f) {
  const uint32_t d = std::gcd(t.m(), f.r());
  const uint32_t step = std::lcm(t.m(), f.r()) / f.r();
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element c = f.coeffs()[i];
    if (c == t.zero()) continue;
    if (i % step != 0 || !t.in_subfield(c, d)) return false;
  }
  return true;
}

bool root_spaces_available(const FieldTower& t, uint32_t r, uint32_t n) {
  return r >= 1 && t.has_subfield(r * n);
}

namespace {

RootSpace from_coords(const FieldTower& t, uint32_t r, uint32_t n, const Matrix& rows) {
  const SubfieldCoordinates sc(t, r * n, r);
  RootSpace out;
  out.r = r;
  out.n = n;
  out.coords = rref(t, rows).reduced;
  for (size_t i = 0; i < out.coords.rows(); ++i) out.basis.push_back(sc.combine(out.coords.row(i)));
  return out;
}

void require_root_field(const FieldTower& t, uint32_t r, uint32_t n) {
  if (!root_spaces_available(t, r, n)) {
    throw Error(ErrorKind::kUndeclaredSubfield, "GF(q^{rn}) is not a subfield of the ambient field");
  }
}

}  // namespace

RootSpace root_space(const FieldTower& t, const LPoly& f, uint32_t n) {
  const uint32_t r = f.r();
  require_root_field(t, r, n);
  const SubfieldCoordinates sc(t, r * n, r);
  Matrix map(n, n);
  for (uint32_t j = 0; j < n; ++j) {
    const std::vector<Element> col = sc.expand(eval(t, f, sc.basis()[j]));
    for (uint32_t i = 0; i < n; ++i) map(i, j) = col[i];
  }
  return from_coords(t, r, n, kernel_over_subfield(t, map, r, r));
}

RootSpace span_of(const FieldTower& t, uint32_t r, uint32_t n, const std::vector<Element>& vs) {
  require_root_field(t, r, n);
  const SubfieldCoordinates sc(t, r * n, r);
  Matrix rows(0, n);
  for (Element v : vs) rows.append_row(sc.expand(v));
  return from_coords(t, r, n, rows);
}

RootSpace frobenius_image(const FieldTower& t, const RootSpace& z, int64_t s) {
  std::vector<Element> img;
  for (Element v : z.basis) img.push_back(t.frobenius(v, s));
  return span_of(t, z.r, z.n, img);
}

RootSpace intersect(const FieldTower& t, const RootSpace& a, const RootSpace& b) {
  return from_coords(t, a.r, a.n, span_intersection(t, a.coords, b.coords));
}

RootSpace sum(const FieldTower& t, const RootSpace& a, const RootSpace& b) {
  return from_coords(t, a.r, a.n, span_sum(t, a.coords, b.coords));
}

bool same_space(const RootSpace& a, const RootSpace& b) {
  return a.r == b.r && a.n == b.n && a.coords == b.coords;
}

LPoly annihilator(const FieldTower& t, const RootSpace& w) {
  const uint32_t r = w.r;
  LPoly f = LPoly::identity(r);
  for (Element v : w.basis) {
    const Element y = eval(t, f, v);
    if (y == t.zero()) continue;
    const Element c = t.div(t.frobenius(y, r), y);
    f = symbolic_product(t, LPoly(r, {t.neg(c), t.one()}), f);
  }
  return f;
}

LPoly sample_right_divisor(const FieldTower& t, uint32_t r, uint32_t n, size_t count,
                           std::mt19937_64& rng) {
  require_root_field(t, r, n);
  const uint64_t size = t.subfield_order(r * n);
  const Element prim = t.subfield_primitive(r * n);
  std::uniform_int_distribution<uint64_t> pick(0, size - 1);
  std::vector<Element> gens;
  const uint32_t orbit = r * n / t.m();
  for (size_t c = 0; c < count; ++c) {
    const uint64_t idx = pick(rng);
    Element v = idx == 0 ? t.zero() : t.pow(prim, idx - 1);
    for (uint32_t j = 0; j < orbit; ++j) {
      gens.push_back(v);
      v = t.frobenius(v, t.m());
    }
  }
  const LPoly f = annihilator(t, span_of(t, r, n, gens));
  if (!coefficients_in(t, f, t.m()) || !right_divides(t, f, x_rn_minus_x(t, r, n))) {
    throw Error(ErrorKind::kVerificationFailed, "sampled annihilator is not a right divisor");
  }
  return f;
}

}  // namespace rankcodes
