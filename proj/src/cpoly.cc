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

#include <algorithm>
#include <numeric>
#include <set>

#include "rankcodes/error.h"

namespace rankcodes {

CPoly::CPoly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Element{}) coeffs_.pop_back();
}

CPoly CPoly::monomial(Element c, size_t k) {
  std::vector<Element> v(k + 1);
  v[k] = c;
  return CPoly(std::move(v));
}

CPoly binomial(const FieldTower& t, size_t k, Element c) {
  std::vector<Element> v(k + 1, t.zero());
  v[k] = t.one();
  v[0] = t.sub(v[0], c);
  return CPoly(std::move(v));
}

CPoly xn_minus_1(const FieldTower& t, size_t n) { return binomial(t, n, t.one()); }

CPoly add(const FieldTower& t, const CPoly& f, const CPoly& g) {
  std::vector<Element> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = t.add(f.coeff(i), g.coeff(i));
  return CPoly(std::move(v));
}

CPoly sub(const FieldTower& t, const CPoly& f, const CPoly& g) {
  std::vector<Element> v(std::max(f.coeffs().size(), g.coeffs().size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = t.sub(f.coeff(i), g.coeff(i));
  return CPoly(std::move(v));
}

CPoly mul(const FieldTower& t, const CPoly& f, const CPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Element> v(f.coeffs().size() + g.coeffs().size() - 1, t.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element a = f.coeffs()[i];
    if (a == t.zero()) continue;
    for (size_t j = 0; j < g.coeffs().size(); ++j) {
      v[i + j] = t.add(v[i + j], t.mul(a, g.coeffs()[j]));
    }
  }
  return CPoly(std::move(v));
}

CPoly scale(const FieldTower& t, const CPoly& f, Element c) {
  std::vector<Element> v = f.coeffs();
  for (Element& x : v) x = t.mul(x, c);
  return CPoly(std::move(v));
}

CPoly scale_variable(const FieldTower& t, const CPoly& f, Element c) {
  std::vector<Element> v = f.coeffs();
  Element pw = t.one();
  for (Element& x : v) {
    x = t.mul(x, pw);
    pw = t.mul(pw, c);
  }
  return CPoly(std::move(v));
}

Element eval(const FieldTower& t, const CPoly& f, Element x) {
  Element acc = t.zero();
  for (size_t i = f.coeffs().size(); i-- > 0;) acc = t.add(t.mul(acc, x), f.coeffs()[i]);
  return acc;
}

std::pair<CPoly, CPoly> divmod(const FieldTower& t, const CPoly& f, const CPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::kDivisionByZeroPoly, "divmod by the zero polynomial");
  std::vector<Element> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {CPoly(), f};
  std::vector<Element> quo(f.degree() - dg + 1, t.zero());
  const Element inv_lead = t.inv(g.lead());
  for (int k = f.degree(); k >= dg; --k) {
    const Element c = t.mul(rem[k], inv_lead);
    if (c == t.zero()) continue;
    quo[k - dg] = c;
    for (int j = 0; j <= dg; ++j) {
      rem[k - dg + j] = t.sub(rem[k - dg + j], t.mul(c, g.coeffs()[j]));
    }
  }
  rem.resize(dg);
  return {CPoly(std::move(quo)), CPoly(std::move(rem))};
}

CPoly mod(const FieldTower& t, const CPoly& f, const CPoly& g) { return divmod(t, f, g).second; }

bool divides(const FieldTower& t, const CPoly& d, const CPoly& f) {
  if (d.is_zero()) return f.is_zero();
  return mod(t, f, d).is_zero();
}

CPoly monic(const FieldTower& t, const CPoly& f) {
  if (f.is_zero()) return f;
  return scale(t, f, t.inv(f.lead()));
}

CPoly gcd(const FieldTower& t, const CPoly& f, const CPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::kBothZero, "gcd(0, 0)");
  CPoly a = f, b = g;
  while (!b.is_zero()) {
    CPoly r = mod(t, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(t, a);
}

CPoly lcm(const FieldTower& t, const CPoly& f, const CPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::kBothZero, "lcm(0, 0)");
  if (f.is_zero() || g.is_zero()) return {};
  const CPoly d = gcd(t, f, g);
  return monic(t, mul(t, divmod(t, f, d).first, g));
}

std::pair<CPoly, CPoly> gcd_lcm(const FieldTower& t, const CPoly& f, const CPoly& g) {
  return {gcd(t, f, g), lcm(t, f, g)};
}

Bezout extended_gcd(const FieldTower& t, const CPoly& f, const CPoly& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::kBothZero, "extended_gcd(0, 0)");
  CPoly r0 = f, r1 = g;
  CPoly s0 = CPoly::constant(t.one()), s1;
  CPoly u0, u1 = CPoly::constant(t.one());
  while (!r1.is_zero()) {
    auto [qt, r] = divmod(t, r0, r1);
    CPoly s = sub(t, s0, mul(t, qt, s1));
    CPoly u = sub(t, u0, mul(t, qt, u1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    u0 = std::move(u1);
    u1 = std::move(u);
  }
  const Element inv_lead = t.inv(r0.lead());
  return {scale(t, r0, inv_lead), scale(t, s0, inv_lead), scale(t, u0, inv_lead)};
}

CPoly x_pow_mod(const FieldTower& t, uint64_t k, const CPoly& f) {
  CPoly result = mod(t, CPoly::constant(t.one()), f);
  CPoly base = mod(t, CPoly::monomial(t.one(), 1), f);
  while (k > 0) {
    if (k & 1) result = mod(t, mul(t, result, base), f);
    base = mod(t, mul(t, base, base), f);
    k >>= 1;
  }
  return result;
}

CPoly apply_frobenius(const FieldTower& t, const CPoly& f, int64_t s) {
  std::vector<Element> v = f.coeffs();
  for (Element& x : v) x = t.frobenius(x, s);
  return CPoly(std::move(v));
}

bool coefficients_in(const FieldTower& t, const CPoly& f, uint32_t d) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [&](Element x) { return t.in_subfield(x, d); });
}

std::pair<CPoly, CPoly> conjugate_closures(const FieldTower& t, const CPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::kZeroPoly, "closures of the zero polynomial");
  CPoly star = monic(t, f), zero = monic(t, f);
  for (uint32_t i = 1; i < t.m(); ++i) {
    const CPoly conj = apply_frobenius(t, f, i);
    star = gcd(t, star, conj);
    zero = lcm(t, zero, conj);
  }
  if (!coefficients_in(t, star, 1) || !coefficients_in(t, zero, 1)) {
    throw Error(ErrorKind::kVerificationFailed, "closure polynomial is not over GF(q)");
  }
  return {star, zero};
}

CPoly reciprocal_dual(const FieldTower& t, const CPoly& f) {
  if (f.is_zero() || f.coeff(0) == t.zero()) {
    throw Error(ErrorKind::kZeroConstantTerm, "reciprocal requires f(0) != 0");
  }
  std::vector<Element> v(f.coeffs().rbegin(), f.coeffs().rend());
  return scale(t, CPoly(std::move(v)), t.inv(f.coeff(0)));
}

std::optional<uint64_t> order_a(const FieldTower& t, const CPoly& f, Element a,
                                uint64_t search_cap) {
  if (f.is_zero()) throw Error(ErrorKind::kZeroPoly, "order of the zero polynomial");
  if (a == t.zero() || !t.in_subfield(a, 1)) {
    throw Error(ErrorKind::kNotInBaseField, "a must lie in GF(q)^*");
  }
  if (f.coeff(0) == t.zero()) return std::nullopt;
  if (f.degree() == 0) return 1;
  auto passes = [&](uint64_t e) {
    return x_pow_mod(t, e, f) == mod(t, CPoly::constant(t.pow(a, e)), f);
  };
  const uint64_t n = t.n();
  if (divides(t, f, xn_minus_1(t, n))) {
    // ord_a(f) divides n * ord(a^n).
    uint64_t an_order = 1;
    const Element an = t.pow(a, n);
    for (Element cur = an; cur != t.one(); cur = t.mul(cur, an)) ++an_order;
    const uint64_t bound = n * an_order;
    for (uint64_t e = 1; e <= bound; ++e) {
      if (bound % e == 0 && passes(e)) return e;
    }
    throw Error(ErrorKind::kVerificationFailed, "order bound violated");
  }
  CPoly xe = mod(t, CPoly::monomial(t.one(), 1), f);
  const CPoly x = xe;
  Element ae = a;
  for (uint64_t e = 1; e <= search_cap; ++e) {
    if (xe == mod(t, CPoly::constant(ae), f)) return e;
    xe = mod(t, mul(t, xe, x), f);
    ae = t.mul(ae, a);
  }
  throw Error(ErrorKind::kOrderCapExceeded, "a-order search exceeded its cap");
}

namespace {

void require_coprime(const FieldTower& t, uint64_t n) {
  if (gcd_u64(t.q(), n) != 1) {
    throw Error(ErrorKind::kNotCoprime, "root sets require gcd(q, n) = 1");
  }
}

CPoly product_of_linear(const FieldTower& t, Element zeta, const std::vector<uint64_t>& exps) {
  CPoly acc = CPoly::constant(t.one());
  for (uint64_t s : exps) acc = mul(t, acc, binomial(t, 1, t.pow(zeta, s)));
  return acc;
}

}  // namespace

RootSet root_set(const FieldTower& t, const CPoly& f, uint64_t n) {
  require_coprime(t, n);
  if (f.is_zero() || !divides(t, f, xn_minus_1(t, n))) {
    throw Error(ErrorKind::kNotADivisor, "root_set requires f | x^n - 1");
  }
  const Element zeta = t.root_of_unity(n);
  RootSet out;
  out.n = n;
  uint64_t qmod = t.q() % n;
  out.zeta_degree = static_cast<uint32_t>(multiplicative_order_mod(qmod, n));
  Element z = t.one();
  for (uint64_t s = 0; s < n; ++s) {
    if (eval(t, f, z) == t.zero()) out.exponents.push_back(s);
    z = t.mul(z, zeta);
  }
  if (static_cast<int>(out.exponents.size()) != f.degree()) {
    throw Error(ErrorKind::kVerificationFailed, "root count differs from degree");
  }
  return out;
}

CPoly from_root_set(const FieldTower& t, const RootSet& s) {
  require_coprime(t, s.n);
  return product_of_linear(t, t.root_of_unity(s.n), s.exponents);
}

std::vector<std::vector<uint64_t>> cyclotomic_cosets(uint64_t n, uint64_t mult) {
  std::vector<std::vector<uint64_t>> out;
  std::vector<bool> seen(n, false);
  mult %= n == 0 ? 1 : n;
  for (uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<uint64_t> coset;
    uint64_t j = s;
    while (!seen[j]) {
      seen[j] = true;
      coset.push_back(j);
      j = j * mult % n;
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

std::pair<CPoly, uint64_t> mu_eta(const FieldTower& t, const CPoly& g, uint64_t n) {
  const RootSet roots = root_set(t, g, n);
  const CPoly via_closure = conjugate_closures(t, g).second;
  const Element zeta = t.root_of_unity(n);
  std::set<uint64_t> in_g(roots.exponents.begin(), roots.exponents.end());
  CPoly via_minimal = CPoly::constant(t.one());
  for (const auto& coset : cyclotomic_cosets(n, t.q() % n)) {
    const bool hit = std::any_of(coset.begin(), coset.end(),
                                 [&](uint64_t s) { return in_g.count(s) > 0; });
    if (hit) via_minimal = mul(t, via_minimal, product_of_linear(t, zeta, coset));
  }
  if (via_closure != via_minimal) {
    throw Error(ErrorKind::kPathDisagreement, "mu_q via closure and via minimal polynomials differ");
  }
  return {via_closure, static_cast<uint64_t>(via_closure.degree())};
}

std::vector<Factor> factor_xn_minus_1(const FieldTower& t, uint64_t n, uint32_t d) {
  if (d == 0) d = t.m();
  if (n == 0 || n > 4096) {
    throw Error(ErrorKind::kDeskScaleExceeded, "x^n - 1 factorization limited to 1 <= n <= 4096");
  }
  uint64_t n_free = n;
  uint32_t mult = 1;
  while (n_free % t.p() == 0) {
    n_free /= t.p();
    mult *= t.p();
  }
  const Element zeta = t.root_of_unity(n_free);
  uint64_t qd = 1 % n_free;
  for (uint32_t i = 0; i < t.e() * d; ++i) qd = qd * t.p() % n_free;
  std::vector<Factor> out;
  for (const auto& coset : cyclotomic_cosets(n_free, qd)) {
    out.push_back({product_of_linear(t, zeta, coset), mult});
  }
  return out;
}

std::vector<CPoly> all_divisors(const FieldTower& t, const std::vector<Factor>& factors,
                                size_t cap) {
  size_t count = 1;
  for (const Factor& f : factors) {
    count *= f.multiplicity + 1;
    if (count > cap) throw Error(ErrorKind::kDeskScaleExceeded, "too many divisors");
  }
  std::vector<CPoly> out;
  out.reserve(count);
  std::vector<uint32_t> expo(factors.size(), 0);
  for (size_t idx = 0; idx < count; ++idx) {
    CPoly acc = CPoly::constant(t.one());
    for (size_t i = 0; i < factors.size(); ++i) {
      for (uint32_t k = 0; k < expo[i]; ++k) acc = mul(t, acc, factors[i].poly);
    }
    out.push_back(std::move(acc));
    for (size_t i = 0; i < factors.size(); ++i) {
      if (++expo[i] <= factors[i].multiplicity) break;
      expo[i] = 0;
    }
  }
  return out;
}

}  // namespace rankcodes
