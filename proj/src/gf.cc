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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rankcodes/error.h"

namespace rankcodes {

uint64_t ipow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

uint64_t lcm_u64(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

uint64_t multiplicative_order_mod(uint64_t base, uint64_t modulus) {
  if (modulus == 1) return 1;
  base %= modulus;
  uint64_t x = base;
  for (uint64_t k = 1; k <= modulus; ++k) {
    if (x == 1) return k;
    x = static_cast<uint64_t>((static_cast<unsigned __int128>(x) * base) % modulus);
  }
  return 0;  // base not invertible
}

namespace {

// Dense polynomials over GF(p), constant first, used only to pick the modulus.
using PPoly = std::vector<uint32_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& f, uint32_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint64_t inv_lead = [&] {
    for (uint64_t c = 1; c < p; ++c) {
      if (c * f.back() % p == 1) return c;
    }
    return uint64_t{1};
  }();
  while (a.size() > df) {
    const uint64_t c = a.back() * inv_lead % p;
    const size_t shift = a.size() - 1 - df;
    for (size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<uint32_t>((c[i + j] + uint64_t{a[i]} * b[j]) % p);
    }
  }
  return pmod(std::move(c), f, p);
}

PPoly ppowmod(PPoly a, uint64_t k, const PPoly& f, uint32_t p) {
  PPoly r{1};
  a = pmod(std::move(a), f, p);
  while (k > 0) {
    if (k & 1) r = pmulmod(r, a, f, p);
    a = pmulmod(a, a, f, p);
    k >>= 1;
  }
  return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{p^k} mod f.
PPoly frobenius_power_of_x(uint32_t k, const PPoly& f, uint32_t p) {
  PPoly h{0, 1};
  h = pmod(h, f, p);
  for (uint32_t i = 0; i < k; ++i) h = ppowmod(h, p, f, p);
  return h;
}

bool is_irreducible(const PPoly& f, uint32_t p) {
  const uint32_t n = static_cast<uint32_t>(f.size() - 1);
  if (n == 1) return true;
  if (f[0] == 0) return false;
  PPoly x{0, 1};
  PPoly h = frobenius_power_of_x(n, f, p);
  PPoly diff = h;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  if (!diff.empty()) return false;
  for (uint64_t l : prime_factors(n)) {
    PPoly g = frobenius_power_of_x(static_cast<uint32_t>(n / l), f, p);
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    PPoly d = pgcd(f, g, p);
    if (d.size() != 1) return false;
  }
  return true;
}

// Smallest monic irreducible of degree n, ordering candidates by the
// integer sum c_i p^i of their lower coefficients.
PPoly smallest_irreducible(uint32_t p, uint32_t n) {
  const uint64_t count = ipow(p, n);
  for (uint64_t idx = 0; idx < count; ++idx) {
    PPoly f(n + 1, 0);
    uint64_t v = idx;
    for (uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    f[n] = 1;
    if (n > 1 && f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorKind::kNonPrimeCharacteristic, "no irreducible polynomial found");
}

constexpr uint64_t kTableLimit = uint64_t{1} << 22;

}  // namespace

struct FieldTower::Tables {
  std::vector<uint32_t> log;  // indexed by element value; log[0] unused
  std::vector<uint32_t> exp;  // length 2(P-1)
};

FieldTower FieldTower::make(uint32_t p, uint32_t e, uint32_t m, uint32_t r,
                            uint32_t n, const TowerOptions& options) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (e < 1 || m < 1 || n < 1) {
    throw Error(ErrorKind::kParseError, "e, m and n must be positive");
  }
  if (r >= 1 && (uint64_t{r} * n) % m != 0) {
    throw Error(ErrorKind::kSkewDivisibilityViolated,
                "m=" + std::to_string(m) + " does not divide r*n=" + std::to_string(r * n));
  }
  const uint64_t q = ipow(p, e);
  uint64_t deg = uint64_t{e} * m;
  if (r >= 1) deg = lcm_u64(deg, uint64_t{e} * r * n);
  // Splitting field of x^{n'} - 1 over GF(q^m), n' the p-free part of n.
  uint64_t n_free = n;
  while (n_free % p == 0) n_free /= p;
  if (n_free > 1) {
    const uint64_t qm_mod = [&] {
      uint64_t v = 1;
      for (uint32_t i = 0; i < e * m; ++i) v = v * p % n_free;
      return v;
    }();
    const uint64_t t = multiplicative_order_mod(qm_mod, n_free);
    deg = lcm_u64(deg, uint64_t{e} * m * t);
  }
  auto size_of = [&](uint64_t d) -> long double {
    long double s = 1;
    for (uint64_t i = 0; i < d; ++i) s *= p;
    return s;
  };
  if (size_of(deg) > static_cast<long double>(options.ambient_cap) || deg > 63) {
    throw Error(ErrorKind::kAmbientTooLarge,
                "ambient GF(" + std::to_string(p) + "^" + std::to_string(deg) +
                    ") exceeds the configured cap");
  }
  if (options.linearized_cyclic_view) {
    const uint64_t wider = lcm_u64(deg, uint64_t{e} * m * n);
    const long double limit = static_cast<long double>(
        std::min<uint64_t>(options.ambient_cap, kTableLimit));
    if (wider <= 63 && size_of(wider) <= limit) deg = wider;
  }

  FieldTower t;
  t.p_ = p;
  t.e_ = e;
  t.m_ = m;
  t.r_ = r;
  t.n_ = n;
  t.N_ = static_cast<uint32_t>(deg);
  t.q_ = q;
  t.order_ = ipow(p, t.N_);
  if (options.modulus) {
    PPoly f = *options.modulus;
    if (f.size() != t.N_ + 1 || f.back() != 1 ||
        std::any_of(f.begin(), f.end(), [&](uint32_t c) { return c >= p; }) ||
        !is_irreducible(f, p)) {
      throw Error(ErrorKind::kParseError, "supplied modulus is not a monic irreducible of degree " +
                                              std::to_string(t.N_));
    }
    t.modulus_ = std::move(f);
  } else {
    t.modulus_ = smallest_irreducible(p, t.N_);
  }

  // Primitive element: least encoded value of full multiplicative order.
  const uint64_t group = t.order_ - 1;
  const std::vector<uint64_t> group_primes = prime_factors(group);
  for (uint64_t v = 1; v < t.order_; ++v) {
    const Element cand{static_cast<uint32_t>(v)};
    bool full = true;
    for (uint64_t l : group_primes) {
      if (t.pow_slow(cand, group / l) == t.one()) {
        full = false;
        break;
      }
    }
    if (full) {
      t.generator_ = cand;
      break;
    }
  }

  if (t.order_ <= kTableLimit) {
    auto tables = std::make_shared<Tables>();
    tables->log.assign(t.order_, 0);
    tables->exp.assign(2 * group + 1, 0);
    // Multiplication by the generator as a GF(p)-linear map.
    std::vector<Element> images(t.N_);
    uint64_t unit = 1;
    for (uint32_t j = 0; j < t.N_; ++j) {
      images[j] = t.mul_slow(Element{static_cast<uint32_t>(unit)}, t.generator_);
      unit *= p;
    }
    uint32_t cur = 1;
    for (uint64_t i = 0; i < group; ++i) {
      tables->exp[i] = cur;
      tables->log[cur] = static_cast<uint32_t>(i);
      uint32_t next = 0;
      if (p == 2) {
        for (uint32_t j = 0, v = cur; v != 0; ++j, v >>= 1) {
          if (v & 1) next ^= images[j].value;
        }
      } else {
        Element acc = t.zero();
        uint32_t v = cur;
        for (uint32_t j = 0; v != 0; ++j, v /= p) {
          for (uint32_t d = v % p; d > 0; --d) acc = t.add(acc, images[j]);
        }
        next = acc.value;
      }
      cur = next;
    }
    for (uint64_t i = group; i < 2 * group + 1; ++i) tables->exp[i] = tables->exp[i - group];
    t.tables_ = std::move(tables);
  }
  return t;
}

Element FieldTower::from_int(int64_t v) const {
  const int64_t pp = p_;
  return Element{static_cast<uint32_t>(((v % pp) + pp) % pp)};
}

Element FieldTower::from_coeffs(std::span<const uint32_t> coeffs) const {
  if (coeffs.size() > N_) {
    throw Error(ErrorKind::kParseError, "element has more than N coefficients");
  }
  uint64_t v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorKind::kParseError, "coefficient not reduced mod p");
    v = v * p_ + coeffs[i];
  }
  return Element{static_cast<uint32_t>(v)};
}

std::vector<uint32_t> FieldTower::coeffs(Element x) const {
  std::vector<uint32_t> out(N_, 0);
  uint32_t v = x.value;
  for (uint32_t i = 0; i < N_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Element FieldTower::add(Element a, Element b) const {
  if (p_ == 2) return Element{a.value ^ b.value};
  uint32_t x = a.value, y = b.value, out = 0, place = 1;
  while (x != 0 || y != 0) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Element{out};
}

Element FieldTower::neg(Element a) const {
  if (p_ == 2) return a;
  uint32_t x = a.value, out = 0, place = 1;
  while (x != 0) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Element{out};
}

Element FieldTower::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldTower::mul_slow(Element a, Element b) const {
  if (a.value == 0 || b.value == 0) return zero();
  std::vector<uint32_t> ca = coeffs(a), cb = coeffs(b);
  PPoly prod(2 * N_, 0);
  for (uint32_t i = 0; i < N_; ++i) {
    if (ca[i] == 0) continue;
    for (uint32_t j = 0; j < N_; ++j) {
      prod[i + j] = static_cast<uint32_t>((prod[i + j] + uint64_t{ca[i]} * cb[j]) % p_);
    }
  }
  PPoly red = pmod(std::move(prod), modulus_, p_);
  return from_coeffs(red);
}

Element FieldTower::pow_slow(Element a, uint64_t k) const {
  Element r = one();
  while (k > 0) {
    if (k & 1) r = mul_slow(r, a);
    a = mul_slow(a, a);
    k >>= 1;
  }
  return r;
}

Element FieldTower::mul(Element a, Element b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (tables_) {
    return Element{tables_->exp[tables_->log[a.value] + tables_->log[b.value]]};
  }
  return mul_slow(a, b);
}

Element FieldTower::inv(Element a) const {
  if (a.value == 0) throw Error(ErrorKind::kZeroInput, "inverse of zero");
  if (tables_) {
    const uint64_t group = order_ - 1;
    return Element{tables_->exp[(group - tables_->log[a.value]) % group]};
  }
  return pow_slow(a, order_ - 2);
}

Element FieldTower::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FieldTower::pow(Element a, uint64_t k) const {
  if (k == 0) return one();
  if (a.value == 0) return zero();
  if (tables_) {
    const uint64_t group = order_ - 1;
    const uint64_t idx = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(tables_->log[a.value]) * (k % group)) % group);
    return Element{tables_->exp[idx]};
  }
  return pow_slow(a, k);
}

uint64_t FieldTower::q_power_mod(int64_t s, uint64_t mod) const {
  const int64_t period = static_cast<int64_t>(N_ / e_);
  s %= period;
  if (s < 0) s += period;
  uint64_t r = 1 % mod;
  for (int64_t i = 0; i < s; ++i) {
    r = static_cast<uint64_t>((static_cast<unsigned __int128>(r) * q_) % mod);
  }
  return r;
}

Element FieldTower::frobenius(Element x, int64_t s) const {
  if (x.value == 0) return x;
  const uint64_t group = order_ - 1;
  const uint64_t k = q_power_mod(s, group);
  if (tables_) {
    const uint64_t idx = static_cast<uint64_t>(
        (static_cast<unsigned __int128>(tables_->log[x.value]) * k) % group);
    return Element{tables_->exp[idx]};
  }
  return pow_slow(x, k == 0 ? group : k);
}

uint64_t FieldTower::log(Element x) const {
  if (x.value == 0) throw Error(ErrorKind::kZeroInput, "logarithm of zero");
  if (tables_) return tables_->log[x.value];
  Element cur = one();
  for (uint64_t i = 0; i + 1 < order_; ++i) {
    if (cur == x) return i;
    cur = mul_slow(cur, generator_);
  }
  throw Error(ErrorKind::kZeroInput, "logarithm not found");
}

Element FieldTower::exp(uint64_t k) const {
  const uint64_t group = order_ - 1;
  if (tables_) return Element{tables_->exp[k % group]};
  return pow_slow(generator_, k % group);
}

bool FieldTower::has_subfield(uint32_t d) const {
  return d >= 1 && N_ % (e_ * d) == 0;
}

bool FieldTower::in_subfield(Element x, uint32_t d) const {
  if (!has_subfield(d)) {
    throw Error(ErrorKind::kUndeclaredSubfield,
                "GF(q^" + std::to_string(d) + ") is not a subfield of the ambient field");
  }
  return frobenius(x, d) == x;
}

uint64_t FieldTower::subfield_order(uint32_t d) const { return ipow(q_, d); }

Element FieldTower::subfield_primitive(uint32_t d) const {
  if (!has_subfield(d)) {
    throw Error(ErrorKind::kUndeclaredSubfield,
                "GF(q^" + std::to_string(d) + ") is not a subfield of the ambient field");
  }
  return exp((order_ - 1) / (subfield_order(d) - 1));
}

std::vector<Element> FieldTower::subfield_elements(uint32_t d) const {
  const Element prim = subfield_primitive(d);
  const uint64_t size = subfield_order(d);
  std::vector<Element> out;
  out.reserve(size);
  out.push_back(zero());
  Element cur = one();
  for (uint64_t i = 0; i + 1 < size; ++i) {
    out.push_back(cur);
    cur = mul(cur, prim);
  }
  return out;
}

Element FieldTower::root_of_unity(uint64_t k) const {
  if (k == 0 || (order_ - 1) % k != 0) {
    throw Error(ErrorKind::kNotCoprime,
                "no primitive " + std::to_string(k) + "-th root of unity in the ambient field");
  }
  return exp((order_ - 1) / k);
}

std::optional<Element> FieldTower::solve_beta(Element b, int64_t r) const {
  if (b == zero()) throw Error(ErrorKind::kZeroInput, "solve_beta requires b != 0");
  if (!in_subfield(b, 1)) throw Error(ErrorKind::kNotInBaseField, "b must lie in GF(q)");
  const std::vector<Element> elems = subfield_elements(m_);
  for (size_t i = 1; i < elems.size(); ++i) {
    const Element beta = elems[i];
    if (frobenius(beta, r) == mul(b, beta)) return beta;
  }
  return std::nullopt;
}

std::string FieldTower::format(Element x) const {
  if (x.value < p_) return std::to_string(x.value);
  std::ostringstream os;
  const uint64_t lg = log(x);
  const uint64_t step = (order_ - 1) / (subfield_order(m_) - 1);
  if (lg % step == 0) {
    const uint64_t k = lg / step;
    os << "a";
    if (k != 1) os << "^" << k;
  } else {
    os << "g^" << lg;
  }
  return os.str();
}

SubfieldCoordinates::SubfieldCoordinates(const FieldTower& tower, uint32_t big, uint32_t small)
    : tower_(&tower), small_(small) {
  if (small == 0 || big % small != 0 || !tower.has_subfield(big)) {
    throw Error(ErrorKind::kUndeclaredSubfield, "invalid subfield pair for coordinates");
  }
  t_ = big / small;
  const Element xi = tower.subfield_primitive(big);
  basis_.resize(t_);
  Element cur = tower.one();
  for (uint32_t i = 0; i < t_; ++i) {
    basis_[i] = cur;
    cur = tower.mul(cur, xi);
  }
  // V[j][i] = (xi^i)^{q^{small j}}; invert by Gauss-Jordan.
  std::vector<Element> a(t_ * 2 * t_, tower.zero());
  const size_t w = 2 * t_;
  for (uint32_t j = 0; j < t_; ++j) {
    for (uint32_t i = 0; i < t_; ++i) {
      a[j * w + i] = tower.frobenius(basis_[i], int64_t{small} * j);
    }
    a[j * w + t_ + j] = tower.one();
  }
  for (uint32_t col = 0; col < t_; ++col) {
    uint32_t piv = col;
    while (piv < t_ && a[piv * w + col] == tower.zero()) ++piv;
    if (piv == t_) throw Error(ErrorKind::kVerificationFailed, "singular conjugate matrix");
    for (size_t k = 0; k < w; ++k) std::swap(a[piv * w + k], a[col * w + k]);
    const Element scale = tower.inv(a[col * w + col]);
    for (size_t k = 0; k < w; ++k) a[col * w + k] = tower.mul(a[col * w + k], scale);
    for (uint32_t row = 0; row < t_; ++row) {
      if (row == col || a[row * w + col] == tower.zero()) continue;
      const Element f = a[row * w + col];
      for (size_t k = 0; k < w; ++k) {
        a[row * w + k] = tower.sub(a[row * w + k], tower.mul(f, a[col * w + k]));
      }
    }
  }
  inverse_.resize(t_ * t_);
  for (uint32_t i = 0; i < t_; ++i) {
    for (uint32_t j = 0; j < t_; ++j) inverse_[i * t_ + j] = a[i * w + t_ + j];
  }
}

std::vector<Element> SubfieldCoordinates::expand(Element x) const {
  const FieldTower& t = *tower_;
  std::vector<Element> conj(t_);
  for (uint32_t j = 0; j < t_; ++j) conj[j] = t.frobenius(x, int64_t{small_} * j);
  std::vector<Element> out(t_, t.zero());
  for (uint32_t i = 0; i < t_; ++i) {
    Element acc = t.zero();
    for (uint32_t j = 0; j < t_; ++j) acc = t.add(acc, t.mul(inverse_[i * t_ + j], conj[j]));
    out[i] = acc;
  }
  return out;
}

Element SubfieldCoordinates::combine(std::span<const Element> coords) const {
  const FieldTower& t = *tower_;
  Element acc = t.zero();
  for (uint32_t i = 0; i < t_ && i < coords.size(); ++i) {
    acc = t.add(acc, t.mul(coords[i], basis_[i]));
  }
  return acc;
}

}  // namespace rankcodes
