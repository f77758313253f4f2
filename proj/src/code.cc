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

#include <algorithm>

#include "rankcodes/error.h"

namespace rankcodes {

LinearCode LinearCode::span(const FieldTower& t, const Matrix& rows) {
  RowEchelon e = rref(t, rows);
  LinearCode c;
  c.n_ = rows.cols();
  c.gen_ = std::move(e.reduced);
  c.pivots_ = std::move(e.pivots);
  return c;
}

LinearCode LinearCode::full(const FieldTower& t, size_t n) {
  Matrix id(n, n);
  for (size_t i = 0; i < n; ++i) id(i, i) = t.one();
  return span(t, id);
}

LinearCode LinearCode::zero(size_t n) {
  LinearCode c;
  c.n_ = n;
  c.gen_ = Matrix(0, n);
  return c;
}

bool LinearCode::contains(const FieldTower& t, std::span<const Element> c) const {
  if (c.size() != n_) throw Error(ErrorKind::kLengthMismatch, "codeword length");
  return in_row_space(t, RowEchelon{gen_, pivots_}, c);
}

namespace {

size_t rank_mod_p(std::vector<std::vector<uint32_t>> rows, uint32_t p) {
  size_t rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  auto inv = [p](uint32_t a) {
    uint32_t r = 1;
    for (uint32_t e = p - 2, b = a; e; e >>= 1, b = b * b % p) {
      if (e & 1) r = r * b % p;
    }
    return r;
  };
  for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const uint32_t s = inv(rows[rank][col]);
    for (uint32_t& x : rows[rank]) x = x * s % p;
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      const uint32_t f = rows[i][col];
      if (f == 0) continue;
      for (size_t k = 0; k < cols; ++k) rows[i][k] = (rows[i][k] + (p - f) * rows[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

size_t rank_weight(const FieldTower& t, std::span<const Element> c) {
  if (t.e() == 1 && t.p() == 2) {
    // XOR basis over GF(2), keyed by leading bit.
    std::vector<uint32_t> basis(32, 0);
    size_t rank = 0;
    for (Element x : c) {
      uint32_t v = x.value;
      for (int bit = 31; bit >= 0 && v; --bit) {
        if (!((v >> bit) & 1)) continue;
        if (!basis[bit]) {
          basis[bit] = v;
          ++rank;
          break;
        }
        v ^= basis[bit];
      }
    }
    return rank;
  }
  if (t.e() == 1) {
    std::vector<std::vector<uint32_t>> rows;
    for (Element x : c) {
      if (x != t.zero()) rows.push_back(t.coeffs(x));
    }
    return rank_mod_p(std::move(rows), t.p());
  }
  // GF(q)-rank equals the rank of the Moore matrix [c_j^{q^i}].
  Matrix moore(t.m(), c.size());
  for (size_t j = 0; j < c.size(); ++j) {
    Element v = c[j];
    for (uint32_t i = 0; i < t.m(); ++i) {
      moore(i, j) = v;
      v = t.frobenius(v, 1);
    }
  }
  return rank(t, moore);
}

Codeword cyclic_shift(std::span<const Element> c) {
  Codeword out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = c[i];
  return out;
}

Codeword frobenius(const FieldTower& t, std::span<const Element> c, int64_t s) {
  Codeword out(c.begin(), c.end());
  for (Element& x : out) x = t.frobenius(x, s);
  return out;
}

Codeword skew_shift(const FieldTower& t, std::span<const Element> c, int64_t r) {
  return frobenius(t, cyclic_shift(c), r);
}

namespace {

void same_length(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::kLengthMismatch, "codes of different length");
}

}  // namespace

LinearCode dual(const FieldTower& t, const LinearCode& c) {
  if (c.k() == 0) return LinearCode::full(t, c.n());
  return LinearCode::span(t, right_kernel(t, c.generator()));
}

LinearCode sum(const FieldTower& t, const LinearCode& a, const LinearCode& b) {
  same_length(a, b);
  return LinearCode::span(t, stack(a.generator(), b.generator()));
}

LinearCode intersect(const FieldTower& t, const LinearCode& a, const LinearCode& b) {
  same_length(a, b);
  if (a.k() == 0 || b.k() == 0) return LinearCode::zero(a.n());
  return LinearCode::span(t, span_intersection(t, a.generator(), b.generator()));
}

LinearCode frobenius(const FieldTower& t, const LinearCode& c, int64_t s) {
  Matrix rows(0, c.n());
  for (size_t i = 0; i < c.k(); ++i) rows.append_row(frobenius(t, c.generator().row(i), s));
  return LinearCode::span(t, rows);
}

LinearCode galois_closure(const FieldTower& t, const LinearCode& c) {
  LinearCode cur = c;
  for (uint32_t i = 1; i < t.m(); ++i) {
    LinearCode next = sum(t, cur, frobenius(t, cur, 1));
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

LinearCode galois_interior(const FieldTower& t, const LinearCode& c) {
  LinearCode cur = c;
  for (uint32_t i = 1; i < t.m(); ++i) {
    LinearCode next = intersect(t, cur, frobenius(t, cur, 1));
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

bool is_galois_closed(const FieldTower& t, const LinearCode& c) {
  for (size_t i = 0; i < c.k(); ++i) {
    if (!c.contains(t, frobenius(t, c.generator().row(i), 1))) return false;
  }
  return true;
}

bool is_qr_cyclic(const FieldTower& t, const LinearCode& c, int64_t s) {
  for (size_t i = 0; i < c.k(); ++i) {
    if (!c.contains(t, skew_shift(t, c.generator().row(i), s))) return false;
  }
  return true;
}

bool is_cyclic(const FieldTower& t, const LinearCode& c) { return is_qr_cyclic(t, c, 0); }

std::vector<uint32_t> skew_orders(const FieldTower& t, const LinearCode& c) {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < t.m(); ++s) {
    if (is_qr_cyclic(t, c, s)) out.push_back(s);
  }
  return out;
}

CPoly as_cpoly(std::span<const Element> c) { return CPoly(Vec(c.begin(), c.end())); }

Codeword as_codeword(const FieldTower& t, const CPoly& f, size_t n) {
  if (f.degree() >= static_cast<int>(n)) {
    throw Error(ErrorKind::kLengthMismatch, "polynomial degree exceeds the code length");
  }
  Codeword out(n, t.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
  return out;
}

LPoly as_lpoly(std::span<const Element> c, uint32_t r) { return LPoly(r, Vec(c.begin(), c.end())); }

Codeword as_codeword(const FieldTower& t, const LPoly& f, size_t n) {
  if (f.qdegree() >= static_cast<int>(n)) {
    throw Error(ErrorKind::kLengthMismatch, "q-degree exceeds the code length");
  }
  Codeword out(n, t.zero());
  for (size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
  return out;
}

std::optional<Codeword> min_degree_codeword(const FieldTower& t, const LinearCode& c) {
  if (c.k() == 0) return std::nullopt;
  const size_t n = c.n();
  Matrix rev(c.k(), n);
  for (size_t i = 0; i < c.k(); ++i) {
    for (size_t j = 0; j < n; ++j) rev(i, n - 1 - j) = c.generator()(i, j);
  }
  const RowEchelon e = rref(t, rev);
  const size_t last = e.reduced.rows() - 1;
  Codeword out(n);
  for (size_t j = 0; j < n; ++j) out[j] = e.reduced(last, n - 1 - j);
  return out;
}

LinearCode code_from_gpoly(const FieldTower& t, const CPoly& g, size_t n) {
  const CPoly xn = xn_minus_1(t, n);
  if (g.is_zero() || !divides(t, g, xn)) {
    throw Error(ErrorKind::kNotADivisor, "generator polynomial must divide x^n - 1");
  }
  const size_t k = n - g.degree();
  if (k == 0) return LinearCode::zero(n);
  Matrix rows(0, n);
  for (size_t i = 0; i < k; ++i) rows.append_row(as_codeword(t, mul(t, CPoly::monomial(t.one(), i), g), n));
  return LinearCode::span(t, rows);
}

LinearCode code_from_ideal_element(const FieldTower& t, const CPoly& f, size_t n) {
  const CPoly xn = xn_minus_1(t, n);
  Matrix rows(0, n);
  CPoly cur = mod(t, f, xn);
  for (size_t i = 0; i < n; ++i) {
    rows.append_row(as_codeword(t, cur, n));
    cur = mod(t, mul(t, CPoly::monomial(t.one(), 1), cur), xn);
  }
  return LinearCode::span(t, rows);
}

LinearCode code_from_root_exponents(const FieldTower& t, const RootSet& s) {
  const uint64_t n = s.n;
  if (n == 0 || gcd_u64(t.q(), n) != 1) {
    throw Error(ErrorKind::kNotCoprime, "root sets require gcd(q, n) = 1");
  }
  const uint64_t qm = t.subfield_order(t.m()) % n;
  std::vector<uint64_t> exps = s.exponents;
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (uint64_t x : exps) {
    if (x >= n) throw Error(ErrorKind::kNotCosetClosed, "exponent out of range");
    if (!std::binary_search(exps.begin(), exps.end(), x * qm % n)) {
      throw Error(ErrorKind::kNotCosetClosed, "root set not closed under multiplication by q^m");
    }
  }
  RootSet clean = s;
  clean.exponents = exps;
  const CPoly g = from_root_set(t, clean);
  if (!coefficients_in(t, g, t.m())) {
    throw Error(ErrorKind::kVerificationFailed, "root set polynomial not over GF(q^m)");
  }
  return code_from_gpoly(t, g, n);
}

namespace {

void require_skew_divisibility(const FieldTower& t, uint32_t r, size_t n) {
  if (r == 0 || (static_cast<uint64_t>(r) * n) % t.m() != 0) {
    throw Error(ErrorKind::kSkewDivisibilityViolated, "skew order r needs r >= 1 and m | rn");
  }
}

}  // namespace

LinearCode code_from_glpoly(const FieldTower& t, const LPoly& g, size_t n) {
  require_skew_divisibility(t, g.r(), n);
  if (g.is_zero() || !right_divides(t, g, x_rn_minus_x(t, g.r(), n))) {
    throw Error(ErrorKind::kNotARightDivisor, "G must right-divide x^[rn] - x");
  }
  const size_t k = n - g.qdegree();
  if (k == 0) return LinearCode::zero(n);
  Matrix rows(0, n);
  for (size_t i = 0; i < k; ++i) {
    rows.append_row(as_codeword(t, symbolic_product(t, LPoly::monomial(g.r(), t.one(), i), g), n));
  }
  return LinearCode::span(t, rows);
}

GenCheck generator_check_poly(const FieldTower& t, const LinearCode& c) {
  if (!is_cyclic(t, c)) throw Error(ErrorKind::kNotCyclic, "code is not cyclic");
  const size_t n = c.n();
  const CPoly xn = xn_minus_1(t, n);
  if (c.k() == 0) return {xn, CPoly::constant(t.one())};
  const CPoly g = as_cpoly(*min_degree_codeword(t, c));
  auto [h, rem] = divmod(t, xn, g);
  if (g.degree() != static_cast<int>(n - c.k()) || !rem.is_zero() ||
      code_from_gpoly(t, g, n) != c) {
    throw Error(ErrorKind::kVerificationFailed, "generator polynomial extraction");
  }
  return {g, h};
}

LGenCheck generator_check_lpoly(const FieldTower& t, const LinearCode& c, uint32_t r) {
  const size_t n = c.n();
  require_skew_divisibility(t, r, n);
  if (!is_qr_cyclic(t, c, r)) throw Error(ErrorKind::kNotSkewCyclic, "code is not q^r-cyclic");
  const LPoly mod = x_rn_minus_x(t, r, n);
  if (c.k() == 0) return {mod, LPoly::identity(r)};
  const LPoly g = as_lpoly(*min_degree_codeword(t, c), r);
  auto [h, rem] = right_divmod(t, mod, g);
  if (g.qdegree() != static_cast<int>(n - c.k()) || !rem.is_zero() ||
      symbolic_product(t, g, h) != mod || code_from_glpoly(t, g, n) != c) {
    throw Error(ErrorKind::kVerificationFailed, "generator q^r-polynomial extraction");
  }
  return {g, h};
}

CPoly idempotent_generator(const FieldTower& t, const LinearCode& c) {
  const GenCheck gh = generator_check_poly(t, c);
  const Bezout b = extended_gcd(t, gh.g, gh.h);
  if (b.gcd.degree() != 0) throw Error(ErrorKind::kNotCoprimeGH, "gcd(g, h) != 1");
  const CPoly xn = xn_minus_1(t, c.n());
  const CPoly e = mod(t, mul(t, b.a, gh.g), xn);
  if (mod(t, mul(t, e, e), xn) != e) {
    throw Error(ErrorKind::kVerificationFailed, "idempotent check failed");
  }
  return e;
}

LinearCode cyclic_complement(const FieldTower& t, const LinearCode& c) {
  const GenCheck gh = generator_check_poly(t, c);
  if (gcd(t, gh.g, gh.h).degree() != 0) throw Error(ErrorKind::kNotCoprimeGH, "gcd(g, h) != 1");
  return code_from_gpoly(t, gh.h, c.n());
}

uint64_t codeword_count(const FieldTower& t, const LinearCode& c) {
  uint64_t count = 1;
  const uint64_t base = t.subfield_order(t.m());
  for (size_t i = 0; i < c.k(); ++i) {
    if (count > (uint64_t{1} << 40) / base) return UINT64_MAX;
    count *= base;
  }
  return count;
}

namespace {

void check_cap(const FieldTower& t, const LinearCode& c, uint64_t cap) {
  if (codeword_count(t, c) > cap) {
    throw Error(ErrorKind::kEnumerationCapExceeded, "code too large to enumerate");
  }
}

// Visits sum_i coef_i row_i for all coefficient tuples with the first
// nonzero coefficient in `first_set`; `first_set` = all field elements
// gives every codeword.
void enumerate(const FieldTower& t, const LinearCode& c, bool projective,
               const std::function<void(const Codeword&)>& visit) {
  const std::vector<Element> elems = t.subfield_elements(t.m());
  const size_t k = c.k(), n = c.n();
  if (k == 0) {
    if (!projective) visit(Codeword(n, t.zero()));
    return;
  }
  std::vector<size_t> idx(k, 0);
  Codeword word(n);
  for (;;) {
    bool emit = true;
    if (projective) {
      size_t first = 0;
      while (first < k && idx[first] == 0) ++first;
      emit = first < k && idx[first] == 1;
    }
    if (emit) {
      std::fill(word.begin(), word.end(), t.zero());
      for (size_t i = 0; i < k; ++i) {
        const Element a = elems[idx[i]];
        if (a == t.zero()) continue;
        for (size_t j = 0; j < n; ++j) {
          word[j] = t.add(word[j], t.mul(a, c.generator()(i, j)));
        }
      }
      visit(word);
    }
    size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < elems.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

void for_each_codeword(const FieldTower& t, const LinearCode& c, uint64_t cap,
                       const std::function<void(const Codeword&)>& visit) {
  check_cap(t, c, cap);
  enumerate(t, c, false, visit);
}

std::map<size_t, uint64_t> rank_weight_distribution(const FieldTower& t, const LinearCode& c,
                                                    uint64_t cap) {
  check_cap(t, c, cap);
  // Rank weight is invariant under GF(q^m)^* scaling, so one representative
  // per line suffices.
  std::map<size_t, uint64_t> dist;
  dist[0] = 1;
  const uint64_t scalars = t.subfield_order(t.m()) - 1;
  enumerate(t, c, true, [&](const Codeword& w) { dist[rank_weight(t, w)] += scalars; });
  return dist;
}

std::optional<size_t> min_rank_distance(const FieldTower& t, const LinearCode& c, uint64_t cap) {
  if (c.k() == 0) return std::nullopt;
  const auto dist = rank_weight_distribution(t, c, cap);
  for (const auto& [w, count] : dist) {
    if (w > 0 && count > 0) return w;
  }
  return std::nullopt;
}

}  // namespace rankcodes
