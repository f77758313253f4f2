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


#include "rankcodes/lengths.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "rankcodes/error.h"

namespace rankcodes {
namespace {

constexpr uint64_t kWeightSampleSize = 4096;
constexpr uint64_t kRationalSearchCap = uint64_t{1} << 16;

std::vector<Element> nonzero_base(const FieldTower& t) {
  std::vector<Element> v = t.subfield_elements(1);
  v.erase(v.begin());
  return v;
}

// Skew order s = 0 is handled through the q^m-linearized view.
uint32_t linearized_order(const FieldTower& t, uint32_t s) { return s == 0 ? t.m() : s; }

bool has_linearized_view(const FieldTower& t, uint32_t r, size_t n) {
  return (static_cast<uint64_t>(r) * n) % t.m() == 0;
}

CPoly gcd_of_conjugates(const FieldTower& t, const CPoly& f) {
  CPoly acc = f;
  for (uint32_t i = 1; i < t.m(); ++i) acc = gcd(t, acc, apply_frobenius(t, f, i));
  return monic(t, acc);
}

CPoly lcm_of_conjugates(const FieldTower& t, const CPoly& f) {
  CPoly acc = f;
  for (uint32_t i = 1; i < t.m(); ++i) acc = lcm(t, acc, apply_frobenius(t, f, i));
  return monic(t, acc);
}

LPoly rgcd_of_conjugates(const FieldTower& t, const LPoly& f) {
  LPoly acc = f;
  for (uint32_t i = 1; i < t.m(); ++i) acc = rgcd(t, acc, apply_frobenius(t, f, i));
  return acc;
}

LPoly llcm_of_conjugates(const FieldTower& t, const LPoly& f) {
  LPoly acc = f;
  for (uint32_t i = 1; i < t.m(); ++i) acc = llcm(t, acc, apply_frobenius(t, f, i));
  return acc;
}

RootSpace intersect_conjugates(const FieldTower& t, const RootSpace& z) {
  RootSpace acc = z;
  for (uint32_t i = 1; i < t.m(); ++i) acc = intersect(t, acc, frobenius_image(t, z, i));
  return acc;
}

RootSpace sum_conjugates(const FieldTower& t, const RootSpace& z) {
  RootSpace acc = z;
  for (uint32_t i = 1; i < t.m(); ++i) acc = sum(t, acc, frobenius_image(t, z, i));
  return acc;
}

// Exponents s*q^i mod n, i < m.
std::set<uint64_t> conjugate_exponents(const FieldTower& t, uint64_t s, uint64_t n) {
  std::set<uint64_t> out;
  uint64_t v = s % n;
  for (uint32_t i = 0; i < t.m(); ++i) {
    out.insert(v);
    v = static_cast<uint64_t>((static_cast<unsigned __int128>(v) * t.q()) % n);
  }
  return out;
}

// |intersection over i of q^i Z| and |union over i of q^i Z|.
std::pair<uint64_t, uint64_t> conjugate_root_counts(const FieldTower& t, const RootSet& z) {
  const std::set<uint64_t> base(z.exponents.begin(), z.exponents.end());
  std::set<uint64_t> uni;
  uint64_t inter = 0;
  for (uint64_t s : z.exponents) {
    const std::set<uint64_t> orbit = conjugate_exponents(t, s, z.n);
    uni.insert(orbit.begin(), orbit.end());
    // s lies in every q^i Z iff s q^{-i} in Z for all i iff the orbit is in Z.
    inter += std::all_of(orbit.begin(), orbit.end(), [&](uint64_t v) { return base.count(v); });
  }
  return {inter, uni.size()};
}

std::string order_tag(uint32_t r) { return "skew[r=" + std::to_string(r) + "]"; }

// Visits the monic q^r-polynomials over GF(q) of q-degree d, optionally with
// nonzero coefficient of x.
void for_each_rational_lpoly(const FieldTower& t, uint32_t r, size_t d, bool unit_constant,
                             const std::function<void(const LPoly&)>& visit) {
  const std::vector<Element> base = t.subfield_elements(1);
  std::vector<size_t> idx(d, 0);
  if (unit_constant && d > 0) idx[0] = 1;
  std::vector<Element> coeffs(d + 1, t.one());
  for (;;) {
    for (size_t i = 0; i < d; ++i) coeffs[i] = base[idx[i]];
    visit(LPoly(r, coeffs));
    size_t pos = 0;
    while (pos < d) {
      if (++idx[pos] < base.size()) break;
      idx[pos] = (unit_constant && pos == 0) ? 1 : 0;
      ++pos;
    }
    if (pos == d) return;
  }
}

uint64_t rational_lpoly_count(const FieldTower& t, size_t d, bool unit_constant) {
  if (d == 0) return 1;
  const uint64_t q = t.q();
  uint64_t total = unit_constant ? q - 1 : q;
  for (size_t i = 1; i < d; ++i) {
    total *= q;
    if (total > kRationalSearchCap) return total;
  }
  return total;
}

Vec matrix_times(const FieldTower& t, std::span<const Element> v, const Matrix& a) {
  Vec out(a.cols(), t.zero());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == t.zero()) continue;
    for (size_t j = 0; j < a.cols(); ++j) out[j] = t.add(out[j], t.mul(v[i], a(i, j)));
  }
  return out;
}

Vec scaled(const FieldTower& t, std::span<const Element> v, Element c) {
  Vec out(v.begin(), v.end());
  for (Element& x : out) x = t.mul(x, c);
  return out;
}

bool is_rational(const FieldTower& t, const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i) {
    for (Element x : m.row(i)) {
      if (!t.in_subfield(x, 1)) return false;
    }
  }
  return true;
}

// x^e - c with c a nonzero constant, or nullopt.
std::optional<Element> binomial_constant(const FieldTower& t, const CPoly& h) {
  if (h.degree() < 1 || h.lead() != t.one()) return std::nullopt;
  for (int i = 1; i < h.degree(); ++i) {
    if (h.coeff(i) != t.zero()) return std::nullopt;
  }
  if (h.coeff(0) == t.zero()) return std::nullopt;
  return t.neg(h.coeff(0));
}

// Mixed-radix walk over GF(q) matrices of the given shape.
bool exists_rational_matrix(const FieldTower& t, size_t rows, size_t cols,
                            const std::function<bool(const Matrix&)>& accept) {
  const std::vector<Element> base = t.subfield_elements(1);
  const size_t cells = rows * cols;
  std::vector<size_t> idx(cells, 0);
  Matrix m(rows, cols);
  for (;;) {
    for (size_t c = 0; c < cells; ++c) m(c / cols, c % cols) = base[idx[c]];
    if (accept(m)) return true;
    size_t pos = 0;
    while (pos < cells && ++idx[pos] == base.size()) idx[pos++] = 0;
    if (pos == cells) return false;
  }
}

// Visits every k-dimensional subspace of GF(q^m)^n through its RREF.
void for_each_subspace(const FieldTower& t, size_t k, size_t n,
                       const std::function<bool(const LinearCode&)>& visit) {
  const std::vector<Element> field = t.subfield_elements(t.m());
  std::vector<size_t> pivots(k);
  for (size_t i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    // Free cells: row i, columns after pivot i that are not pivots.
    std::vector<std::pair<size_t, size_t>> cells;
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = pivots[i] + 1; j < n; ++j) {
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) cells.push_back({i, j});
      }
    }
    std::vector<size_t> idx(cells.size(), 0);
    Matrix m(k, n);
    for (size_t i = 0; i < k; ++i) m(i, pivots[i]) = t.one();
    for (;;) {
      for (size_t c = 0; c < cells.size(); ++c) m(cells[c].first, cells[c].second) = field[idx[c]];
      if (visit(LinearCode::span(t, m))) return;
      size_t pos = 0;
      while (pos < cells.size() && ++idx[pos] == field.size()) idx[pos++] = 0;
      if (pos == cells.size()) break;
    }
    // Next pivot combination in lexicographic order.
    size_t i = k;
    while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

// Number of k-dimensional subspaces of GF(Q)^n.
double gaussian_binomial(double big_q, size_t n, size_t k) {
  double out = 1;
  for (size_t i = 0; i < k; ++i) {
    out *= (std::pow(big_q, static_cast<double>(n - i)) - 1) / (std::pow(big_q, i + 1.0) - 1);
  }
  return out;
}

// Least length n' in [lower, upper) at which C is rank equivalent to a
// q^s-cyclic code; upper itself is attained through a shift equivalence.
uint64_t exhaustive_skew_length(const FieldTower& t, const LinearCode& c, uint32_t s,
                                uint64_t lower, uint64_t upper, uint64_t work_cap) {
  const LinearCode cs = galois_closure(t, c);
  const size_t k = c.k(), l = cs.k();
  // Coordinates of the rows of C in the rational basis of C*. Any rank
  // equivalence restricts to C* as a full-rank GF(q) matrix on these.
  Matrix x(k, l);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < l; ++j) x(i, j) = c.generator()(i, cs.pivots()[j]);
  }
  const double qm = static_cast<double>(t.subfield_order(t.m()));
  for (uint64_t np = std::max<uint64_t>(lower, 1); np < upper; ++np) {
    const double work = gaussian_binomial(qm, np, k) *
                        std::pow(static_cast<double>(t.q()), static_cast<double>(l * np));
    if (work > static_cast<double>(work_cap)) {
      throw Error(ErrorKind::kEnumerationCapExceeded, "skew length search too large");
    }
    bool found = false;
    for_each_subspace(t, k, np, [&](const LinearCode& cp) {
      if (!is_qr_cyclic(t, cp, s) || galois_closure(t, cp).k() != l) return false;
      found = exists_rational_matrix(t, l, np, [&](const Matrix& m) {
        return rank(t, m) == l && LinearCode::span(t, multiply(t, x, m)) == cp;
      });
      return found;
    });
    if (found) return np;
  }
  return upper;
}

}  // namespace

ClosurePolys closure_polys(const FieldTower& t, const LinearCode& c) {
  const LinearCode cs = galois_closure(t, c), c0 = galois_interior(t, c);
  if (!is_cyclic(t, cs) || !is_cyclic(t, c0)) {
    throw Error(ErrorKind::kNotSkewCyclic, "Galois closure is not cyclic");
  }
  const GenCheck s = generator_check_poly(t, cs), z = generator_check_poly(t, c0);
  return {s.g, s.h, z.g, z.h};
}

uint64_t rank_length(const FieldTower& t, const LinearCode& c, std::vector<PathValue>* paths) {
  std::vector<PathValue> local;
  auto record = [&](std::string name, uint64_t v) { local.push_back({std::move(name), v}); };
  const size_t n = c.n();
  const LinearCode cs = galois_closure(t, c);
  record("dim C*", cs.k());
  if (is_cyclic(t, cs)) record("deg h0", generator_check_poly(t, cs).h.degree());
  if (is_cyclic(t, c)) {
    const GenCheck gh = generator_check_poly(t, c);
    record("n - deg gcd(theta_i(g))", n - gcd_of_conjugates(t, gh.g).degree());
    record("deg lcm(theta_i(h))", lcm_of_conjugates(t, gh.h).degree());
    if (gcd_u64(t.q(), n) == 1) {
      const auto [inter, ignored] = conjugate_root_counts(t, root_set(t, gh.g, n));
      const auto [ignored2, uni] = conjugate_root_counts(t, root_set(t, gh.h, n));
      record("n - |cap q^i Z(g)|", n - inter);
      record("|cup q^i Z(h)|", uni);
      record("eta_q(C^perp)", mu_eta(t, generator_check_poly(t, dual(t, c)).g, n).second);
    }
  }
  for (uint32_t s : skew_orders(t, c)) {
    const uint32_t r = linearized_order(t, s);
    if (!has_linearized_view(t, r, n)) continue;
    const std::string tag = order_tag(r);
    const LGenCheck gh = generator_check_lpoly(t, c, r);
    const LPoly hp = perp(t, gh.h);
    record(tag + " n - qdeg rgcd(theta_i(G))", n - rgcd_of_conjugates(t, gh.g).qdegree());
    record(tag + " qdeg llcm(theta_i(H^perp))", llcm_of_conjugates(t, hp).qdegree());
    if (root_spaces_available(t, r, static_cast<uint32_t>(n))) {
      const RootSpace zg = root_space(t, gh.g, static_cast<uint32_t>(n));
      const RootSpace zh = root_space(t, hp, static_cast<uint32_t>(n));
      record(tag + " n - dim cap Z(G)^[i]", n - intersect_conjugates(t, zg).dim());
      record(tag + " dim sum Z(H^perp)^[i]", sum_conjugates(t, zh).dim());
    }
  }
  for (const PathValue& p : local) {
    if (p.value != local.front().value) {
      std::ostringstream msg;
      msg << "rank length paths disagree:";
      for (const PathValue& q : local) msg << " [" << q.path << " = " << q.value << "]";
      throw Error(ErrorKind::kPathDisagreement, msg.str());
    }
  }
  if (paths != nullptr) *paths = local;
  return local.front().value;
}

bool a_period_check(const FieldTower& t, const LinearCode& c, uint64_t p, Element a) {
  const size_t n = c.n();
  for (size_t i = 0; i < c.k(); ++i) {
    const auto row = c.generator().row(i);
    for (size_t j = 0; j < n; ++j) {
      if (row[(j + p) % n] != t.mul(a, row[j])) return false;
    }
  }
  return true;
}

uint64_t period_length(const FieldTower& t, const LinearCode& c) {
  const size_t n = c.n();
  uint64_t scan = n;
  for (uint64_t p = 1; p <= n; ++p) {
    if (n % p == 0 && a_period_check(t, c, p, t.one())) {
      scan = p;
      break;
    }
  }
  const LinearCode cs = galois_closure(t, c);
  if (!is_cyclic(t, cs)) return scan;
  const std::optional<uint64_t> ord = order_a(t, generator_check_poly(t, cs).h, t.one());
  if (!ord || *ord != scan) {
    throw Error(ErrorKind::kPathDisagreement,
                "ord(h0) = " + (ord ? std::to_string(*ord) : std::string("inf")) +
                    " but the codeword scan gives " + std::to_string(scan));
  }
  return scan;
}

std::optional<uint64_t> shift_length(const FieldTower& t, const LinearCode& c, Element a,
                                     uint32_t r) {
  if (skew_orders(t, c).empty()) throw Error(ErrorKind::kNotSkewCyclic, "code is not skew cyclic");
  if (a == t.zero() || !t.in_subfield(a, 1)) {
    throw Error(ErrorKind::kNotInBaseField, "shift scalar must lie in GF(q)*");
  }
  const CPoly h0 = closure_polys(t, c).h_zero;
  std::optional<uint64_t> best;
  for (Element b : nonzero_base(t)) {
    if (!t.solve_beta(b, r)) continue;
    const std::optional<uint64_t> o = order_a(t, h0, t.mul(a, b));
    if (o && (!best || *o < *best)) best = o;
  }
  const std::optional<uint64_t> ea = order_a(t, h0, a);
  if (r % t.m() == 0 && best != ea) {
    throw Error(ErrorKind::kPathDisagreement, "shift length with r = 0 differs from ord_a(h0)");
  }
  // x^e f = a^e f in the ideal gives c_{i+e} = a^{-e} c_i.
  if (ea && !a_period_check(t, c, *ea, t.inv(t.pow(a, *ea)))) {
    throw Error(ErrorKind::kVerificationFailed, "ord_a(h0) is not an a^{-e}-period");
  }
  return best;
}

SkewBounds skew_length_bounds(const FieldTower& t, const LinearCode& c, uint32_t s,
                              const SkewSearchOptions& options) {
  const std::vector<uint32_t> orders = skew_orders(t, c);
  if (std::find(orders.begin(), orders.end(), s % t.m()) == orders.end()) {
    throw Error(ErrorKind::kNotSkewCyclic, "code is not skew cyclic of order " + std::to_string(s));
  }
  SkewBounds out;
  out.order = s % t.m();
  out.lower = rank_length(t, c);
  std::optional<uint64_t> upper;
  for (Element a : nonzero_base(t)) {
    for (uint32_t r = 0; r < t.m(); ++r) {
      const std::optional<uint64_t> v = shift_length(t, c, a, r);
      if (v && (!upper || *v < *upper)) upper = v;
    }
  }
  out.upper = *upper;  // (a, r) = (1, 0) is always finite
  const LinearCode cs = galois_closure(t, c);
  const CPoly h0 = generator_check_poly(t, cs).h;
  if (h0.degree() == 0) {
    out.attained = true;
    out.witness = LinearCode::zero(0);
  } else if (const std::optional<Element> cst = binomial_constant(t, h0)) {
    const size_t e = h0.degree();
    for (Element a : nonzero_base(t)) {
      if (t.pow(a, e) != *cst) continue;
      const LinearCode sub[] = {c};
      const RankEquivalence eq =
          build_equivalence(t, cs, LinearCode::full(t, e), a, 0, t.one(), sub);
      out.witness = apply(t, eq, c);
      if (!is_qr_cyclic(t, *out.witness, out.order)) {
        throw Error(ErrorKind::kVerificationFailed, "binomial witness is not skew cyclic");
      }
      out.attained = true;
      break;
    }
  }
  if (out.attained == true) {
    out.exact = out.lower;
  } else if (options.exhaustive) {
    out.exact = exhaustive_skew_length(t, c, out.order, out.lower, out.upper, options.work_cap);
    out.attained = *out.exact == out.lower;
  }
  return out;
}

DegeneracyReport degeneracy_report(const FieldTower& t, const LinearCode& c) {
  const std::vector<uint32_t> orders = skew_orders(t, c);
  if (orders.empty()) throw Error(ErrorKind::kNotSkewCyclic, "code is not skew cyclic");
  DegeneracyReport out;
  const size_t n = c.n();
  auto vote = [&](std::string id, bool v) { out.criteria.push_back({std::move(id), v}); };
  auto skip = [&](std::string id) { out.skipped.push_back(std::move(id)); };
  vote("l_R<n", galois_closure(t, c).k() < n);

  if (is_cyclic(t, c)) {
    const GenCheck gh = generator_check_poly(t, c);
    const CPoly xn = xn_minus_1(t, n);
    vote("cyclic.2", gcd_of_conjugates(t, gh.g).degree() > 0);
    vote("cyclic.3", lcm_of_conjugates(t, gh.h) != xn);
    if (gcd(t, gh.g, gh.h).degree() == 0) {
      // prod (1 - theta_i(e)) is the idempotent of (C*)^c, nonzero exactly
      // when C* is proper.
      const CPoly e = idempotent_generator(t, c);
      CPoly prod = CPoly::constant(t.one());
      for (uint32_t i = 0; i < t.m(); ++i) {
        const CPoly factor = sub(t, CPoly::constant(t.one()), apply_frobenius(t, e, i));
        prod = mod(t, mul(t, prod, factor), xn);
      }
      vote("cyclic.4", !prod.is_zero());
    } else {
      skip("cyclic.4");
    }
    if (gcd_u64(t.q(), n) == 1) {
      const uint64_t eta = mu_eta(t, generator_check_poly(t, dual(t, c)).g, n).second;
      vote("cyclic.5", eta < n);
      vote("cyclic.6", conjugate_root_counts(t, root_set(t, gh.g, n)).first > 0);
      vote("cyclic.7", conjugate_root_counts(t, root_set(t, gh.h, n)).second < n);
    } else {
      skip("cyclic.5");
      skip("cyclic.6");
      skip("cyclic.7");
    }
    const std::vector<Factor> rational = factor_xn_minus_1(t, n, 1);
    vote("cyclic.8", std::any_of(rational.begin(), rational.end(), [&](const Factor& f) {
           return divides(t, f.poly, gh.g);
         }));
    bool item9 = false;
    for (const CPoly& f : all_divisors(t, rational)) {
      if (f.degree() < static_cast<int>(n) && divides(t, gh.h, f)) {
        item9 = true;
        break;
      }
    }
    vote("cyclic.9", item9);
  }

  for (uint32_t s : orders) {
    const uint32_t r = linearized_order(t, s);
    const std::string tag = order_tag(r);
    if (!has_linearized_view(t, r, n)) {
      skip(tag);
      continue;
    }
    const LGenCheck gh = generator_check_lpoly(t, c, r);
    const LPoly hp = perp(t, gh.h);
    vote(tag + ".2", rgcd_of_conjugates(t, gh.g) != LPoly::identity(r));
    vote(tag + ".3", llcm_of_conjugates(t, hp) != x_rn_minus_x(t, r, static_cast<uint32_t>(n)));
    if (root_spaces_available(t, r, static_cast<uint32_t>(n))) {
      vote(tag + ".4", intersect_conjugates(t, root_space(t, gh.g, n)).dim() > 0);
      vote(tag + ".5", sum_conjugates(t, root_space(t, hp, n)).dim() < n);
    } else {
      skip(tag + ".4");
      skip(tag + ".5");
    }
    uint64_t work6 = 0, work7 = 0;
    for (int d = 1; d <= gh.g.qdegree(); ++d) work6 += rational_lpoly_count(t, d, true);
    for (size_t d = gh.h.qdegree(); d < n; ++d) work7 += rational_lpoly_count(t, d, false);
    if (work6 <= kRationalSearchCap) {
      bool item6 = false;
      for (int d = 1; d <= gh.g.qdegree() && !item6; ++d) {
        for_each_rational_lpoly(t, r, d, true, [&](const LPoly& f) {
          item6 = item6 || right_divides(t, f, gh.g);
        });
      }
      vote(tag + ".6", item6);
    } else {
      skip(tag + ".6");
    }
    // H is a left factor of H_0 = H (x) Q, so the rational multiples that
    // witness degeneracy are taken on the right of H.
    if (work7 <= kRationalSearchCap) {
      bool item7 = false;
      for (size_t d = gh.h.qdegree(); d < n && !item7; ++d) {
        for_each_rational_lpoly(t, r, d, false, [&](const LPoly& f) {
          item7 = item7 || left_divides(t, gh.h, f);
        });
      }
      vote(tag + ".7", item7);
    } else {
      skip(tag + ".7");
    }
  }

  out.degenerate = out.criteria.front().value;
  for (const Criterion& cr : out.criteria) {
    if (cr.value != out.degenerate) {
      std::ostringstream msg;
      msg << "degeneracy criteria disagree:";
      for (const Criterion& x : out.criteria) msg << " " << x.id << "=" << x.value;
      throw Error(ErrorKind::kCriterionDisagreement, msg.str());
    }
  }
  return out;
}

Codeword apply(const FieldTower& t, const RankEquivalence& eq, std::span<const Element> c) {
  return scaled(t, matrix_times(t, c, eq.A), eq.beta);
}

LinearCode apply(const FieldTower& t, const RankEquivalence& eq, const LinearCode& c) {
  Matrix rows(0, eq.A.cols());
  for (size_t i = 0; i < c.k(); ++i) rows.append_row(apply(t, eq, c.generator().row(i)));
  return LinearCode::span(t, rows);
}

RankEquivalence build_equivalence(const FieldTower& t, const LinearCode& v,
                                  const LinearCode& v_prime, Element a, uint32_t r,
                                  Element beta, std::span<const LinearCode> subcodes) {
  if (a == t.zero() || !t.in_subfield(a, 1)) {
    throw Error(ErrorKind::kNotInBaseField, "shift scalar must lie in GF(q)*");
  }
  if (beta == t.zero() || !t.in_subfield(beta, t.m())) {
    throw Error(ErrorKind::kZeroInput, "beta must lie in GF(q^m)*");
  }
  for (const LinearCode* w : {&v, &v_prime}) {
    if (!is_cyclic(t, *w)) throw Error(ErrorKind::kNotCyclic, "equivalence spaces must be cyclic");
    if (!is_galois_closed(t, *w)) {
      throw Error(ErrorKind::kNotInBaseField, "equivalence spaces must be Galois closed");
    }
  }
  const Element b = t.div(t.frobenius(beta, r), beta);
  if (!t.in_subfield(b, 1)) throw Error(ErrorKind::kNoBetaForB, "beta^[r] / beta is not in GF(q)");
  const size_t n = v.n(), np = v_prime.n(), k = v.k();
  const GenCheck gh = generator_check_poly(t, v), ghp = generator_check_poly(t, v_prime);
  const Element ab = t.mul(a, b);
  if (v_prime.k() != k || scale(t, ghp.h, t.pow(ab, k)) != scale_variable(t, gh.h, ab)) {
    throw Error(ErrorKind::kCheckPolyMismatch, "(ab)^k h'(x) != h(abx)");
  }

  // Rows s^i(g) complete to a basis with unit vectors; A sends them to
  // (ab)^i s^i(g') and the completion to zero.
  Matrix basis(0, n), target(0, np);
  // For k = 0 the generators are x^n - 1 and have no codeword form.
  Codeword g = k ? as_codeword(t, gh.g, n) : Codeword(n, t.zero());
  Codeword gp = k ? as_codeword(t, ghp.g, np) : Codeword(np, t.zero());
  Element coef = t.one();
  for (size_t i = 0; i < k; ++i) {
    basis.append_row(g);
    target.append_row(scaled(t, gp, coef));
    g = cyclic_shift(g);
    gp = cyclic_shift(gp);
    coef = t.mul(coef, ab);
  }
  const RowEchelon e = rref(t, basis);
  std::vector<bool> pivot(n, false);
  for (size_t p : e.pivots) pivot[p] = true;
  for (size_t j = 0; j < n; ++j) {
    if (pivot[j]) continue;
    Vec unit(n, t.zero());
    unit[j] = t.one();
    basis.append_row(unit);
    target.append_row(Vec(np, t.zero()));
  }
  const std::optional<Matrix> inv = inverse(t, basis);
  if (!inv) throw Error(ErrorKind::kVerificationFailed, "shifts of g are not independent");
  RankEquivalence eq{beta, multiply(t, *inv, target), v, v_prime, a, r, b};
  if (!is_rational(t, eq.A)) throw Error(ErrorKind::kVerificationFailed, "A is not over GF(q)");

  const LinearCode image = apply(t, eq, v);
  if (image.k() != k || image != v_prime) {
    throw Error(ErrorKind::kVerificationFailed, "phi is not a bijection onto V'");
  }
  // sigma_{r,n}(G) A = a beta^{[r]-1} theta_r(G) s_{n'}(A).
  Matrix shifted_a(n, np);
  for (size_t i = 0; i < n; ++i) {
    const Codeword row = cyclic_shift(eq.A.row(i));
    for (size_t j = 0; j < np; ++j) shifted_a(i, j) = row[j];
  }
  for (size_t i = 0; i < k; ++i) {
    const auto row = v.generator().row(i);
    const Vec lhs = matrix_times(t, skew_shift(t, row, r), eq.A);
    const Vec rhs = scaled(t, matrix_times(t, frobenius(t, row, r), shifted_a), ab);
    if (lhs != rhs) throw Error(ErrorKind::kVerificationFailed, "commutation identity fails");
  }
  auto check_weight = [&](const Codeword& c) {
    if (rank_weight(t, c) != rank_weight(t, apply(t, eq, c))) {
      throw Error(ErrorKind::kVerificationFailed, "phi changes a rank weight");
    }
  };
  if (codeword_count(t, v) <= kWeightSampleSize) {
    for_each_codeword(t, v, kWeightSampleSize, check_weight);
  } else {
    std::mt19937_64 rng(0);
    const std::vector<Element> field = t.subfield_elements(t.m());
    for (uint64_t s = 0; s < kWeightSampleSize; ++s) {
      Codeword c(n, t.zero());
      for (size_t i = 0; i < k; ++i) {
        const Element x = field[rng() % field.size()];
        const auto row = v.generator().row(i);
        for (size_t j = 0; j < n; ++j) c[j] = t.add(c[j], t.mul(x, row[j]));
      }
      check_weight(c);
    }
  }
  for (const LinearCode& d : subcodes) {
    if (intersect(t, d, v) != d) throw Error(ErrorKind::kLengthMismatch, "subcode not inside V");
    const LinearCode img = apply(t, eq, d);
    for (uint32_t s : skew_orders(t, d)) {
      if (!is_qr_cyclic(t, img, s)) {
        throw Error(ErrorKind::kVerificationFailed, "phi breaks a skew cyclic subcode");
      }
    }
  }
  return eq;
}

std::optional<RankEquivalence> shift_equivalence(const FieldTower& t, const LinearCode& c,
                                                 Element a, uint32_t r) {
  const std::optional<uint64_t> e = shift_length(t, c, a, r);
  if (!e) return std::nullopt;
  const CPoly h0 = closure_polys(t, c).h_zero;
  for (Element b : nonzero_base(t)) {
    const std::optional<Element> beta = t.solve_beta(b, r);
    const Element ab = t.mul(a, b);
    if (!beta || order_a(t, h0, ab) != e) continue;
    const size_t k = h0.degree();
    const CPoly hp = scale(t, scale_variable(t, h0, ab), t.inv(t.pow(ab, k)));
    const auto [gp, rem] = divmod(t, xn_minus_1(t, *e), hp);
    if (!rem.is_zero()) throw Error(ErrorKind::kVerificationFailed, "h' does not divide x^e - 1");
    const LinearCode sub[] = {c};
    return build_equivalence(t, galois_closure(t, c), code_from_gpoly(t, gp, *e), a, r, *beta, sub);
  }
  throw Error(ErrorKind::kPathDisagreement, "no b attains the shift length");
}

ShortenedCode shorten_pseudo_cyclic(const FieldTower& t, const LinearCode& c, uint64_t cap) {
  if (!is_cyclic(t, c)) throw Error(ErrorKind::kNotCyclic, "code is not cyclic");
  const ClosurePolys cp = closure_polys(t, c);
  const size_t e = cp.h_zero.degree();
  if (e != galois_closure(t, c).k()) {
    throw Error(ErrorKind::kPathDisagreement, "deg h0 differs from dim C*");
  }
  ShortenedCode out;
  out.modulus = cp.h_zero;
  out.multiplier = cp.g_star;
  Matrix rows(0, e);
  for (size_t i = 0; i < c.k(); ++i) {
    const auto [f, rem] = divmod(t, as_cpoly(c.generator().row(i)), cp.g_star);
    if (!rem.is_zero()) throw Error(ErrorKind::kVerificationFailed, "codeword not in (g*)");
    rows.append_row(as_codeword(t, f, e));
  }
  out.code = e == 0 ? LinearCode::zero(0) : LinearCode::span(t, rows);
  if (out.code.k() != c.k()) throw Error(ErrorKind::kVerificationFailed, "phi is not injective");
  const CPoly x = CPoly::monomial(t.one(), 1);
  for (size_t i = 0; i < out.code.k(); ++i) {
    const CPoly xf = mod(t, mul(t, x, as_cpoly(out.code.generator().row(i))), cp.h_zero);
    if (!out.code.contains(t, as_codeword(t, xf, e))) {
      throw Error(ErrorKind::kVerificationFailed, "shortened code is not an ideal mod h0");
    }
  }
  out.original_distribution = rank_weight_distribution(t, c, cap);
  out.distribution = rank_weight_distribution(t, out.code, cap);
  if (out.distribution != out.original_distribution) {
    throw Error(ErrorKind::kVerificationFailed, "shortening changes the weight distribution");
  }
  out.cyclic = e > 0 && is_cyclic(t, out.code);
  if (e > 0 && cp.h_zero == binomial(t, e, t.one()) && !out.cyclic) {
    throw Error(ErrorKind::kVerificationFailed, "h0 = x^e - 1 but the shortened code is not cyclic");
  }
  out.description = "f(x) -> f(x) g*(x) from GF(q^m)[x]/(h0(x)) onto (g*(x))/(x^" +
                    std::to_string(c.n()) + " - 1), length " + std::to_string(c.n()) + " -> " +
                    std::to_string(e);
  return out;
}

ShortenedCode shorten_pseudo_skew(const FieldTower& t, const LinearCode& c, uint32_t r,
                                  uint64_t cap) {
  const size_t n = c.n();
  if (r == 0) r = t.m();
  if (!is_qr_cyclic(t, c, r % t.m())) throw Error(ErrorKind::kNotSkewCyclic, "not q^r-cyclic");
  if (!has_linearized_view(t, r, n)) {
    throw Error(ErrorKind::kSkewDivisibilityViolated, "m does not divide rn");
  }
  const LGenCheck gh = generator_check_lpoly(t, c, r);
  const LPoly g_star = conjugate_closures_l(t, gh.g, n).star;
  const LPoly h_zero = conjugate_closures_l(t, gh.h, n).lower_zero;
  const LGenCheck closure = generator_check_lpoly(t, galois_closure(t, c), r);
  if (closure.g != g_star || closure.h != h_zero) {
    throw Error(ErrorKind::kPathDisagreement, "closure polynomials of C* differ from G*, H_0");
  }
  if (!is_central(t, h_zero)) {
    throw Error(ErrorKind::kH0NotCentral, "H_0 is not central; no two-sided quotient");
  }
  const size_t e = h_zero.qdegree();
  ShortenedCode out;
  out.lmodulus = h_zero;
  out.lmultiplier = g_star;
  Matrix rows(0, e);
  for (size_t i = 0; i < c.k(); ++i) {
    const auto [f, rem] = right_divmod(t, as_lpoly(c.generator().row(i), r), g_star);
    if (!rem.is_zero()) throw Error(ErrorKind::kVerificationFailed, "codeword not in (G*)");
    rows.append_row(as_codeword(t, f, e));
  }
  out.code = e == 0 ? LinearCode::zero(0) : LinearCode::span(t, rows);
  if (out.code.k() != c.k()) throw Error(ErrorKind::kVerificationFailed, "phi is not injective");
  const LPoly xr = LPoly::monomial(r, t.one(), 1);
  for (size_t i = 0; i < out.code.k(); ++i) {
    const LPoly f = as_lpoly(out.code.generator().row(i), r);
    const LPoly xf = right_divmod(t, symbolic_product(t, xr, f), h_zero).second;
    if (!out.code.contains(t, as_codeword(t, xf, e))) {
      throw Error(ErrorKind::kVerificationFailed, "shortened code is not a left ideal mod H_0");
    }
  }
  out.original_distribution = rank_weight_distribution(t, c, cap);
  out.distribution = rank_weight_distribution(t, out.code, cap);
  if (out.distribution != out.original_distribution) {
    throw Error(ErrorKind::kVerificationFailed, "shortening changes the weight distribution");
  }
  out.cyclic = e > 0 && is_qr_cyclic(t, out.code, r % t.m());
  out.description = "F(x) -> F(x) (x) G*(x) from L[x]/(H_0(x)) onto (G*(x))/(x^[" +
                    std::to_string(r * n) + "] - x), length " + std::to_string(n) + " -> " +
                    std::to_string(e);
  return out;
}

std::pair<uint64_t, uint64_t> eta_duality_check(const FieldTower& t, const LinearCode& c) {
  if (!is_cyclic(t, c)) throw Error(ErrorKind::kNotCyclic, "code is not cyclic");
  const size_t n = c.n();
  if (gcd_u64(t.q(), n) != 1) throw Error(ErrorKind::kNotCoprime, "q and n are not coprime");
  const uint64_t eta = mu_eta(t, generator_check_poly(t, c).g, n).second;
  const uint64_t lr = galois_closure(t, dual(t, c)).k();
  if (eta != lr) {
    throw Error(ErrorKind::kPathDisagreement, "eta_q(C) = " + std::to_string(eta) +
                                                  " but l_R(C^perp) = " + std::to_string(lr));
  }
  return {eta, lr};
}

LengthReport analyze(const FieldTower& t, const LinearCode& c, const SkewSearchOptions& options) {
  const std::vector<uint32_t> orders = skew_orders(t, c);
  if (orders.empty()) throw Error(ErrorKind::kNotSkewCyclic, "code is not skew cyclic");
  LengthReport rep;
  rep.n = c.n();
  rep.k = c.k();
  rep.l_R = rank_length(t, c, &rep.rank_paths);
  rep.l_P = period_length(t, c);
  for (Element a : nonzero_base(t)) {
    for (uint32_t r = 0; r < t.m(); ++r) rep.shift_lengths.push_back({a, r, shift_length(t, c, a, r)});
  }
  rep.skew = skew_length_bounds(t, c, orders.front(), options);
  DegeneracyReport deg = degeneracy_report(t, c);
  rep.degenerate = deg.degenerate;
  rep.criteria = std::move(deg.criteria);
  rep.skipped = std::move(deg.skipped);

  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kVerificationFailed, "length chain: " + what);
  };
  uint64_t min_shift = rep.l_P;
  for (const ShiftLength& s : rep.shift_lengths) {
    if (s.value) min_shift = std::min(min_shift, *s.value);
    if (s.a == t.one()) require(s.value && *s.value <= rep.l_P, "l_{Sh,1,r} <= l_P");
  }
  require(rep.skew.lower == rep.l_R, "skew lower bound equals l_R");
  require(rep.l_R <= rep.skew.upper, "l_R <= skew upper bound");
  require(rep.skew.upper <= min_shift, "skew upper bound <= shift lengths");
  require(rep.l_P <= rep.n && rep.n % rep.l_P == 0, "l_P divides n");
  require(rep.degenerate == (rep.l_R < rep.n), "degenerate iff l_R < n");
  const LinearCode cs = galois_closure(t, c);
  require(period_length(t, cs) == rep.l_P, "l_P(C*) = l_P(C)");
  return rep;
}

SingletonAudit singleton_audit(const FieldTower& t, const LinearCode& c,
                               const LengthReport& report, uint64_t cap) {
  SingletonAudit out;
  out.d_R = min_rank_distance(t, c, cap);
  if (!out.d_R) return out;
  const int64_t k = static_cast<int64_t>(c.k());
  auto check = [&](std::string name, uint64_t l) {
    const bool holds = static_cast<int64_t>(*out.d_R) <= static_cast<int64_t>(l) - k + 1;
    out.checks.push_back({std::move(name), l, holds});
    out.holds = out.holds && holds;
  };
  check("R", report.l_R);
  check("Sk lower", report.skew.lower);
  check("Sk upper", report.skew.upper);
  if (report.skew.exact) check("Sk", *report.skew.exact);
  for (const ShiftLength& s : report.shift_lengths) {
    if (s.value) check("Sh(" + t.format(s.a) + "," + std::to_string(s.r) + ")", *s.value);
  }
  check("P", report.l_P);
  return out;
}

}  // namespace rankcodes
