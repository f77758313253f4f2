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


// Linear codes over GF(q^m) as canonical row spaces, with the rank metric,
// Galois closures, skew cyclicity and polynomial descriptions.

#ifndef RANKCODES_CODE_H_
#define RANKCODES_CODE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rankcodes/cpoly.h"
#include "rankcodes/gf.h"
#include "rankcodes/linalg.h"
#include "rankcodes/lpoly.h"

namespace rankcodes {

using Codeword = Vec;

class LinearCode {
 public:
  LinearCode() = default;
  // Row space of `rows` (any spanning set) in GF(q^m)^n.
  static LinearCode span(const FieldTower& t, const Matrix& rows);
  static LinearCode full(const FieldTower& t, size_t n);
  static LinearCode zero(size_t n);

  size_t n() const { return n_; }
  size_t k() const { return gen_.rows(); }
  // k x n reduced row echelon form.
  const Matrix& generator() const { return gen_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  bool contains(const FieldTower& t, std::span<const Element> c) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.n_ == b.n_ && a.gen_ == b.gen_;
  }

 private:
  size_t n_ = 0;
  Matrix gen_;
  std::vector<size_t> pivots_;
};

size_t rank_weight(const FieldTower& t, std::span<const Element> c);

// s_n.
Codeword cyclic_shift(std::span<const Element> c);
// theta_s.
Codeword frobenius(const FieldTower& t, std::span<const Element> c, int64_t s);
// sigma_{r,n} = theta_r o s_n.
Codeword skew_shift(const FieldTower& t, std::span<const Element> c, int64_t r);

LinearCode dual(const FieldTower& t, const LinearCode& c);
LinearCode sum(const FieldTower& t, const LinearCode& a, const LinearCode& b);
LinearCode intersect(const FieldTower& t, const LinearCode& a, const LinearCode& b);
LinearCode frobenius(const FieldTower& t, const LinearCode& c, int64_t s);
LinearCode galois_closure(const FieldTower& t, const LinearCode& c);
LinearCode galois_interior(const FieldTower& t, const LinearCode& c);
bool is_galois_closed(const FieldTower& t, const LinearCode& c);
bool is_qr_cyclic(const FieldTower& t, const LinearCode& c, int64_t s);
bool is_cyclic(const FieldTower& t, const LinearCode& c);
// Orders s in 0..m-1 with sigma_{s,n}(C) in C.
std::vector<uint32_t> skew_orders(const FieldTower& t, const LinearCode& c);

// Codeword <-> residue of degree < n.
CPoly as_cpoly(std::span<const Element> c);
Codeword as_codeword(const FieldTower& t, const CPoly& f, size_t n);
LPoly as_lpoly(std::span<const Element> c, uint32_t r);
Codeword as_codeword(const FieldTower& t, const LPoly& f, size_t n);

// Monic codeword of least degree in polynomial coordinates.
std::optional<Codeword> min_degree_codeword(const FieldTower& t, const LinearCode& c);

struct GenCheck {
  CPoly g;
  CPoly h;
};
struct LGenCheck {
  LPoly g;
  LPoly h;
};

GenCheck generator_check_poly(const FieldTower& t, const LinearCode& c);
LGenCheck generator_check_lpoly(const FieldTower& t, const LinearCode& c, uint32_t r);
CPoly idempotent_generator(const FieldTower& t, const LinearCode& c);
LinearCode cyclic_complement(const FieldTower& t, const LinearCode& c);

LinearCode code_from_gpoly(const FieldTower& t, const CPoly& g, size_t n);
LinearCode code_from_root_exponents(const FieldTower& t, const RootSet& s);
LinearCode code_from_glpoly(const FieldTower& t, const LPoly& g, size_t n);
// The ideal generated by f in GF(q^m)[x]/(x^n - 1); f need not divide.
LinearCode code_from_ideal_element(const FieldTower& t, const CPoly& f, size_t n);

// Calls visit(c) for each of the q^{mk} codewords. Throws
// EnumerationCapExceeded beyond cap.
void for_each_codeword(const FieldTower& t, const LinearCode& c, uint64_t cap,
                       const std::function<void(const Codeword&)>& visit);
uint64_t codeword_count(const FieldTower& t, const LinearCode& c);
// weight -> number of codewords.
std::map<size_t, uint64_t> rank_weight_distribution(const FieldTower& t, const LinearCode& c,
                                                    uint64_t cap = uint64_t{1} << 16);
// nullopt for the zero code.
std::optional<size_t> min_rank_distance(const FieldTower& t, const LinearCode& c,
                                        uint64_t cap = uint64_t{1} << 16);

}  // namespace rankcodes

#endif  // RANKCODES_CODE_H_
