/*
 * Copyright 2026 The bidisk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <map>
#include <vector>

#include "bidisk/linalg.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

// Exponent pair (z1 power, z2 power) under graded lex with z1 > z2.
struct Mono {
  int a = 0, b = 0;
  int deg() const { return a + b; }
  bool divides(const Mono &o) const { return a <= o.a && b <= o.b; }
};
struct GrlexLess {
  bool operator()(const Mono &x, const Mono &y) const {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return x.a < y.a;
  }
};

struct SPoly {
  std::map<Mono, GQ, GrlexLess> t;
  bool is_zero() const { return t.empty(); }
  const Mono &lm() const { return t.rbegin()->first; }
  const GQ &lc() const { return t.rbegin()->second; }
  void add(const Mono &m, const GQ &c);
};

SPoly to_spoly(const Poly2<GQ> &p);
Poly2<GQ> to_poly2(const SPoly &p);
SPoly mul_term(const SPoly &p, const Mono &m, const GQ &c);
SPoly sub(const SPoly &p, const SPoly &q);

// Reduced Groebner basis (Buchberger with the sugar selection strategy).
std::vector<SPoly> groebner(std::vector<SPoly> gens);
SPoly normal_form(const SPoly &f, const std::vector<SPoly> &G);

// Quotient ring C[z1,z2]/I for a zero-dimensional ideal.
struct Quotient {
  std::vector<SPoly> G;
  std::vector<Mono> basis; // standard monomials
  QMat M1, M2;             // multiplication by z1, z2 (columns = images of basis)
  int dim() const { return int(basis.size()); }
};
// Throws PreconditionError when the ideal is not zero-dimensional.
Quotient quotient_ring(const std::vector<Poly2<GQ>> &gens);

} // namespace bidisk
