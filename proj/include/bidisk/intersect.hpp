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

#include <optional>
#include <string>
#include <vector>

#include "bidisk/groebner.hpp"
#include "bidisk/linalg.hpp"
#include "bidisk/poly.hpp"

namespace bidisk {

// One coordinate on the Riemann sphere.
struct SphereCoord {
  bool inf = false;
  cd v = 0;
  std::optional<GQ> exact; // set when the coordinate is a verified Gaussian rational
  double modulus() const { return inf ? std::numeric_limits<double>::infinity() : std::abs(v); }
};

enum class Region { DxDinv, Torus, DinvxD, Other };
std::string region_name(Region r);
Region classify(const SphereCoord &a, const SphereCoord &b, double tol = 1e-8);
bool in_open_bidisk(const SphereCoord &a, const SphereCoord &b, double tol = 1e-8);

struct LocatedZero {
  SphereCoord z1, z2;
  int multiplicity = 0;
  Region region = Region::Other;
  int chart = 0;        // bit 0: z1 -> 1/z1, bit 1: z2 -> 1/z2
  cd x = 0, y = 0;      // chart coordinates
  bool exact = false;   // chart coordinates are verified Gaussian rationals
  GQ ex, ey;
};

struct IntersectionReport {
  std::vector<LocatedZero> zeros;
  int total = 0;
  std::pair<int, int> bideg1, bideg2;
  int bezout = 0;
  int torus_total = 0;
  int disk_total = 0; // zeros in the open bidisk
  std::string route;  // "groebner" or "float"
};

// Chart transform: bit 0 flips z1, bit 1 flips z2 (each at its declared degree).
template <class S> Poly2<S> to_chart(const Poly2<S> &p, int chart) {
  Poly2<S> q = p;
  if (chart & 1) q = flip1(q);
  if (chart & 2) q = flip2(q);
  return q;
}

IntersectionReport common_zeros(const Poly2<GQ> &p1, const Poly2<GQ> &p2, unsigned seed = 0);
IntersectionReport common_zeros(const Poly2<cd> &p1, const Poly2<cd> &p2, unsigned seed = 0);

// Multiplicity at a finite point. Exact point: joint generalized eigenspace of the
// quotient multiplication matrices. Approximate point with exact polynomials: matched
// against the exact root structure. Float polynomials: local dual-space nullity.
int multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2);
int multiplicity(const Poly2<GQ> &p1, const Poly2<GQ> &p2, cd l1, cd l2);
int multiplicity(const Poly2<cd> &p1, const Poly2<cd> &p2, cd l1, cd l2, double tol = 1e-7);
int multiplicity_from_quotient(const Quotient &Q, const GQ &l1, const GQ &l2);

// Local dual-space (Macaulay) nullity; exact for EXACT input at a rational point.
int dual_space_multiplicity(const Poly2<cd> &p1, const Poly2<cd> &p2, cd l1, cd l2, double tol = 1e-7,
                            int dmax = 40);

// Fulton's reduction algorithm at a finite Gaussian-rational point.
int fulton_reduce(const Poly2<GQ> &p1, const Poly2<GQ> &p2, const GQ &l1, const GQ &l2,
                  int step_budget = 100000);

// p(z1 + l1, z2 + l2)
Poly2<GQ> translate(const Poly2<GQ> &p, const GQ &l1, const GQ &l2);
Poly2<cd> translate(const Poly2<cd> &p, cd l1, cd l2);

struct TorusTotal {
  int torus_total = 0;   // from the (p, reflect p) zeros on T^2
  int disk_total = 0;    // zeros of (q, reflect q) in D^2, q = flip2(p)
  int via_disk = 0;      // 2nm - 2 * disk_total
  bool agree = false;
};
TorusTotal torus_multiplicity_total(const Poly2<GQ> &p);
TorusTotal torus_multiplicity_total(const Poly2<cd> &p);

} // namespace bidisk
