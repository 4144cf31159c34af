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
#include "bidisk/stability.hpp"

#include <cmath>
#include <limits>

#include "bidisk/intersect.hpp"

namespace bidisk {

SemistabilityReport zero_free_sweep(const Poly2<cd> &p, const StabilityOptions &opt) {
  if (p.is_zero()) throw PreconditionError("zero polynomial");
  SemistabilityReport rep;
  rep.radii = opt.radii;
  rep.angles = opt.angles;
  rep.collar = opt.collar;
  double mn = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (int pass = 0; pass < 2; ++pass) {
    Poly2<cd> q = pass == 0 ? p : swap_vars(p);
    auto samples = stability_sweep(q, opt.radii, opt.angles, opt.collar, opt.exec);
    for (auto &s : samples) {
      mn = std::min(mn, s.min_root);
      if (s.min_root < 1.0 - opt.collar) ok = false;
      // boundary-touching slices are reported, not failed
      if (s.min_root < 1.0 + 1e-4) {
        if (rep.witnesses.size() < 16) {
          // recover the offending root for the witness
          std::vector<cd> c(q.m + 1);
          for (int k = 0; k <= q.m; ++k) {
            cd v = 0;
            for (int j = q.n; j >= 0; --j) v = v * s.z1 + q.at(j, k);
            c[k] = v;
          }
          UPoly<cd> u(c);
          cd w = 0;
          double best = std::numeric_limits<double>::infinity();
          if (!u.is_zero())
            for (cd r : roots(u))
              if (std::abs(r) < best) { best = std::abs(r); w = r; }
          rep.witnesses.push_back(pass == 0 ? std::make_pair(s.z1, w) : std::make_pair(w, s.z1));
        }
      }
    }
  }
  rep.min_modulus_observed = mn;
  rep.zero_free_verified = ok;
  return rep;
}

SemistabilityReport check_semistable(const Poly2<GQ> &p, const StabilityOptions &opt) {
  if (p.is_zero()) throw PreconditionError("zero polynomial");
  SemistabilityReport rep = zero_free_sweep(to_float(p), opt);
  Poly2<GQ> g = gcd(p, reflect(p));
  auto nb = g.natural_bidegree();
  rep.gcd_trivial = nb.first == 0 && nb.second == 0;
  rep.gcd_method = "exact";
  return rep;
}

SemistabilityReport check_semistable(const Poly2<cd> &p, const StabilityOptions &opt) {
  SemistabilityReport rep = zero_free_sweep(p, opt);
  rep.gcd_method = "bezout";
  try {
    auto r = common_zeros(p, reflect(p));
    rep.gcd_trivial = r.total == p.n * p.m * 2;
  } catch (const std::exception &) {
    rep.gcd_trivial = false;
  }
  return rep;
}

} // namespace bidisk
