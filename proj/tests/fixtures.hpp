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

#include <string>
#include <tuple>
#include <vector>

#include "bidisk/json_io.hpp"

namespace fx {

using namespace bidisk;

inline Poly2<GQ> P(int n, int m, std::vector<std::tuple<int, int, long>> t) {
  Poly2<GQ> p(n, m);
  for (auto [j, k, c] : t) p.at(j, k) = GQ(c);
  return p;
}

inline PolyInput load(const std::string &name) { return read_poly_file(std::string(FIXTURE_DIR) + "/" + name + ".json"); }

inline Poly2<GQ> p0() { return P(1, 1, {{0, 0, 2}, {1, 0, -1}, {0, 1, -1}}); }
inline Poly2<GQ> ex1() { return P(1, 2, {{0, 0, 4}, {1, 0, -1}, {0, 1, -3}, {1, 1, -1}, {0, 2, 1}}); }
inline Poly2<GQ> ex3() {
  return P(3, 1, {{0, 0, 4}, {1, 0, -5}, {0, 1, -2}, {1, 1, 2}, {2, 0, 3}, {2, 1, -1}, {3, 1, -1}});
}
inline Poly2<cd> ex2() { return load("ex2").pf; }
inline Poly2<GQ> stable4() { return P(1, 1, {{0, 0, 4}, {1, 0, -1}, {0, 1, -1}}); }
inline Poly2<GQ> one(int n = 0, int m = 0) { return P(n, m, {{0, 0, 1}}); }

inline std::vector<GQ> pt(long a, long b) { return {GQ(a), GQ(b)}; }

inline double max_diff(const Poly2<cd> &a, const Poly2<cd> &b) {
  double d = 0;
  for (int j = 0; j <= std::max(a.n, b.n); ++j)
    for (int k = 0; k <= std::max(a.m, b.m); ++k) {
      cd x = (j <= a.n && k <= a.m) ? a.at(j, k) : cd(0);
      cd y = (j <= b.n && k <= b.m) ? b.at(j, k) : cd(0);
      d = std::max(d, std::abs(x - y));
    }
  return d;
}

// Coefficients divided by the first nonzero one (removes the unimodular freedom).
inline Poly2<cd> normalized(const Poly2<cd> &p) {
  cd lead = 0;
  for (auto &c : p.a)
    if (std::abs(c) > 1e-9) {
      lead = c;
      break;
    }
  Poly2<cd> r = p;
  for (auto &c : r.a) c /= lead;
  return r;
}

} // namespace fx
