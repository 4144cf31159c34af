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

// Membership corpus shared by the ideal and oracle suites: (p, q, q/p in L^2).

#include <string>
#include <vector>

#include "fixtures.hpp"

namespace fx {

struct MemberCase {
  std::string name;
  Poly2<GQ> p, q;
  bool member;
};

inline Poly2<GQ> lin1() { return P(1, 0, {{0, 0, 1}, {1, 0, -1}}); } // 1 - z1
inline Poly2<GQ> lin2() { return P(0, 1, {{0, 0, 1}, {0, 1, -1}}); } // 1 - z2

inline std::vector<MemberCase> member_corpus() {
  auto one_ = one();
  auto z1z2 = P(1, 1, {{0, 0, 1}, {1, 1, -1}});
  std::vector<MemberCase> c = {
      {"p0: 1-z1", p0(), lin1(), true},
      {"p0: 1-z2", p0(), lin2(), true},
      {"p0: z1-z2", p0(), P(1, 1, {{1, 0, 1}, {0, 1, -1}}), true},
      {"p0: reflection", p0(), reflect(p0()), true},
      {"p0: 1", p0(), one_, false},
      {"p0: 1+z1", p0(), P(1, 0, {{0, 0, 1}, {1, 0, 1}}), false},
      {"ex1: (1-z2)^2", ex1(), lin2() * lin2(), true},
      {"ex1: (1-z1)(1-z2)", ex1(), lin1() * lin2(), true},
      {"ex1: 1-z1z2", ex1(), z1z2, true},
      {"ex1: 1-z1", ex1(), lin1(), false},
      {"ex1: 1-z2", ex1(), lin2(), false},
      {"ex1: 1", ex1(), one_, false},
      {"ex3: (1-z1)(2-z1-z2)", ex3(), lin1() * p0(), true},
      {"ex3: 1-z1z2", ex3(), z1z2, true},
      {"ex3: (1-z1)^3", ex3(), lin1() * lin1() * lin1(), true},
      {"ex3: 1-z1", ex3(), lin1(), false},
      {"ex3: 1", ex3(), one_, false},
      {"stable4: 1", stable4(), one_, true},
      {"stable4: z1", stable4(), P(1, 0, {{1, 0, 1}}), true},
      {"one(1,2): 1+z2", one(1, 2), P(0, 1, {{0, 0, 1}, {0, 1, 1}}), true},
  };
  return c;
}

} // namespace fx
