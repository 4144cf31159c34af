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
#include <doctest.h>

#include "fixtures.hpp"

using namespace bidisk;
using fx::P;

TEST_SUITE("stability") {

TEST_CASE("p0 is semistable") {
  auto r = check_semistable(fx::p0());
  CHECK(r.gcd_trivial);
  CHECK(r.zero_free_verified);
  CHECK(r.gcd_method == "exact");
  // boundary-touching slices are reported without failing the sweep
  for (auto &w : r.witnesses) CHECK(std::max(std::abs(w.first), std::abs(w.second)) > 1 - 1e-3);
}

TEST_CASE("shared factor with the reflection") {
  auto p = P(1, 1, {{0, 0, 1}, {1, 1, -1}}) * fx::p0();
  auto r = check_semistable(p);
  CHECK_FALSE(r.gcd_trivial);
  auto g = gcd(p, reflect(p));
  CHECK(exact_divide(g, P(1, 1, {{0, 0, 1}, {1, 1, -1}})).has_value());
  CHECK(g.natural_bidegree() == std::pair<int, int>{1, 1});
}

TEST_CASE("interior zero gives a witness") {
  auto r = check_semistable(P(1, 0, {{1, 0, 1}}));
  CHECK_FALSE(r.zero_free_verified);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(std::abs(r.witnesses[0].first) < 1e-6);
  CHECK_FALSE(r.semistable());
  auto z = check_semistable(P(1, 1, {{1, 0, 1}, {0, 1, -1}}));
  CHECK_FALSE(z.zero_free_verified);
}

TEST_CASE("shipped fixtures are semistable at default and doubled resolution") {
  StabilityOptions fine;
  fine.radii *= 2;
  fine.angles *= 2;
  for (std::string name : {"p0", "ex1", "ex3", "stable4", "one"}) {
    auto in = fx::load(name);
    CAPTURE(name);
    auto r = check_semistable(in.pe);
    CHECK(r.semistable());
    CHECK(check_semistable(in.pe, fine).zero_free_verified);
  }
  auto r2 = check_semistable(fx::ex2());
  CHECK(r2.semistable());
  CHECK(r2.gcd_method == "bezout");
  CHECK(check_semistable(fx::ex2(), fine).zero_free_verified);
}

TEST_CASE("zero polynomial is rejected") {
  CHECK_THROWS(check_semistable(Poly2<GQ>(1, 1)));
}

}
