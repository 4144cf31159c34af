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

namespace {

const LocatedZero *find(const IntersectionReport &r, cd z1, cd z2) {
  for (auto &z : r.zeros)
    if (!z.z1.inf && !z.z2.inf && std::abs(z.z1.v - z1) < 1e-6 && std::abs(z.z2.v - z2) < 1e-6) return &z;
  return nullptr;
}

} // namespace

TEST_SUITE("intersect") {

TEST_CASE("p0 and its reflection") {
  auto r = common_zeros(fx::p0(), reflect(fx::p0()));
  CHECK(r.total == 2);
  CHECK(r.bezout == 2);
  REQUIRE(r.zeros.size() == 1);
  CHECK(r.zeros[0].multiplicity == 2);
  CHECK(r.zeros[0].region == Region::Torus);
  CHECK(r.torus_total == 2);
  CHECK(r.route == "groebner");
}

TEST_CASE("flip2 pair of p = 1 at bidegree (1,2)") {
  auto q = flip2(fx::one(1, 2));
  auto r = common_zeros(q, reflect(q));
  CHECK(r.total == 4);
  REQUIRE(r.zeros.size() == 2);
  int at0 = 0, atinf = 0;
  for (auto &z : r.zeros) {
    if (!z.z1.inf && !z.z2.inf && std::abs(z.z1.v) < 1e-12 && std::abs(z.z2.v) < 1e-12) at0 = z.multiplicity;
    if (z.z1.inf && z.z2.inf) atinf = z.multiplicity;
  }
  CHECK(at0 == 2);
  CHECK(atinf == 2);
}

TEST_CASE("example 2 in floating point") {
  auto p = fx::ex2();
  auto r = common_zeros(p, reflect(p));
  CHECK(r.route == "float");
  CHECK(r.total == 8);
  auto a = find(r, 1.0, 1.0), b = find(r, -1.0, -1.0);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->multiplicity == 6);
  CHECK(b->multiplicity == 2);
  CHECK(r.torus_total == 8);
}

TEST_CASE("multiplicity") {
  auto z1 = P(1, 0, {{1, 0, 1}}), z2sq = P(0, 2, {{0, 2, 1}});
  CHECK(multiplicity(z1, z2sq, GQ(0), GQ(0)) == 2);
  CHECK(multiplicity(fx::ex1(), reflect(fx::ex1()), GQ(1), GQ(1)) == 4);
  auto l1 = P(1, 1, {{1, 0, 1}, {0, 1, -1}}), l2 = P(1, 1, {{1, 0, 1}, {0, 1, 1}, {0, 0, -2}});
  CHECK(multiplicity(l1, l2, GQ(1), GQ(1)) == 1);
  CHECK(multiplicity(l1, l2, GQ(2), GQ(0)) == 0);
  CHECK(multiplicity(fx::ex1(), reflect(fx::ex1()), cd(1.0), cd(1.0)) == 4);
  CHECK(multiplicity(to_float(fx::ex1()), to_float(reflect(fx::ex1())), cd(1.0), cd(1.0)) == 4);
  CHECK(multiplicity(fx::ex3(), reflect(fx::ex3()), GQ(1), GQ(1)) == 6);
}

TEST_CASE("fulton_reduce") {
  CHECK(fulton_reduce(fx::ex1(), reflect(fx::ex1()), GQ(1), GQ(1)) == 4);
  auto a = P(1, 1, {{1, 0, 1}, {0, 1, 1}}), b = P(1, 1, {{1, 1, 1}});
  CHECK(fulton_reduce(a, b, GQ(0), GQ(0)) == 2);
  CHECK(fulton_reduce(fx::p0(), fx::stable4(), GQ(1), GQ(1)) == 0);
  CHECK(fulton_reduce(P(1, 0, {{1, 0, 1}}), P(0, 2, {{0, 2, 1}}), GQ(0), GQ(0)) == 2);
  CHECK(fulton_reduce(fx::ex3(), reflect(fx::ex3()), GQ(1), GQ(1)) == 6);
}

TEST_CASE("torus totals") {
  auto t0 = torus_multiplicity_total(fx::p0());
  CHECK(t0.torus_total == 2);
  CHECK(t0.agree);
  auto t1 = torus_multiplicity_total(fx::one(1, 2));
  CHECK(t1.torus_total == 0);
  CHECK(t1.disk_total == 2);
  CHECK(t1.agree);
  auto t3 = torus_multiplicity_total(fx::ex3());
  CHECK(t3.torus_total == 6);
  CHECK(t3.agree);
  auto t2 = torus_multiplicity_total(fx::ex2());
  CHECK(t2.torus_total == 8);
  CHECK(t2.agree);
}

TEST_CASE("Bezout and evenness on fixtures") {
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4(), fx::one(1, 2)}) {
    auto r = common_zeros(p, reflect(p));
    CHECK(r.total == r.bezout);
    CHECK(r.bezout == 2 * p.n * p.m);
    for (auto &z : r.zeros)
      if (z.region == Region::Torus) CHECK(z.multiplicity % 2 == 0);
    auto q = flip2(p);
    auto rq = common_zeros(q, reflect(q));
    CHECK(rq.total == rq.bezout);
  }
}

TEST_CASE("reflective symmetry of the flip2 pair") {
  for (auto p : {fx::stable4(), fx::ex1(), fx::p0()}) {
    auto q = flip2(p);
    auto r = common_zeros(q, reflect(q));
    for (auto &z : r.zeros) {
      if (z.z1.inf || z.z2.inf || std::abs(z.z1.v) < 1e-9 || std::abs(z.z2.v) < 1e-9) continue;
      cd w1 = 1.0 / std::conj(z.z1.v), w2 = 1.0 / std::conj(z.z2.v);
      auto m = find(r, w1, w2);
      REQUIRE(m);
      CHECK(m->multiplicity == z.multiplicity);
    }
  }
}

TEST_CASE("float route agrees with the exact route") {
  for (auto p : {fx::p0(), fx::ex1(), fx::stable4()}) {
    auto re = common_zeros(p, reflect(p));
    auto pf = to_float(p);
    auto rf = common_zeros(pf, reflect(pf));
    CHECK(rf.total == re.total);
    CHECK(rf.torus_total == re.torus_total);
  }
}

TEST_CASE("common factor is rejected") {
  auto f = P(1, 1, {{0, 0, 1}, {1, 1, -1}});
  CHECK_THROWS(common_zeros(f * fx::p0(), f));
}

}
