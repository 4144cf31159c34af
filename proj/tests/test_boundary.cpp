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

TEST_SUITE("boundary") {

TEST_CASE("vanishing_order") {
  CHECK(vanishing_order(fx::p0(), fx::pt(1, 1)) == 1);
  CHECK(vanishing_order(fx::ex2(), std::vector<cd>{1.0, 1.0}) == 2);
  CHECK(vanishing_order(fx::ex2(), std::vector<cd>{-1.0, -1.0}) == 1);
  CHECK(vanishing_order(fx::p0(), fx::pt(-1, 1)) == 0);
  CHECK(vanishing_order(fx::ex3(), fx::pt(1, 1)) == 1);
  CHECK_THROWS_AS(vanishing_order(fx::p0(), fx::pt(2, 1)), PreconditionError);
  // three variables: 3 - z1 - z2 - z3 at (1,1,1)
  MPoly<GQ> q;
  q.d = 3;
  q.add({0, 0, 0}, GQ(3));
  q.add({1, 0, 0}, GQ(-1));
  q.add({0, 1, 0}, GQ(-1));
  q.add({0, 0, 1}, GQ(-1));
  CHECK(vanishing_order(q, std::vector<GQ>{GQ(1), GQ(1), GQ(1)}) == 1);
  auto b3 = bottom_form_check(q, std::vector<GQ>{GQ(1), GQ(1), GQ(1)});
  CHECK(b3.zero_free);
}

TEST_CASE("bottom_form_check") {
  auto b = bottom_form_check(fx::p0(), fx::pt(1, 1));
  CHECK(b.M == 1);
  CHECK(b.zero_free);
  CHECK(b.samples == 10000);
  CHECK(b.min_scaled > 0);

  auto b2 = bottom_form_check(fx::ex2(), std::vector<cd>{1.0, 1.0});
  REQUIRE(b2.M == 2);
  CHECK(b2.zero_free);
  double s5 = std::sqrt(5.0);
  CHECK(std::abs(b2.form.c[2] - (7.0 / 18 - s5 / 6)) < 1e-9);
  CHECK(std::abs(b2.form.c[1] - 11.0 / 9) < 1e-9);
  CHECK(std::abs(b2.form.c[0] - (7.0 / 18 + s5 / 6)) < 1e-9);

  auto bad = bottom_form_check(P(1, 1, {{1, 0, 1}, {0, 1, -1}}), fx::pt(1, 1));
  CHECK(bad.M == 1);
  CHECK_FALSE(bad.zero_free);
}

TEST_CASE("non-tangential boundedness and limits") {
  auto p = fx::p0();
  auto z1 = P(1, 0, {{0, 0, 1}, {1, 0, -1}});
  CHECK(nontangential_bounded(z1, p, fx::pt(1, 1)));
  CHECK_FALSE(nontangential_bounded(fx::one(), p, fx::pt(1, 1)));
  CHECK(nontangential_bounded(fx::one(), p, fx::pt(-1, 1)));

  auto l = nontangential_limit(reflect(p), p, fx::pt(1, 1));
  CHECK(l.bounded);
  REQUIRE(l.value.has_value());
  CHECK(std::abs(*l.value + 1.0) < 1e-15);

  auto g = nontangential_limit(z1, p, fx::pt(1, 1));
  CHECK(g.bounded);
  CHECK_FALSE(g.value.has_value());

  auto s = nontangential_limit(p, p, fx::pt(1, 1));
  REQUIRE(s.value.has_value());
  CHECK(std::abs(*s.value - 1.0) < 1e-15);

  auto u = nontangential_limit(fx::one(), p, fx::pt(1, 1));
  CHECK_FALSE(u.bounded);
  CHECK(u.q_order < u.M);

  // unimodular limit for monomial multiples of the reflection
  for (auto q : {fx::ex1(), fx::ex3()}) {
    auto t = nontangential_limit(shift(reflect(q), 1, 2), q, fx::pt(1, 1));
    REQUIRE(t.value.has_value());
    CHECK(std::abs(std::abs(*t.value) - 1.0) < 1e-12);
  }
}

TEST_CASE("regularity ladder of p0") {
  auto a = regularity_ladder(fx::p0(), fx::pt(1, 1));
  CHECK(a.M == 1);
  REQUIRE(a.nu.has_value());
  CHECK(*a.nu == cd(-1.0));
  CHECK(a.nu_text == "-1");
  CHECK(a.k == 0);
  CHECK(a.next_fails);
  CHECK(a.bottom_ok);
  CHECK(a.floor_ok);
  CHECK(a.intersection == 2);
  CHECK(a.fit_ok);
  CHECK(a.fit.min_exponent >= 0.9);
}

TEST_CASE("regularity ladder of example 1") {
  auto a = regularity_ladder(fx::ex1(), fx::pt(1, 1));
  CHECK(a.k == 2);
  REQUIRE(a.nu.has_value());
  CHECK(std::abs(*a.nu + 1.0) < 1e-15);
  REQUIRE(a.term_text.size() == 2);
  CHECK(a.term_text[0] == "2*eta");
  CHECK(a.term_text[1] == "-eta^2");
  CHECK(a.intersection == 4);
  CHECK(a.multiplicity_floor == 4);
  CHECK(a.floor_ok);
  CHECK(a.fit.min_exponent >= 2.9);
}

TEST_CASE("regularity ladder of example 3") {
  auto a = regularity_ladder(fx::ex3(), fx::pt(1, 1));
  CHECK(a.k == 4);
  CHECK(a.next_fails);
  CHECK(a.intersection == 6);
  CHECK(a.floor_ok);
  CHECK(a.fit.min_exponent >= 4.9);
}

TEST_CASE("regularity ladder in floating point") {
  auto a = regularity_ladder(fx::ex2(), std::vector<cd>{1.0, 1.0});
  CHECK(a.M == 2);
  REQUIRE(a.nu.has_value());
  CHECK(a.nu_modulus_error < 1e-8);
  CHECK(a.phase_residual < 1e-8);
  CHECK(a.intersection == 6);
  CHECK(a.floor_ok);
  auto b = regularity_ladder(fx::ex2(), std::vector<cd>{-1.0, -1.0});
  CHECK(b.M == 1);
  CHECK(b.intersection == 2);
  CHECK(b.floor_ok);
  auto e = regularity_ladder(to_float(fx::ex1()), std::vector<cd>{1.0, 1.0});
  CHECK(e.k == 2);
}

TEST_CASE("ladder invariants on fixtures") {
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3()}) {
    auto r = common_zeros(p, reflect(p));
    for (auto &z : r.zeros) {
      if (z.region != Region::Torus || !z.z1.exact || !z.z2.exact) continue;
      auto a = regularity_ladder(p, std::vector<GQ>{*z.z1.exact, *z.z2.exact});
      REQUIRE(a.nu.has_value());
      CHECK(a.nu_modulus_error < 1e-12);
      CHECK(a.phase_residual < 1e-12);
      CHECK(a.intersection >= a.M * (a.M + a.k + 1));
      CHECK(a.intersection % 2 == 0);
      CHECK(a.fit.min_exponent >= a.k + 0.9);
    }
  }
}

TEST_CASE("argument errors") {
  LadderOptions o;
  o.k_max = -2;
  CHECK_THROWS(regularity_ladder(fx::p0(), fx::pt(1, 1), o));
  CHECK(parse_point("3/5+4/5i,1") == std::vector<GQ>{GQ(mpq_class(3, 5), mpq_class(4, 5)), GQ(1)});
  CHECK_THROWS(parse_point("1"));
}

}
