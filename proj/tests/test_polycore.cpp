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

#include <random>

#include "fixtures.hpp"

using namespace bidisk;
using fx::P;

TEST_SUITE("polycore") {

TEST_CASE("reflect at the declared bidegree") {
  CHECK(reflect(fx::p0()) == P(1, 1, {{1, 1, 2}, {1, 0, -1}, {0, 1, -1}}));
  CHECK(reflect(fx::ex1()) == P(1, 2, {{1, 2, 4}, {0, 2, -1}, {1, 1, -3}, {0, 1, -1}, {1, 0, 1}}));
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3(), fx::one(1, 2)}) CHECK(reflect(reflect(p)) == p);
  Poly2<GQ> c(1, 0);
  c.at(0, 0) = GQ(1, 2);
  c.at(1, 0) = GQ(mpq_class(1, 3), -1);
  CHECK(reflect(c).at(0, 0) == GQ(mpq_class(1, 3), 1));
  CHECK(reflect(c).at(1, 0) == GQ(1, -2));
}

TEST_CASE("flip2") {
  auto q = flip2(fx::p0());
  CHECK(q == P(1, 1, {{0, 0, -1}, {0, 1, 2}, {1, 1, -1}}));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.5, 1.5);
  auto pf = to_float(fx::p0()), qf = to_float(q);
  for (int t = 0; t < 5; ++t) {
    cd z1(U(rng), U(rng)), z2(U(rng), U(rng));
    CHECK(std::abs(qf(z1, z2) - z2 * pf(z1, 1.0 / z2)) < 1e-12);
  }
  CHECK(flip2(fx::one(1, 2)) == P(1, 2, {{0, 2, 1}}));
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3()}) CHECK(flip2(flip2(p)) == p);
}

TEST_CASE("reflect and flip2 commute") {
  for (auto p : {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4(), fx::one(1, 2)})
    CHECK(reflect(flip2(p)) == flip2(reflect(p)));
}

TEST_CASE("homog_expand") {
  auto e = homog_expand(fx::p0(), fx::pt(1, 1));
  CHECK(e.M == 1);
  CHECK(e.forms[0].is_zero());
  auto f1 = to_hform(e.forms[1], 1);
  CHECK(f1.c[0] == GQ(1));
  CHECK(f1.c[1] == GQ(1));

  auto e1 = homog_expand(fx::ex1(), fx::pt(1, 1));
  CHECK(e1.M == 1);
  auto a = to_hform(e1.forms[1], 1), b = to_hform(e1.forms[2], 2);
  CHECK(a.c == std::vector<GQ>{GQ(2), GQ(2)});
  CHECK(b.c == std::vector<GQ>{GQ(1), GQ(-1), GQ(0)}); // eta^2 - zeta*eta

  auto e2 = homog_expand(fx::ex2(), std::vector<cd>{1.0, 1.0});
  CHECK(e2.M == 2);
  auto e3 = homog_expand(fx::ex2(), std::vector<cd>{-1.0, -1.0});
  CHECK(e3.M == 1);

  CHECK_THROWS_AS(homog_expand(fx::p0(), std::vector<GQ>{GQ(1), GQ(2)}), PreconditionError);
  CHECK_THROWS_AS(homog_expand(fx::ex2(), std::vector<cd>{1.0, 1.001}), PreconditionError);
  CHECK(homog_expand(Poly2<GQ>(1, 1), fx::pt(1, 1)).M == -1);
}

TEST_CASE("homog_expand resubstitution is exact") {
  std::vector<Poly2<GQ>> ps = {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4(), fx::one(1, 2)};
  std::vector<std::vector<GQ>> bases = {fx::pt(1, 1), fx::pt(-1, 1), {GQ(mpq_class(3, 5), mpq_class(4, 5)), GQ(0, 1)}};
  std::vector<std::pair<GQ, GQ>> zs = {{GQ(mpq_class(1, 3), 2), GQ(-1, mpq_class(2, 7))}, {GQ(5), GQ(0, -3)}};
  for (auto &p : ps)
    for (auto &b : bases) {
      auto e = homog_expand(p, b);
      for (auto &[z1, z2] : zs) {
        std::vector<GQ> zeta = {b[0] - z1, b[1] - z2};
        GQ s(0);
        for (auto &f : e.forms) s += f.eval(zeta);
        CHECK(s == p(z1, z2));
      }
    }
}

TEST_CASE("gcd") {
  CHECK(gcd(fx::p0(), reflect(fx::p0())) == fx::one());
  auto f = P(1, 1, {{0, 0, 1}, {1, 1, -1}});
  auto g = f * P(1, 0, {{0, 0, 2}, {1, 0, -1}});
  auto r = gcd(g, f);
  CHECK(exact_divide(r, f).has_value());
  CHECK(exact_divide(f, r).has_value());
  auto pp = gcd(fx::ex1(), fx::ex1());
  CHECK(exact_divide(pp, fx::ex1()).has_value());
  CHECK(exact_divide(fx::ex1(), pp).has_value());
  CHECK_THROWS_AS(gcd(to_float(fx::p0()), to_float(fx::p0())), PreconditionError);
}

TEST_CASE("homog_divide") {
  HForm<GQ> num(2, {GQ(0), GQ(2), GQ(0)}), den(1, {GQ(1), GQ(1)});
  CHECK_FALSE(homog_divide(num, den).has_value());
  HForm<GQ> sq(2, {GQ(-1), GQ(0), GQ(1)});
  auto q = homog_divide(sq, den);
  REQUIRE(q.has_value());
  CHECK(q->c == std::vector<GQ>{GQ(-1), GQ(1)});
  auto z = homog_divide(HForm<GQ>::zero(3), den);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  CHECK_THROWS(homog_divide(den, HForm<GQ>::zero(1)));
  HForm<cd> nf(2, {-1.0, 1e-14, 1.0}), df(1, {1.0, 1.0});
  auto qf = homog_divide(nf, df);
  REQUIRE(qf.has_value());
  CHECK(std::abs(qf->c[0] + 1.0) < 1e-12);
  CHECK_THROWS(to_hform(to_mpoly(fx::p0()), 1));
}

TEST_CASE("torus and bidisk modulus invariants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> T(0, 2 * M_PI), R(0, 1);
  std::vector<Poly2<cd>> ps = {to_float(fx::p0()), to_float(fx::ex1()), fx::ex2(), to_float(fx::ex3()),
                               to_float(fx::stable4())};
  for (auto &p : ps) {
    auto r = reflect(p);
    double torus = 0, excess = -1;
    for (int s = 0; s < 1000; ++s) {
      cd z1 = std::polar(1.0, T(rng)), z2 = std::polar(1.0, T(rng));
      torus = std::max(torus, std::abs(std::abs(r(z1, z2)) - std::abs(p(z1, z2))));
      cd w1 = std::polar(std::sqrt(R(rng)), T(rng)), w2 = std::polar(std::sqrt(R(rng)), T(rng));
      excess = std::max(excess, std::abs(r(w1, w2)) - std::abs(p(w1, w2)));
    }
    CHECK(torus < 1e-10);
    CHECK(excess <= 1e-12);
  }
}

TEST_CASE("json round trip and literals") {
  for (auto name : {"p0", "ex1", "ex3", "one_z2_sq"}) {
    auto in = fx::load(name);
    REQUIRE(in.exact);
    auto back = parse_poly(to_json(in.pe));
    CHECK(back.pe == in.pe);
  }
  auto f = fx::load("ex2");
  CHECK_FALSE(f.exact);
  CHECK(fx::max_diff(parse_poly(to_json(f.pf)).pf, f.pf) == 0);
  CHECK(parse_gaussian("3/5+4/5i") == GQ(mpq_class(3, 5), mpq_class(4, 5)));
  CHECK(parse_gaussian("-i") == GQ(0, -1));
  CHECK(parse_gaussian("0.25") == GQ(mpq_class(1, 4)));
  CHECK_THROWS(parse_gaussian("1/0"));
  CHECK_THROWS_AS(read_poly_file(std::string(FIXTURE_DIR) + "/malformed.json"), FormatError);
  CHECK(to_string(fx::p0()) == "2 - z1 - z2");
}

}
