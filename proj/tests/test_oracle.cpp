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

#include "corpus.hpp"
#include "bidisk/ideal.hpp"

using namespace bidisk;
using fx::P;

namespace {

Poly2<GQ> pw(const Poly2<GQ> &a, int e) {
  Poly2<GQ> r = fx::one();
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

Poly2<cd> G1() { return to_float(pw(fx::lin1(), 8) * pw(fx::lin2(), 8)); }
Poly2<cd> G2() { return to_float(fx::lin1() * fx::lin2()); }
Poly2<cd> G3() { return to_float(P(0, 0, {{0, 0, 2}})); }

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("l2 quadrature verdicts") {
  auto p = to_float(fx::p0());
  auto v3 = l2_quadrature(G3(), p);
  CHECK(v3.verdict == Verdict::Divergent);
  CHECK(v3.growth_exponent > 0.1);
  auto v2 = l2_quadrature(G2(), p);
  CHECK(v2.verdict == Verdict::Convergent);
  CHECK(v2.last_change < 0.01);
  auto v0 = l2_quadrature(Poly2<cd>(0, 0), p);
  CHECK(v0.verdict == Verdict::Convergent);
  CHECK(v0.estimates.back().second == 0);
  CHECK(v0.estimates.front().first == 128);
  CHECK(v0.estimates.back().first == 2048);
  CHECK_THROWS_AS(l2_quadrature(G2(), to_float(P(1, 0, {{1, 0, 1}}))), PreconditionError);
}

TEST_CASE("fourier report") {
  auto p = to_float(fx::p0());
  auto f1 = fourier_report(G1(), p, 256, 256);
  CHECK(f1.l1_plateau);
  auto f2 = fourier_report(G2(), p, 256, 256);
  CHECK(f2.l2_plateau);
  CHECK_FALSE(f2.l1_plateau);
  CHECK(f2.l1_growth > 0.5);
  CHECK(f1.weighted_plateau);
  CHECK_FALSE(f2.weighted_plateau);

  auto q = to_float(fx::ex1());
  auto one = fourier_report(q, to_float(fx::one()), 4, 4);
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 4; ++k) CHECK(std::abs(one.coef(j, k) - q.get(j, k)) < 1e-10);

  FourierOptions o;
  o.grid = 16;
  CHECK_THROWS(fourier_report(q, p, 8, 4, o));
}

TEST_CASE("fourier coefficients match the exact Taylor series") {
  auto p = fx::p0();
  auto f = fourier_report(G1(), to_float(p), 20, 20);
  auto t = taylor_coefficients(pw(fx::lin1(), 8) * pw(fx::lin2(), 8), p, 20, 20);
  double err = 0;
  for (int j = 0; j <= 20; ++j)
    for (int k = 0; k <= 20; ++k) err = std::max(err, std::abs(t[j][k].to_cd() - f.coef(j, k)));
  CHECK(err < 1e-9);
  auto t3 = taylor_coefficients(P(0, 0, {{0, 0, 2}}), p, 3, 3);
  CHECK(t3[0][0] == GQ(1));
  CHECK(t3[1][0] == GQ(mpq_class(1, 2)));
  CHECK(t3[1][1] == GQ(mpq_class(1, 2)));
  CHECK_THROWS(taylor_coefficients(fx::one(), P(1, 0, {{1, 0, 1}}), 2, 2));
}

TEST_CASE("resultant multiplicity") {
  CHECK(resultant_multiplicity(P(1, 0, {{1, 0, 1}}), P(0, 2, {{0, 2, 1}}), GQ(0), GQ(0)).multiplicity == 2);
  auto q = flip2(fx::p0());
  auto r = resultant_multiplicity(q, reflect(q), GQ(1), GQ(1));
  CHECK(r.multiplicity == 2);
  CHECK(r.route == "translate");
  CHECK(r.trials.size() >= 2);
  for (auto &t : r.trials) {
    double a = std::abs(t.first.to_cd());
    CHECK(a >= 1);
    CHECK(a <= 7);
  }
  CHECK(resultant_multiplicity(fx::ex1(), reflect(fx::ex1()), GQ(1), GQ(1)).multiplicity == 4);
  CHECK(resultant_multiplicity(fx::p0(), fx::stable4(), GQ(1), GQ(1)).multiplicity == 0);
  auto s = flip2(fx::stable4());
  double l = 2 - std::sqrt(3.0);
  auto ri = resultant_multiplicity(s, reflect(s), cd(l), cd(l));
  CHECK(ri.multiplicity == 1);
  CHECK(ri.route == "squarefree");
  auto a = resultant_multiplicity(fx::ex1(), reflect(fx::ex1()), GQ(1), GQ(1), 9);
  auto b = resultant_multiplicity(fx::ex1(), reflect(fx::ex1()), GQ(1), GQ(1), 9);
  CHECK(a.trials == b.trials);
}

TEST_CASE("resultant, eigenspace and Fulton agree on fixture zeros") {
  std::vector<Poly2<GQ>> ps = {fx::p0(), fx::ex1(), fx::ex3(), fx::stable4(), fx::one(1, 2)};
  for (auto &p0 : ps)
    for (auto p : {p0, flip2(p0)}) {
      auto pr = reflect(p);
      auto r = common_zeros(p, pr);
      for (auto &z : r.zeros) {
        auto c1 = to_chart(p, z.chart), c2 = to_chart(pr, z.chart);
        int res = z.exact ? resultant_multiplicity(c1, c2, z.ex, z.ey).multiplicity
                          : resultant_multiplicity(c1, c2, z.x, z.y).multiplicity;
        CHECK(res == z.multiplicity);
        if (z.exact) {
          CHECK(fulton_reduce(c1, c2, z.ex, z.ey) == z.multiplicity);
          CHECK(multiplicity(c1, c2, z.ex, z.ey) == z.multiplicity);
        }
      }
    }
}

TEST_CASE("l2 verdict matches membership on the corpus") {
  for (auto &c : fx::member_corpus()) {
    CAPTURE(c.name);
    auto v = l2_quadrature(to_float(c.q), to_float(c.p));
    CHECK(v.verdict != Verdict::Inconclusive);
    CHECK((v.verdict == Verdict::Convergent) == c.member);
  }
}

}
