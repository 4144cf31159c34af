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
#include "bidisk/analyze.hpp"

#include <sstream>

namespace bidisk {

namespace {

const char *kVersion = "0.3.0";

template <class T> void take(const json &j, const char *key, T &dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct Builder {
  AnalysisBundle b;
  void add(const std::string &name, bool pass, const std::string &detail) { b.checks.push_back({name, pass, detail}); }
  void le(const std::string &name, double v, double tol) { add(name, v <= tol, num(v) + " <= " + num(tol)); }
};

std::string point_name(cd a, cd b) {
  std::ostringstream os;
  os.precision(6);
  auto one = [&](cd z) {
    if (std::abs(z.imag()) < 1e-12) os << z.real();
    else os << z.real() << (z.imag() >= 0 ? "+" : "") << z.imag() << "i";
  };
  os << "(";
  one(a);
  os << ",";
  one(b);
  os << ")";
  return os.str();
}

template <class S>
void run(const Poly2<S> &p, const Poly2<cd> &pf, const Config &cfg, Builder &B, const Poly2<GQ> *pe) {
  constexpr bool exact = std::is_same_v<S, GQ>;
  json &R = B.b.report;
  auto st = check_semistable(p, cfg.stability);
  R["stability"] = to_json(st);
  if (!st.semistable()) throw PreconditionError("input is not semi-stable");

  auto zr = common_zeros(p, reflect(p), unsigned(cfg.seed));
  R["intersection"] = to_json(zr);
  B.add("intersect.bezout_total", zr.total == 2 * p.n * p.m, std::to_string(zr.total));
  B.add("intersect.torus_even", zr.torus_total % 2 == 0, std::to_string(zr.torus_total));
  auto tt = torus_multiplicity_total(p);
  B.add("intersect.torus_routes_agree", tt.agree,
        std::to_string(tt.torus_total) + " vs " + std::to_string(tt.via_disk));

  IdealDescription d = generators(p);
  const AglerSystem &sys = d.system;
  R["agler"] = to_json(sys);
  B.le("agler.identity_residual", sys.identity_residual, cfg.identity_tol);
  B.le("agler.fr_residual", sys.fr_residual, cfg.agler.fr.tol);
  B.le("agler.torus_identity", e_on_torus_residual(pf, sys.E1), cfg.torus_identity_tol);
  try {
    auto re = realize(pf, sys.E1, sys.F2, unsigned(cfg.seed), cfg.realization_points);
    R["realization"] = to_json(re);
    B.le("agler.realization_unitarity", re.unitarity_residual, cfg.unitarity_tol);
    B.le("agler.realization_transfer", re.transfer_residual, cfg.transfer_tol);
  } catch (const CrossCheckError &e) {
    B.add("agler.realization_transfer", false, e.what());
  }

  R["ideal"] = to_json(d);
  json dims = json::array();
  for (int j = std::max(p.n - 1, 0); j <= p.n + 1; ++j)
    for (int k = std::max(p.m - 1, 0); k <= p.m + 1; ++k) dims.push_back({j, k, d.dim(j, k)});
  R["ideal"]["dims"] = dims;
  B.add("ideal.generator_orders", d.generator_orders_ok, "");
  if (p.n >= 1 && p.m >= 1) {
    int dg = d.dim(p.n - 1, p.m - 1);
    B.add("ideal.dim_G_matches_formula", dg == sys.dim_G(),
          std::to_string(dg) + " vs " + std::to_string(sys.dim_G()));
  }

  json bnd = json::array(), orc = json::array();
  int k1only = 0;
  for (auto &t : d.torus_points) {
    std::string pn = point_name(t.z1, t.z2);
    BoundaryAnalysis a;
    if constexpr (exact) {
      if (t.exact) a = regularity_ladder(p, std::vector<GQ>{t.e1, t.e2}, cfg.ladder);
      else a = regularity_ladder(pf, std::vector<cd>{t.z1, t.z2}, cfg.ladder);
    } else {
      a = regularity_ladder(pf, std::vector<cd>{t.z1, t.z2}, cfg.ladder);
    }
    bnd.push_back(to_json(a));
    B.add("boundary." + pn + ".bottom_form_zero_free", a.bottom_ok, a.bottom_form);
    B.add("boundary." + pn + ".nu_exists", a.nu.has_value(), a.nu_text);
    if (a.nu) {
      B.le("boundary." + pn + ".nu_unimodular", a.nu_modulus_error, cfg.nu_tol);
      B.le("boundary." + pn + ".nu_phase_real", a.phase_residual, cfg.nu_tol);
    }
    B.add("boundary." + pn + ".multiplicity_floor", a.floor_ok,
          std::to_string(a.intersection) + " >= " + std::to_string(a.multiplicity_floor));
    if (cfg.ladder.fit)
      B.add("boundary." + pn + ".remainder_fit", a.fit_ok, num(a.fit.min_exponent) + " >= k+0.9");
    if (a.k == 1) ++k1only;

    if (pe) {
      json o;
      o["point"] = pn;
      o["intersect"] = t.multiplicity;
      auto rm = t.exact ? resultant_multiplicity(*pe, reflect(*pe), t.e1, t.e2, cfg.seed)
                        : resultant_multiplicity(*pe, reflect(*pe), t.z1, t.z2, cfg.seed);
      o["resultant"] = to_json(rm);
      bool ok = rm.multiplicity == t.multiplicity;
      std::string det = std::to_string(t.multiplicity) + " = " + std::to_string(rm.multiplicity);
      if (t.exact) {
        int fr = fulton_reduce(*pe, reflect(*pe), t.e1, t.e2);
        o["fulton"] = fr;
        ok = ok && fr == t.multiplicity;
        det += " = " + std::to_string(fr);
      }
      orc.push_back(o);
      B.add("oracle." + pn + ".multiplicity", ok, det);
    }
  }
  R["boundary"] = bnd;
  B.add("boundary.k1_not_k2_count", 4 * k1only <= p.n * p.m, std::to_string(k1only));

  // L2 quadrature against membership
  json l2 = json::array();
  std::vector<std::pair<std::string, Poly2<cd>>> cases;
  Poly2<cd> one(0, 0);
  one.at(0, 0) = 1;
  cases.push_back({"1", one});
  if (!d.generators.empty()) cases.push_back({"generator_0", d.generators.front()});
  for (auto &[name, q] : cases) {
    MembershipResult mr;
    if constexpr (exact) {
      if (name == "1") {
        Poly2<GQ> qe(0, 0);
        qe.at(0, 0) = GQ(1);
        mr = membership(d, p, qe, MemberMode::Exact, cfg.membership);
      } else {
        mr = membership(d, pf, q, cfg.membership);
      }
    } else {
      mr = membership(d, pf, q, cfg.membership);
    }
    auto v = l2_quadrature(q, pf, cfg.l2);
    json o;
    o["q"] = name;
    o["member"] = mr.member;
    o["quadrature"] = to_json(v);
    l2.push_back(o);
    if (v.verdict != Verdict::Inconclusive)
      B.add("oracle.l2." + name, (v.verdict == Verdict::Convergent) == mr.member,
            std::string(verdict_name(v.verdict)) + (mr.member ? " / member" : " / non-member"));
  }
  R["oracle"] = {{"multiplicities", orc}, {"l2", l2}};

  if (d.torus_count == 0) {
    auto g = gram_model(p, cfg.gram);
    R["gram"] = to_json(g);
    B.add("gram.spectrum_match", g.spectrum_match, num(g.spectrum_mismatch));
  }
}

} // namespace

bool AnalysisBundle::any_fail() const {
  for (auto &c : checks)
    if (!c.pass) return true;
  return false;
}

Config load_config(const json &j) {
  Config c;
  take(j, "seed", c.seed);
  if (j.contains("stability")) {
    auto &s = j["stability"];
    take(s, "radii", c.stability.radii);
    take(s, "angles", c.stability.angles);
    take(s, "collar", c.stability.collar);
  }
  if (j.contains("agler")) {
    auto &s = j["agler"];
    take(s, "rank_tol", c.agler.rank_tol);
    take(s, "fr_tol", c.agler.fr.tol);
    take(s, "fr_samples", c.agler.fr.samples);
    take(s, "fr_torus_tol", c.agler.fr.torus_tol);
    take(s, "identity_tol", c.identity_tol);
    take(s, "torus_identity_tol", c.torus_identity_tol);
    take(s, "unitarity_tol", c.unitarity_tol);
    take(s, "transfer_tol", c.transfer_tol);
    take(s, "realization_points", c.realization_points);
  }
  if (j.contains("membership")) {
    auto &s = j["membership"];
    take(s, "start_grid", c.membership.start_grid);
    take(s, "doublings", c.membership.doublings);
    take(s, "growth_tol", c.membership.growth_tol);
  }
  if (j.contains("boundary")) {
    auto &s = j["boundary"];
    take(s, "k_max", c.ladder.k_max);
    take(s, "aperture", c.ladder.aperture);
    take(s, "rays", c.ladder.rays);
    take(s, "r_lo", c.ladder.r_lo);
    take(s, "r_hi", c.ladder.r_hi);
    take(s, "float_tol", c.ladder.float_tol);
    take(s, "fit", c.ladder.fit);
    take(s, "nu_tol", c.nu_tol);
  }
  if (j.contains("l2")) {
    auto &s = j["l2"];
    take(s, "start_grid", c.l2.start_grid);
    take(s, "max_grid", c.l2.max_grid);
    take(s, "converge_tol", c.l2.converge_tol);
    take(s, "diverge_slope", c.l2.diverge_slope);
  }
  if (j.contains("gram")) {
    auto &s = j["gram"];
    take(s, "start_grid", c.gram.start_grid);
    take(s, "max_grid", c.gram.max_grid);
    take(s, "tol", c.gram.tol);
  }
  c.ladder.seed = unsigned(c.seed) + 4;
  return c;
}

json to_json(const Config &c) {
  json j;
  j["seed"] = c.seed;
  j["stability"] = {{"radii", c.stability.radii}, {"angles", c.stability.angles}, {"collar", c.stability.collar}};
  j["agler"] = {{"rank_tol", c.agler.rank_tol},
                {"fr_tol", c.agler.fr.tol},
                {"fr_samples", c.agler.fr.samples},
                {"fr_torus_tol", c.agler.fr.torus_tol},
                {"identity_tol", c.identity_tol},
                {"torus_identity_tol", c.torus_identity_tol},
                {"unitarity_tol", c.unitarity_tol},
                {"transfer_tol", c.transfer_tol},
                {"realization_points", c.realization_points}};
  j["membership"] = {{"start_grid", c.membership.start_grid},
                     {"doublings", c.membership.doublings},
                     {"growth_tol", c.membership.growth_tol}};
  j["boundary"] = {{"k_max", c.ladder.k_max}, {"aperture", c.ladder.aperture}, {"rays", c.ladder.rays},
                   {"r_lo", c.ladder.r_lo},   {"r_hi", c.ladder.r_hi},         {"float_tol", c.ladder.float_tol},
                   {"fit", c.ladder.fit},     {"nu_tol", c.nu_tol}};
  j["l2"] = {{"start_grid", c.l2.start_grid},
             {"max_grid", c.l2.max_grid},
             {"converge_tol", c.l2.converge_tol},
             {"diverge_slope", c.l2.diverge_slope}};
  j["gram"] = {{"start_grid", c.gram.start_grid}, {"max_grid", c.gram.max_grid}, {"tol", c.gram.tol}};
  return j;
}

AnalysisBundle analyze(const PolyInput &in, bool exact, const Config &cfg) {
  if (exact && !in.exact) throw PreconditionError("exact mode needs exact input");
  Builder B;
  json &R = B.b.report;
  R["tool_version"] = kVersion;
  R["mode"] = exact ? "exact" : "float";
  R["input"] = exact ? to_json(in.pe) : to_json(in.pf);
  R["config"] = to_json(cfg);
  if (exact) run(in.pe, in.pf, cfg, B, &in.pe);
  else run(in.pf, in.pf, cfg, B, in.exact ? &in.pe : nullptr);
  json cs = json::array();
  for (auto &c : B.b.checks) cs.push_back({{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  R["checks"] = cs;
  R["status"] = B.b.any_fail() ? "FAIL" : "PASS";
  return B.b;
}

} // namespace bidisk
