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
#include "bidisk/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bidisk {

namespace {

mpq_class rational_field(const json &v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  throw FormatError("exact coefficients must be strings \"a/b\" or integers");
}

double float_field(const json &v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw FormatError("float coefficients must be numbers");
}

json poly_common(int n, int m, const char *backend, const std::string &text) {
  json j;
  j["bidegree"] = {n, m};
  j["backend"] = backend;
  j["text"] = text;
  return j;
}

} // namespace

json cplx(cd z) { return json::array({z.real(), z.imag()}); }
json exact_str(const GQ &z) { return json::array({rational_str(z.re), rational_str(z.im)}); }

PolyInput parse_poly(const json &j) {
  try {
    if (!j.is_object()) throw FormatError("polynomial must be a JSON object");
    auto bd = j.at("bidegree");
    if (!bd.is_array() || bd.size() != 2) throw FormatError("bidegree must be [n,m]");
    int n = bd[0].get<int>(), m = bd[1].get<int>();
    if (n < 0 || m < 0) throw FormatError("negative bidegree");
    std::string backend = j.value("backend", "exact");
    if (backend != "exact" && backend != "float") throw FormatError("backend must be exact or float");
    auto &c = j.at("coeffs");
    if (!c.is_array() || int(c.size()) != n + 1) throw FormatError("coeffs must have n+1 rows");
    PolyInput in;
    in.exact = backend == "exact";
    in.pe = Poly2<GQ>(n, m);
    in.pf = Poly2<cd>(n, m);
    for (int a = 0; a <= n; ++a) {
      if (!c[a].is_array() || int(c[a].size()) != m + 1) throw FormatError("coeffs rows must have m+1 entries");
      for (int b = 0; b <= m; ++b) {
        const json &e = c[a][b];
        json re = e, im = 0;
        if (e.is_array()) {
          if (e.size() != 2) throw FormatError("complex entries are [re, im]");
          re = e[0];
          im = e[1];
        }
        if (in.exact) {
          in.pe.at(a, b) = GQ(rational_field(re), rational_field(im));
          in.pf.at(a, b) = in.pe.at(a, b).to_cd();
        } else {
          in.pf.at(a, b) = cd(float_field(re), float_field(im));
        }
      }
    }
    return in;
  } catch (const FormatError &) {
    throw;
  } catch (const std::exception &e) {
    throw FormatError(std::string("malformed polynomial: ") + e.what());
  }
}

json read_json_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  try {
    return json::parse(f);
  } catch (const std::exception &e) {
    throw FormatError(path + ": " + e.what());
  }
}

PolyInput read_poly_file(const std::string &path) { return parse_poly(read_json_file(path)); }

json to_json(const Poly2<GQ> &p) {
  json j = poly_common(p.n, p.m, "exact", to_string(p));
  json rows = json::array();
  for (int a = 0; a <= p.n; ++a) {
    json r = json::array();
    for (int b = 0; b <= p.m; ++b) r.push_back(exact_str(p.at(a, b)));
    rows.push_back(r);
  }
  j["coeffs"] = rows;
  return j;
}

json to_json(const Poly2<cd> &p) {
  json j = poly_common(p.n, p.m, "float", to_string(p));
  json rows = json::array();
  for (int a = 0; a <= p.n; ++a) {
    json r = json::array();
    for (int b = 0; b <= p.m; ++b) r.push_back(cplx(p.at(a, b)));
    rows.push_back(r);
  }
  j["coeffs"] = rows;
  return j;
}

json to_json(const SemistabilityReport &r) {
  json j;
  j["semistable"] = r.semistable();
  j["gcd_trivial"] = r.gcd_trivial;
  j["gcd_method"] = r.gcd_method;
  j["zero_free_verified"] = r.zero_free_verified;
  j["radii"] = r.radii;
  j["angles"] = r.angles;
  j["collar"] = r.collar;
  j["min_modulus_observed"] = r.min_modulus_observed;
  json w = json::array();
  for (auto &x : r.witnesses) w.push_back({cplx(x.first), cplx(x.second)});
  j["witnesses"] = w;
  return j;
}

json to_json(const IntersectionReport &r) {
  json j;
  j["route"] = r.route;
  j["bidegrees"] = {{r.bideg1.first, r.bideg1.second}, {r.bideg2.first, r.bideg2.second}};
  j["bezout"] = r.bezout;
  j["total"] = r.total;
  j["torus_total"] = r.torus_total;
  j["disk_total"] = r.disk_total;
  json zs = json::array();
  auto coord = [](const SphereCoord &c) {
    json o;
    if (c.inf) o = "inf";
    else o = cplx(c.v);
    return o;
  };
  for (auto &z : r.zeros) {
    json o;
    o["z1"] = coord(z.z1);
    o["z2"] = coord(z.z2);
    if (z.z1.exact && z.z2.exact) o["exact"] = {to_string(*z.z1.exact), to_string(*z.z2.exact)};
    o["multiplicity"] = z.multiplicity;
    o["region"] = region_name(z.region);
    o["chart"] = z.chart;
    zs.push_back(o);
  }
  j["zeros"] = zs;
  return j;
}

json to_json(const VecPoly &A) {
  json j = json::array();
  for (int i = 0; i < A.dim(); ++i) j.push_back(to_json(A.entry(i)));
  return j;
}

json to_json(const AglerSystem &s) {
  json j;
  j["bidegree"] = {s.n, s.m};
  j["E1"] = to_json(s.E1);
  j["F1"] = to_json(s.F1);
  j["E2"] = to_json(s.E2);
  j["F2"] = to_json(s.F2);
  j["G"] = to_json(s.G);
  j["dim_G"] = s.dim_G();
  j["unique_pair"] = s.unique_pair;
  j["identity_residual"] = s.identity_residual;
  j["fr_residual"] = s.fr_residual;
  j["fr_method"] = s.fr_method;
  return j;
}

json to_json(const Realization &r) {
  json j;
  j["state_dims"] = {r.N, r.M};
  j["unitarity_residual"] = r.unitarity_residual;
  j["transfer_residual"] = r.transfer_residual;
  j["spectral_radius_D"] = r.spectral_radius_D;
  j["A"] = cplx(r.A);
  return j;
}

json to_json(const IdealDescription &d) {
  json j;
  j["bidegree"] = {d.n, d.m};
  json g = json::array();
  for (auto &p : d.generators) g.push_back(to_json(p));
  j["generators"] = g;
  j["torus_count"] = d.torus_count;
  json pts = json::array();
  for (auto &t : d.torus_points) {
    json o;
    o["point"] = {cplx(t.z1), cplx(t.z2)};
    if (t.exact) o["exact"] = {to_string(t.e1), to_string(t.e2)};
    o["multiplicity"] = t.multiplicity;
    o["order"] = t.order;
    pts.push_back(o);
  }
  j["torus_points"] = pts;
  json gcoef = json::array(), hcoef = json::array();
  for (auto &c : d.linfty_g.c) gcoef.push_back(cplx(c));
  for (auto &c : d.linfty_h.c) hcoef.push_back(cplx(c));
  j["linfty_g_z2"] = gcoef;
  j["linfty_h_z1"] = hcoef;
  j["generator_orders_ok"] = d.generator_orders_ok;
  j["dim_G"] = d.system.dim_G();
  j["unique_pair"] = d.system.unique_pair;
  return j;
}

json to_json(const MembershipResult &r) {
  json j;
  j["member"] = r.member;
  j["mode"] = r.mode_used;
  if (!r.exact_note.empty()) j["exact_note"] = r.exact_note;
  json loc = json::array();
  for (auto &c : r.local) {
    json o;
    o["point"] = {cplx(c.z1), cplx(c.z2)};
    o["p_order"] = c.M;
    o["q_order"] = c.q_order;
    o["ok"] = c.ok;
    loc.push_back(o);
  }
  j["local_orders"] = loc;
  if (r.mode_used == "exact") {
    j["annihilator_rank"] = r.annihilator_rank;
    j["normal_form"] = r.remainder;
  } else {
    json rs = json::array();
    for (auto &x : r.ratios) rs.push_back({x.first, x.second});
    j["ratios"] = rs;
    j["growth_per_doubling"] = r.growth_per_doubling;
    j["bounded"] = r.bounded;
  }
  return j;
}

json to_json(const BoundaryAnalysis &a) {
  json j;
  j["point"] = {cplx(a.z1), cplx(a.z2)};
  j["M"] = a.M;
  j["bottom_form"] = a.bottom_form;
  j["bottom_ok"] = a.bottom_ok;
  if (a.nu) {
    j["nu"] = a.nu_text;
    j["nu_value"] = cplx(*a.nu);
    j["nu_modulus_error"] = a.nu_modulus_error;
    j["phase_residual"] = a.phase_residual;
  } else {
    j["nu"] = nullptr;
  }
  j["k"] = a.k;
  j["k_max"] = a.k_max;
  j["next_division_fails"] = a.next_fails;
  j["terms"] = a.term_text;
  j["multiplicity_floor"] = a.multiplicity_floor;
  j["intersection_multiplicity"] = a.intersection;
  j["floor_ok"] = a.floor_ok;
  json f;
  f["rays"] = a.fit.rays;
  f["radii"] = a.fit.radii;
  f["min_exponent"] = a.fit.min_exponent;
  f["max_residual"] = a.fit.max_residual;
  f["ok"] = a.fit_ok;
  j["remainder_fit"] = f;
  return j;
}

json to_json(const ConvergenceVerdict &v) {
  json j;
  json e = json::array();
  for (auto &x : v.estimates) e.push_back({x.first, x.second});
  j["estimates"] = e;
  j["verdict"] = verdict_name(v.verdict);
  j["growth_exponent"] = v.growth_exponent;
  j["last_change"] = v.last_change;
  return j;
}

json to_json(const FourierReport &f) {
  json j;
  j["box"] = {f.J, f.K};
  j["grid"] = f.grid;
  j["boxes"] = f.boxes;
  j["l1_partial"] = f.l1;
  j["l2_partial"] = f.l2;
  j["weighted_partial"] = f.weighted;
  j["l1_growth"] = f.l1_growth;
  j["l2_growth"] = f.l2_growth;
  j["l1_plateau"] = f.l1_plateau;
  j["l2_plateau"] = f.l2_plateau;
  j["weighted_plateau"] = f.weighted_plateau;
  return j;
}

json to_json(const ResultantMultiplicity &r) {
  json j;
  j["multiplicity"] = r.multiplicity;
  j["seed"] = r.seed;
  j["route"] = r.route;
  json t = json::array();
  for (auto &x : r.trials) t.push_back({{"shear", to_string(x.first)}, {"order", x.second}});
  j["trials"] = t;
  return j;
}

json to_json(const GramReport &g) {
  json j;
  j["grid"] = g.grid;
  j["grid_change"] = g.grid_change;
  j["dim_G"] = g.dim_G;
  j["commutator"] = g.commutator;
  json js = json::array();
  for (auto &e : g.joint) js.push_back({{"l1", cplx(e.l1)}, {"l2", cplx(e.l2)}, {"multiplicity", e.multiplicity}});
  j["joint_spectrum"] = js;
  j["spectrum_mismatch"] = g.spectrum_mismatch;
  j["spectrum_match"] = g.spectrum_match;
  j["intersect_count"] = g.intersect_count;
  j["e1_kernel_diff"] = g.e1_kernel_diff;
  return j;
}

namespace {
void render(const json &j, const std::string &indent, std::ostringstream &os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json &v = it.value();
    std::string key = j.is_object() ? it.key() : "-";
    if (key == "coeffs") continue;
    if (v.is_object() && v.contains("text") && v.contains("bidegree")) {
      os << indent << key << ": " << v["text"].get<std::string>() << "\n";
    } else if (v.is_structured() && !(v.is_array() && !v.empty() && v.front().is_primitive())) {
      os << indent << key << ":\n";
      render(v, indent + "  ", os);
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}
} // namespace

std::string render_text(const json &j) {
  std::ostringstream os;
  if (j.is_structured()) render(j, "", os);
  else os << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  return os.str();
}

} // namespace bidisk
