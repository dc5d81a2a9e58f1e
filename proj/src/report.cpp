#include "superfock/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "superfock/dsl.hpp"
#include "superfock/gauge.hpp"
#include "superfock/generators.hpp"
#include "superfock/mode_algebra.hpp"

namespace superfock {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad_job(const std::string& msg) { throw ParseError("job: " + msg, 1); }

GaussianRational jrat(const json& j, const std::string& key, const std::string& fallback = "0") {
  if (!j.contains(key)) return GaussianRational(Rational::from_string(fallback));
  const json& v = j.at(key);
  if (v.is_number_integer()) return GaussianRational(Rational(v.get<std::int64_t>()));
  if (v.is_string()) return GaussianRational(Rational::from_string(v.get<std::string>()));
  bad_job("field '" + key + "' must be an integer or a rational string");
}

std::string jstr(const json& j, const std::string& key, const std::string& fallback = "") {
  if (!j.contains(key)) {
    if (fallback.empty()) bad_job("missing field '" + key + "'");
    return fallback;
  }
  return j.at(key).get<std::string>();
}

SuperDimension jdim(const json& j) {
  if (!j.contains("dim")) bad_job("missing field 'dim'");
  auto d = j.at("dim");
  if (!d.is_array() || d.size() != 2) bad_job("'dim' must be [N, M]");
  return SuperDimension(d[0].get<int>(), d[1].get<int>());
}

Window jwindow(const json& j, const std::string& key, bool required = true) {
  if (!j.contains(key)) {
    if (required) bad_job("missing field '" + key + "'");
    return {0, 0};
  }
  auto w = j.at(key);
  if (!w.is_array() || w.size() != 2) bad_job("'" + key + "' must be [E, D]");
  return Window{w[0].get<int>(), w[1].get<int>()};
}

OscillatorUniverse juniverse(const json& j) {
  OscillatorUniverse u;
  u.dim = jdim(j);
  std::string aux = jstr(j, "aux", "trivial");
  if (aux == "trivial") return u;
  const std::string prefix = "oscillator:";
  if (aux.rfind(prefix, 0) == 0) {
    std::string body = aux.substr(prefix.size());
    // form b<k>f<l>
    auto fpos = body.find('f');
    if (body.size() >= 4 && body[0] == 'b' && fpos != std::string::npos) {
      u.aux_bosonic = std::stoi(body.substr(1, fpos - 1));
      u.aux_fermionic = std::stoi(body.substr(fpos + 1));
      return u;
    }
  }
  bad_job("aux must be 'trivial' or 'oscillator:b<k>f<l>'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 1);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModeAlgebraSpec build_mode_spec(const json& j, std::string& label) {
  std::string spec = jstr(j, "spec");
  label = spec;
  if (spec == "virasoro") return virasoro_spec(jrat(j, "c"));
  if (spec == "km-gl11") return km_spec(FiniteSuperalgebra::gl11(), jrat(j, "k", "1"));
  if (spec == "kmgl")
    return kmgl_spec(j.value("n", 1), j.value("m", 0), jrat(j, "k1"), jrat(j, "k2"));
  if (spec == "sl-kmgl")
    return kmgl_sl_restriction(j.value("n", 1), j.value("m", 0), jrat(j, "k1"), jrat(j, "k2"));
  if (spec == "scalg") return scalg_spec(jrat(j, "a"), jrat(j, "a1"));
  if (spec == "k11-contact") return k11_contact_spec();
  if (spec == "k12-contact") return k12_contact_spec();
  if (spec == "xsc") {
    XscParameters p;
    if (j.contains("a") || j.contains("alpha")) {
      p.a = jrat(j, "a");
      p.a_prime = jrat(j, "a1");
      p.alpha = jrat(j, "alpha");
      p.beta = jrat(j, "beta");
      p.gamma = jrat(j, "gamma");
      p.gamma_prime = jrat(j, "gamma1");
      p.e = jrat(j, "e");
      p.b = jrat(j, "b");
    } else {
      p = XscParameters::from_constants(jrat(j, "c"), jrat(j, "k1"), jrat(j, "k2"));
    }
    return xsc_spec(p);
  }
  if (spec == "file") {
    std::map<std::string, GaussianRational> params;
    if (j.contains("params"))
      for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        params[it.key()] = GaussianRational(Rational::from_string(it.value().get<std::string>()));
    try {
      return parse_mode_spec_file(read_file(jstr(j, "path")), params);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1);
    }
  }
  bad_job("unknown mode-algebra spec '" + spec + "'");
}

FiniteSuperalgebra build_algebra(const json& j) {
  std::string name = jstr(j, "algebra", "u1");
  if (name == "u1") return FiniteSuperalgebra::u1();
  if (name == "gl11") return FiniteSuperalgebra::gl11();
  if (name == "file") {
    try {
      return parse_algebra_file(read_file(jstr(j, "path")));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 1);
    }
  }
  bad_job("unknown algebra '" + name + "'");
}

std::string window_str(const Window& w) {
  return std::to_string(w.e_max) + "," + std::to_string(w.d_max);
}

// ---- individual job bodies ----------------------------------------------

CheckRecord job_modealg_verify(const json& j) {
  CheckRecord r;
  std::string label;
  ModeAlgebraSpec spec = build_mode_spec(j, label);
  r.anchor = "modealg.skewness+jacobi:" + label;
  ModeReport skew = verify_graded_skewness(spec);
  ModeReport jac = verify_super_jacobi(spec);
  r.constants.emplace_back("generators", std::to_string(spec.count()));
  if (skew.ok && jac.ok) {
    r.status = "pass";
    r.residual = "0";
  } else {
    r.status = "fail";
    const ModeViolation& v = skew.ok ? jac.violations.front() : skew.violations.front();
    r.residual = v.identity + " -> " + v.target + ": " + v.residual.str();
    r.detail = skew.str() + jac.str();
  }
  return r;
}

CheckRecord job_modealg_params(const json& j) {
  CheckRecord r;
  r.anchor = "modealg.parameter-table";
  XscParameters p = XscParameters::from_constants(jrat(j, "c"), jrat(j, "k1"), jrat(j, "k2"));
  r.constants = {{"a", p.a.str()},         {"a1", p.a_prime.str()},
                 {"alpha", p.alpha.str()}, {"beta", p.beta.str()},
                 {"gamma", p.gamma.str()}, {"gamma1", p.gamma_prime.str()},
                 {"e", p.e.str()},         {"b", p.b.str()},
                 {"twelve_a", (p.a * GaussianRational(12)).str()}};
  r.status = p.constraint_holds() ? "pass" : "fail";
  r.residual = r.ok() ? "0" : "constraint 2 alpha - beta = 2a - b/2 violated";
  return r;
}

CheckRecord job_modealg_redefine(const json& j) {
  CheckRecord r;
  r.anchor = "modealg.redefinition->reduced-superconformal";
  XscParameters p = XscParameters::from_constants(jrat(j, "c"), jrat(j, "k1"), jrat(j, "k2"));
  ModeAlgebraSpec redefined = apply_redefinition(xsc_spec(p), p, j.value("project", false));
  bool jac = verify_super_jacobi(redefined).ok;
  bool equal = table_equal(sub_table(redefined, {"L", "G"}), scalg_spec(p.a, GaussianRational(0)));
  r.constants = {{"twelve_a", (p.a * GaussianRational(12)).str()}};
  r.status = (jac && equal) ? "pass" : "fail";
  r.residual = r.ok() ? "0" : (equal ? "jacobi violated" : "sub-table differs from the target");
  return r;
}

CheckRecord job_fock_basis(const json& j) {
  CheckRecord r;
  r.anchor = "fock.window-basis";
  OscillatorUniverse u = juniverse(j);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  auto basis = enumerate_basis(u, w);
  r.constants = {{"size", std::to_string(basis.size())}};
  std::string listing;
  for (std::size_t i = 0; i < basis.size() && i < 12; ++i)
    listing += basis[i].str() + (i + 1 < basis.size() ? "; " : "");
  r.detail = listing;
  r.status = "pass";
  r.residual = "0";
  return r;
}

CheckRecord job_fock_generator(const json& j) {
  CheckRecord r;
  r.anchor = "fock.normal-ordered-generator";
  OscillatorUniverse u = juniverse(j);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  SuperVectorField xi = parse_vector_field(jstr(j, "xi"), u.dim);
  try {
    TrajOperator op = vector_field_generator(u, xi);
    WindowMatrix m = window_matrix(op, enumerate_basis(u, w));
    r.constants = {{"columns", std::to_string(m.basis.size())},
                   {"entries", std::to_string(m.nonzero_entries())}};
    r.detail = m.first_nonzero(6);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
  r.status = "pass";
  r.residual = "0";
  return r;
}

CheckRecord job_fock_ext(const json& j) {
  CheckRecord r;
  r.anchor = "fock.bracket-defect=extension";
  OscillatorUniverse u = juniverse(j);
  Window w = jwindow(j, "window");
  Window margin = jwindow(j, "margin");
  r.window = window_str(w);
  r.margin = window_str(margin);
  SuperVectorField xi = parse_vector_field(jstr(j, "xi"), u.dim);
  SuperVectorField eta = parse_vector_field(jstr(j, "eta"), u.dim);
  WindowMatrix defect = commutator_defect(u, xi, eta, w, margin);
  TrajOperator ext = extension_operator(u, xi, eta, declared_constants(u));
  WindowMatrix diff = defect - window_matrix(ext, defect.basis);
  r.constants = {{"columns", std::to_string(defect.basis.size())}};
  if (diff.is_zero()) {
    r.status = "pass";
    r.residual = "0";
  } else {
    r.status = "fail";
    r.residual = std::to_string(diff.nonzero_entries()) + " nonzero entries";
    r.detail = diff.first_nonzero();
  }
  return r;
}

CheckRecord job_fock_central_charge(const json& j) {
  CheckRecord r;
  r.anchor = "fock.temporal-central-charge";
  OscillatorUniverse u = juniverse(j);
  GaussianRational c = central_charge_probe([&](int m) { return temporal_generator(u, m); });
  GaussianRational expected =
      u.declared_aux_charge() +
      GaussianRational(2 * (u.dim.n_spatial - u.dim.m_fermionic));
  r.constants = {{"c_temp", c.str()}, {"declared", expected.str()}};
  r.status = c == expected ? "pass" : "fail";
  r.residual = r.ok() ? "0" : (c - expected).str();
  return r;
}

CheckRecord job_fock_superconformal(const json& j) {
  CheckRecord r;
  r.anchor = "fock.superconformal-table";
  OscillatorUniverse u = juniverse(j);
  if (u.dim.n_spatial != 0 || u.dim.m_fermionic != 1)
    bad_job("superconformal check runs on dim [0,1]");
  int mmax = j.value("mmax", 2);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  XscParameters p = XscParameters::from_constants(u.declared_aux_charge(), GaussianRational(0),
                                                  GaussianRational(0));
  ModeAlgebraSpec spec = xsc_spec(p);
  auto basis = enumerate_basis(u, w);
  auto member = [&](int g, int mode) {
    SuperconformalFamily f = superconformal_generators(u, mode);
    switch (g) {
      case 0: return f.L;
      case 1: return f.G;
      case 2: return f.Th;
      case 3: return f.U;
      case 4: return f.V;
      default: return f.W;
    }
  };
  int checked = 0;
  for (int a = 0; a < spec.count(); ++a) {
    for (int b = 0; b < spec.count(); ++b) {
      for (int m = -mmax; m <= mmax; ++m) {
        for (int n = -mmax; n <= mmax; ++n) {
          TrajOperator am = member(a, m);
          TrajOperator bn = member(b, n);
          for (const auto& s : basis) {
            StateVector lhs = apply_graded_commutator(am, bn, s);
            for (const auto& term : spec.bracket(a, b)) {
              GaussianRational coeff = term.coeff.evaluate(
                  GaussianRational(m), GaussianRational(n), GaussianRational());
              if (coeff.is_zero()) continue;
              if (term.target == kCentral) {
                if (m + n == 0) accumulate(lhs, s, Scalar(-coeff));
              } else {
                accumulate(lhs, apply(member(term.target, m + n), s), Scalar(-coeff));
              }
            }
            if (!is_zero(lhs)) {
              r.status = "fail";
              r.residual = "[" + spec.name(a) + "_" + std::to_string(m) + ", " + spec.name(b) +
                           "_" + std::to_string(n) + "] defect on " + s.str();
              return r;
            }
          }
          ++checked;
        }
      }
    }
  }
  r.constants = {{"brackets", std::to_string(checked)},
                 {"twelve_a", (p.a * GaussianRational(12)).str()}};
  r.status = "pass";
  r.residual = "0";
  return r;
}

CheckRecord job_fock_sr(const json& j) {
  CheckRecord r;
  r.anchor = "fock.extension-closed-forms+kernel-laws";
  OscillatorUniverse u = juniverse(j);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  SuperVectorField xi = parse_vector_field(jstr(j, "xi"), u.dim);
  SuperVectorField eta = parse_vector_field(jstr(j, "eta"), u.dim);
  ExtensionConstants k = declared_constants(u);
  if (j.contains("c")) k.c = jrat(j, "c");
  if (j.contains("k1")) k.k1 = jrat(j, "k1");
  if (j.contains("k2")) k.k2 = jrat(j, "k2");
  TrajOperator a = extension_operator(u, xi, eta, k);
  TrajOperator b = extension_operator_kernel(u, xi, eta, k);
  auto basis = enumerate_basis(u, w);
  for (const auto& s : basis) {
    StateVector diff = apply(a, s);
    accumulate(diff, apply(b, s), Scalar(-1));
    if (!is_zero(diff)) {
      r.status = "fail";
      r.residual = "closed forms differ on " + s.str();
      return r;
    }
  }
  // Transformation law of the S_1 kernel on a smearing sampled from eta.
  SmearingTensor h(u.dim, 0, 1, eta.parity());
  for (int nu = 0; nu <= u.dim.total(); ++nu) {
    SuperFunction comp = eta.component(nu);
    if (!comp.is_zero() && comp.parity() == ((eta.parity() + u.dim.deg(nu)) & 1))
      h.set_component({nu}, comp);
  }
  TrajOperator s1 = sn_operator(u, h, false);
  TrajOperator s1t = sn_operator(u, s1_transformed_smearing(xi, h), false);
  TrajOperator lx = vector_field_generator(u, xi);
  for (const auto& s : basis) {
    StateVector diff = apply_graded_commutator(lx, s1, s);
    accumulate(diff, apply(s1t, s), Scalar(-1));
    if (!is_zero(diff)) {
      r.status = "fail";
      r.residual = "S_1 transformation law defect on " + s.str();
      return r;
    }
  }
  r.constants = {{"columns", std::to_string(basis.size())}};
  r.status = "pass";
  r.residual = "0";
  return r;
}

CheckRecord job_gauge_verify(const json& j) {
  CheckRecord r;
  r.anchor = "gauge.finite-superalgebra";
  FiniteSuperalgebra g = build_algebra(j);
  AlgebraReport rep = verify_finite_superalgebra(g);
  r.constants = {{"dim", std::to_string(g.dim())}};
  if (rep.ok) {
    r.status = "pass";
    r.residual = "0";
  } else {
    r.status = "fail";
    const auto& v = rep.violations.front();
    r.residual = v.identity + " " + v.detail;
  }
  return r;
}

CurrentSmearing jsmearing(const json& j, const std::string& key, const CurrentConfig& cfg,
                          SuperDimension dim) {
  if (!j.contains(key)) bad_job("missing field '" + key + "'");
  const json& arr = j.at(key);
  std::vector<SuperFunction> comps;
  if (arr.is_string()) {
    comps.push_back(parse_function(arr.get<std::string>(), dim));
  } else {
    for (const auto& item : arr) comps.push_back(parse_function(item.get<std::string>(), dim));
  }
  if (comps.empty()) bad_job("empty smearing '" + key + "'");
  while ((int)comps.size() < cfg.algebra.dim())
    comps.push_back(SuperFunction::zero(dim, comps.front().parity()));
  try {
    return make_smearing(cfg, std::move(comps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

CheckRecord job_gauge_cocycle(const json& j) {
  CheckRecord r;
  r.anchor = "gauge.current-cocycle";
  SuperDimension dim = jdim(j);
  CurrentConfig cfg{build_algebra(j), Scalar(jrat(j, "level", "1"))};
  OscillatorUniverse u = current_universe(dim, cfg);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  CurrentSmearing X = jsmearing(j, "X", cfg, dim);
  CurrentSmearing Y = jsmearing(j, "Y", cfg, dim);
  GaugeCheckResult res = gauge_cocycle_check(u, X, Y, cfg, w);
  r.status = res.ok ? "pass" : "fail";
  r.residual = res.ok ? "0" : res.detail;
  return r;
}

CheckRecord job_gauge_intertwine(const json& j) {
  CheckRecord r;
  r.anchor = "gauge.diffeomorphism-intertwiner";
  SuperDimension dim = jdim(j);
  CurrentConfig cfg{build_algebra(j), Scalar(jrat(j, "level", "1"))};
  OscillatorUniverse u = current_universe(dim, cfg);
  Window w = jwindow(j, "window");
  r.window = window_str(w);
  SuperVectorField xi = parse_vector_field(jstr(j, "xi"), dim);
  CurrentSmearing Y = jsmearing(j, "Y", cfg, dim);
  GaugeCheckResult res = gauge_intertwine_check(u, xi, Y, cfg, w);
  r.status = res.ok ? "pass" : "fail";
  r.residual = res.ok ? "0" : res.detail;
  return r;
}

CheckRecord dispatch(const json& j) {
  std::string check = jstr(j, "check");
  CheckRecord r;
  if (check == "modealg.verify") r = job_modealg_verify(j);
  else if (check == "modealg.params") r = job_modealg_params(j);
  else if (check == "modealg.redefine") r = job_modealg_redefine(j);
  else if (check == "fock.basis") r = job_fock_basis(j);
  else if (check == "fock.generator") r = job_fock_generator(j);
  else if (check == "fock.ext") r = job_fock_ext(j);
  else if (check == "fock.central-charge") r = job_fock_central_charge(j);
  else if (check == "fock.superconformal") r = job_fock_superconformal(j);
  else if (check == "fock.sr") r = job_fock_sr(j);
  else if (check == "gauge.verify") r = job_gauge_verify(j);
  else if (check == "gauge.cocycle") r = job_gauge_cocycle(j);
  else if (check == "gauge.intertwine") r = job_gauge_intertwine(j);
  else bad_job("unknown check '" + check + "'");
  r.check = check;
  r.job = j.value("id", check);
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("json: ") + e.what(), 1);
  }
}

}  // namespace

std::string to_record_line(const CheckRecord& r) {
  ordered_json out;
  out["schema"] = kReportSchema;
  out["job"] = r.job;
  out["check"] = r.check;
  out["anchor"] = r.anchor;
  out["status"] = r.status;
  out["window"] = r.window;
  out["margin"] = r.margin;
  out["residual"] = r.residual;
  ordered_json consts;
  for (const auto& [k, v] : r.constants) consts[k] = v;
  out["constants"] = consts;
  out["detail"] = r.detail;
  return out.dump();
}

std::string to_text_line(const CheckRecord& r) {
  std::string line = (r.ok() ? "PASS " : "FAIL ") + r.job + "  [" + r.check + "]";
  if (!r.window.empty()) line += "  window=" + r.window;
  if (!r.margin.empty()) line += " margin=" + r.margin;
  line += "  residual=" + r.residual;
  for (const auto& [k, v] : r.constants) line += "  " + k + "=" + v;
  line += "  (" + std::to_string(r.wall_ms) + " ms)";
  if (!r.ok() && !r.detail.empty()) line += "\n      " + r.detail;
  return line;
}

CheckRecord run_job_json(const std::string& json_object_text) {
  json j = parse_json(json_object_text);
  auto start = std::chrono::steady_clock::now();
  CheckRecord r = dispatch(j);
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  return r;
}

bool SuiteResult::all_ok() const {
  for (const auto& r : records)
    if (!r.ok()) return false;
  return true;
}

SuiteResult run_suite(const std::string& json_array_text) {
  json arr = parse_json(json_array_text);
  if (!arr.is_array()) throw ParseError("suite file must hold a json array of jobs", 1);
  SuiteResult out;
  for (const auto& j : arr) {
    auto start = std::chrono::steady_clock::now();
    CheckRecord r = dispatch(j);
    r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    out.records.push_back(std::move(r));
  }
  std::sort(out.records.begin(), out.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.job < b.job; });
  return out;
}

std::string render_records(const SuiteResult& suite) {
  std::string out;
  for (const auto& r : suite.records) out += to_record_line(r) + "\n";
  return out;
}

std::string render_text(const SuiteResult& suite) {
  std::string out;
  int passed = 0;
  for (const auto& r : suite.records) {
    out += to_text_line(r) + "\n";
    if (r.ok()) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(suite.records.size()) + " checks passed\n";
  return out;
}

}  // namespace superfock
