#include "superfock/mode_algebra.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace superfock {

namespace {
int pow_sign(int e) { return (e & 1) ? -1 : 1; }
const GaussianRational kHalf(Rational(1, 2));
}  // namespace

const std::vector<ModeBracketTerm> ModeAlgebraSpec::empty_;

void ModeAlgebraSpec::add_generator(const std::string& name, int parity) {
  if (find(name)) throw std::invalid_argument("duplicate generator '" + name + "'");
  if (name == "CENTRAL") throw std::invalid_argument("CENTRAL is reserved");
  names_.push_back(name);
  parities_.push_back(parity & 1);
}

int ModeAlgebraSpec::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw std::out_of_range("unknown generator '" + name + "'");
  return *idx;
}

std::optional<int> ModeAlgebraSpec::find(const std::string& name) const {
  for (int a = 0; a < count(); ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

void ModeAlgebraSpec::set_bracket(int a, int b, std::vector<ModeBracketTerm> terms) {
  // merge duplicate targets, drop zeros
  std::map<int, Poly> acc;
  for (auto& t : terms) acc[t.target] += t.coeff;
  std::vector<ModeBracketTerm> clean;
  for (auto& [target, poly] : acc)
    if (!poly.is_zero()) clean.push_back({target, poly});
  table_[{a, b}] = std::move(clean);
}

const std::vector<ModeBracketTerm>& ModeAlgebraSpec::bracket(int a, int b) const {
  auto it = table_.find({a, b});
  return it == table_.end() ? empty_ : it->second;
}

bool ModeAlgebraSpec::has_bracket(int a, int b) const { return table_.count({a, b}) > 0; }

void ModeAlgebraSpec::complete_by_skewness() {
  for (int a = 0; a < count(); ++a) {
    for (int b = 0; b < count(); ++b) {
      if (has_bracket(a, b)) continue;
      if (!has_bracket(b, a)) { set_bracket(a, b, {}); set_bracket(b, a, {}); continue; }
      // [A_m, B_n] = -(-)^{ab} [B_n, A_m] = -(-)^{ab} (swap m<->n of table[b][a])
      std::vector<ModeBracketTerm> out;
      int s = pow_sign(parities_[a] * parities_[b] + 1);
      for (const auto& t : bracket(b, a)) {
        Poly c = t.coeff.swap_mn();
        out.push_back({t.target, s < 0 ? -c : c});
      }
      set_bracket(a, b, std::move(out));
    }
  }
}

std::string ModeAlgebraSpec::str() const {
  std::string out;
  for (const auto& [key, terms] : table_) {
    auto [a, b] = key;
    bool anti = parities_[a] == 1 && parities_[b] == 1;
    out += "[" + names_[a] + "_m, " + names_[b] + "_n]" + (anti ? "+" : "-") + " =";
    if (terms.empty()) out += " 0";
    for (const auto& t : terms) {
      out += " + (" + t.coeff.str() + ")*";
      out += t.target == kCentral ? "CENTRAL" : names_[t.target];
    }
    out += "\n";
  }
  return out;
}

std::string ModeReport::str() const {
  if (ok) return "ok";
  std::string out;
  for (const auto& v : violations) {
    out += v.identity + " [";
    for (std::size_t i = 0; i < v.generators.size(); ++i)
      out += (i ? "," : "") + v.generators[i];
    out += "] -> " + v.target + ": " + v.residual.str() + "\n";
  }
  return out;
}

ModeReport verify_graded_skewness(const ModeAlgebraSpec& spec) {
  ModeReport rep;
  for (int a = 0; a < spec.count(); ++a) {
    for (int b = a; b < spec.count(); ++b) {
      std::map<int, Poly> residual;
      for (const auto& t : spec.bracket(a, b)) residual[t.target] += t.coeff;
      int s = pow_sign(spec.parity(a) * spec.parity(b));
      for (const auto& t : spec.bracket(b, a)) {
        Poly c = t.coeff.swap_mn();
        residual[t.target] += s < 0 ? -c : c;
      }
      for (auto& [target, poly] : residual) {
        Poly reduced = target == kCentral
            ? poly.substitute(Poly::m(), -Poly::m(), Poly::p())
            : poly;
        if (!reduced.is_zero()) {
          rep.ok = false;
          rep.violations.push_back({"graded-skewness",
                                    {spec.name(a), spec.name(b)},
                                    target == kCentral ? "CENTRAL" : spec.name(target),
                                    reduced});
        }
      }
    }
  }
  return rep;
}

namespace {

// [X_{u_a}, [Y_{u_b}, Z_{u_c}]] expanded through the table, with the three
// generators sitting on the given mode axes (0 = m, 1 = n, 2 = p).
std::map<int, Poly> double_bracket(const ModeAlgebraSpec& spec, int a, int b, int c,
                                   int axis_a, int axis_b, int axis_c) {
  std::map<int, Poly> out;
  Poly va = Poly::var(axis_a), vb = Poly::var(axis_b), vc = Poly::var(axis_c);
  for (const auto& inner : spec.bracket(b, c)) {
    if (inner.target == kCentral) continue;  // central brackets vanish
    Poly inner_coeff = inner.coeff.substitute(vb, vc, Poly());
    for (const auto& outer : spec.bracket(a, inner.target)) {
      Poly outer_coeff = outer.coeff.substitute(va, vb + vc, Poly());
      out[outer.target] += inner_coeff * outer_coeff;
    }
  }
  return out;
}

}  // namespace

ModeReport verify_super_jacobi(const ModeAlgebraSpec& spec) {
  ModeReport rep;
  for (int a = 0; a < spec.count(); ++a) {
    for (int b = a; b < spec.count(); ++b) {
      for (int c = b; c < spec.count(); ++c) {
        std::map<int, Poly> acc;
        struct Leg { int x, y, z, ax, ay, az, sign; };
        const Leg legs[3] = {
            {a, b, c, 0, 1, 2, pow_sign(spec.parity(a) * spec.parity(c))},
            {b, c, a, 1, 2, 0, pow_sign(spec.parity(b) * spec.parity(a))},
            {c, a, b, 2, 0, 1, pow_sign(spec.parity(c) * spec.parity(b))},
        };
        for (const auto& leg : legs) {
          auto part = double_bracket(spec, leg.x, leg.y, leg.z, leg.ax, leg.ay, leg.az);
          for (auto& [target, poly] : part) acc[target] += leg.sign < 0 ? -poly : poly;
        }
        for (auto& [target, poly] : acc) {
          Poly reduced = target == kCentral
              ? poly.substitute(Poly::m(), Poly::n(), -Poly::m() - Poly::n())
              : poly;
          if (!reduced.is_zero()) {
            rep.ok = false;
            rep.violations.push_back({"super-jacobi",
                                      {spec.name(a), spec.name(b), spec.name(c)},
                                      target == kCentral ? "CENTRAL" : spec.name(target),
                                      reduced});
          }
        }
      }
    }
  }
  return rep;
}

ModeAlgebraSpec virasoro_spec(const GaussianRational& c) {
  ModeAlgebraSpec s;
  s.add_generator("L", 0);
  Poly m = Poly::m(), n = Poly::n();
  // [L_m, L_n] = (n - m) L_{m+n} - c/12 (m^3 - m) delta_{m+n}
  s.set_bracket(0, 0, {{0, n - m},
                       {kCentral, (m - m.pow(3)).scaled(c * GaussianRational(Rational(1, 12)))}});
  s.complete_by_skewness();
  return s;
}

ModeAlgebraSpec km_spec(const FiniteSuperalgebra& g, const GaussianRational& k) {
  ModeAlgebraSpec s;
  for (int a = 0; a < g.dim(); ++a) s.add_generator(g.names[a], g.parities[a]);
  Poly n = Poly::n();
  for (int a = 0; a < g.dim(); ++a) {
    for (int b = 0; b < g.dim(); ++b) {
      std::vector<ModeBracketTerm> terms;
      for (int c = 0; c < g.dim(); ++c) {
        GaussianRational coeff = GaussianRational::i() * g.f[a][b][c];
        if (!coeff.is_zero()) terms.push_back({c, Poly(coeff)});
      }
      GaussianRational lvl = k * g.metric[a][b];
      if (!lvl.is_zero()) terms.push_back({kCentral, n.scaled(lvl)});
      s.set_bracket(a, b, std::move(terms));
    }
  }
  return s;
}

ModeAlgebraSpec kmgl_spec(int nsp, int mfer, const GaussianRational& k1,
                          const GaussianRational& k2) {
  SuperDimension dim(nsp, mfer);
  const int d = dim.total() + 1;
  ModeAlgebraSpec s;
  auto idx = [&](int mu, int nu) { return mu * d + nu; };
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu)
      s.add_generator("T" + std::to_string(mu) + "_" + std::to_string(nu),
                      (dim.deg(mu) + dim.deg(nu)) & 1);
  Poly n = Poly::n();
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      for (int sg = 0; sg < d; ++sg) {
        for (int ta = 0; ta < d; ++ta) {
          std::vector<ModeBracketTerm> terms;
          if (sg == nu) terms.push_back({idx(mu, ta), Poly(1)});
          if (mu == ta) {
            int sign = pow_sign((dim.deg(mu) + dim.deg(nu)) * (dim.deg(sg) + dim.deg(ta)) + 1);
            terms.push_back({idx(sg, nu), Poly(GaussianRational(sign))});
          }
          GaussianRational central;
          if (mu == ta && sg == nu) central += k1 * GaussianRational(pow_sign(dim.deg(mu)));
          if (mu == nu && sg == ta)
            central += k2 * GaussianRational(pow_sign(dim.deg(mu) + dim.deg(sg)));
          if (!central.is_zero()) terms.push_back({kCentral, (-n).scaled(central)});
          s.set_bracket(idx(mu, nu), idx(sg, ta), std::move(terms));
        }
      }
    }
  }
  return s;
}

ModeAlgebraSpec scalg_spec(const GaussianRational& a, const GaussianRational& a_prime) {
  ModeAlgebraSpec s;
  s.add_generator("L", 0);
  s.add_generator("G", 1);
  Poly m = Poly::m(), n = Poly::n();
  s.set_bracket(0, 0, {{0, n - m},
                       {kCentral, m.pow(3).scaled(-a) + m.scaled(a_prime)}});
  s.set_bracket(0, 1, {{1, n - m.scaled(kHalf)}});
  s.set_bracket(1, 1, {{0, Poly(2)},
                       {kCentral, m.pow(2).scaled(a * GaussianRational(4)) - Poly(a_prime)}});
  s.complete_by_skewness();
  return s;
}

ModeAlgebraSpec k11_contact_spec() {
  ModeAlgebraSpec s;
  s.add_generator("l", 0);
  s.add_generator("g", 1);
  Poly m = Poly::m(), n = Poly::n();
  s.set_bracket(0, 0, {{0, n - m}});
  s.set_bracket(0, 1, {{1, n - m.scaled(kHalf)}});
  s.set_bracket(1, 1, {{0, Poly(2)}});
  s.complete_by_skewness();
  return s;
}

ModeAlgebraSpec k12_contact_spec() {
  ModeAlgebraSpec s;
  s.add_generator("l", 0);
  s.add_generator("t", 0);
  s.add_generator("g", 1);
  s.add_generator("gb", 1);
  Poly m = Poly::m(), n = Poly::n();
  s.set_bracket(0, 0, {{0, n - m}});
  s.set_bracket(0, 1, {{1, n}});
  s.set_bracket(0, 2, {{2, n - m.scaled(kHalf)}});
  s.set_bracket(0, 3, {{3, n - m.scaled(kHalf)}});
  s.set_bracket(1, 2, {{2, Poly(1)}});
  s.set_bracket(1, 3, {{3, Poly(-1)}});
  s.set_bracket(2, 3, {{0, Poly(2)}, {1, n - m}});
  s.set_bracket(1, 1, {});
  s.set_bracket(2, 2, {});
  s.set_bracket(3, 3, {});
  s.complete_by_skewness();
  return s;
}

XscParameters XscParameters::from_constants(const GaussianRational& c, const GaussianRational& k1,
                                            const GaussianRational& k2) {
  XscParameters p;
  GaussianRational c2_12 = (c - GaussianRational(2)) * GaussianRational(Rational(1, 12));
  p.a = GaussianRational(Rational(-3, 4)) + k1 * GaussianRational(Rational(3, 4)) +
        k2 * GaussianRational(Rational(1, 4)) + c2_12;
  p.a_prime = c2_12;
  p.alpha = GaussianRational(Rational(-5, 4)) + c2_12;
  p.beta = -(k1 + k2) * GaussianRational(kHalf) - GaussianRational(1);
  p.gamma = GaussianRational(Rational(-1, 2));
  p.gamma_prime = (c - GaussianRational(2)) * GaussianRational(Rational(1, 24));
  p.e = GaussianRational(-2) + c2_12;
  p.b = k1 * GaussianRational(2);
  return p;
}

bool XscParameters::constraint_holds() const {
  return alpha * GaussianRational(2) - beta == a * GaussianRational(2) - b * kHalf;
}

ModeAlgebraSpec xsc_spec(const XscParameters& p) {
  ModeAlgebraSpec s;
  s.add_generator("L", 0);
  s.add_generator("G", 1);
  s.add_generator("Th", 1);
  s.add_generator("U", 0);
  s.add_generator("V", 0);
  s.add_generator("W", 1);
  const int L = 0, G = 1, Th = 2, U = 3, V = 4, W = 5;
  Poly m = Poly::m(), n = Poly::n();
  GaussianRational two(2);

  s.set_bracket(L, L, {{L, n - m}, {kCentral, m.pow(3).scaled(-p.a) + m.scaled(p.a_prime)}});
  s.set_bracket(L, G,
                {{G, n - m.scaled(kHalf)},
                 {Th, m.pow(3).scaled(p.alpha) + (m.pow(2) * n).scaled(p.beta) -
                          (m * n + m.pow(2).scaled(kHalf)).scaled(p.gamma) -
                          m.scaled(p.gamma_prime * two)}});
  s.set_bracket(G, G,
                {{L, Poly(2)},
                 {kCentral, m.pow(2).scaled(p.b) + Poly(p.gamma_prime * two - p.a_prime)},
                 {U, (m.pow(2) + n.pow(2)).scaled(p.alpha * two - p.e) +
                         (m * n).scaled(p.beta * two - p.e) - (m + n).scaled(p.gamma) -
                         Poly(p.gamma_prime * two)},
                 {V, Poly(p.e)}});
  s.set_bracket(L, Th, {{Th, n + m.scaled(GaussianRational(Rational(3, 2)))}});
  s.set_bracket(L, U, {{U, n + m}});
  s.set_bracket(L, V, {{V, n - m}, {U, m.pow(3) + (m.pow(2) * n).scaled(kHalf)}});
  s.set_bracket(L, W, {{W, n - m.scaled(kHalf)}});
  s.set_bracket(G, Th, {{kCentral, Poly(-1)}, {U, Poly(1)}});
  s.set_bracket(G, U, {{Th, m.scaled(two) + n}});
  s.set_bracket(G, V, {{W, n - m.scaled(two)},
                       {Th, m.pow(3).scaled(two) + (m.pow(2) * n).scaled(GaussianRational(3)) +
                                m * n.pow(2)}});
  s.set_bracket(G, W, {{V, Poly(1)}, {U, -(m.pow(2).scaled(two) + m * n)}});
  for (int x : {Th, U, V, W})
    for (int y : {Th, U, V, W})
      s.set_bracket(x, y, {});
  s.complete_by_skewness();
  return s;
}

namespace {

// A formal combination X_m = sum_T coeff_T(m) T_m used by the redefinition.
using Combo = std::map<int, Poly>;  // target -> polynomial in m (axis 0)

Combo identity_combo(int g) { return Combo{{g, Poly(1)}}; }

// Bracket of two combinations through the table; returns target -> Poly(m,n).
std::map<int, Poly> combo_bracket(const ModeAlgebraSpec& spec, const Combo& x, const Combo& y) {
  std::map<int, Poly> out;
  for (const auto& [gx, cx] : x) {
    Poly cxm = cx;  // already in axis m
    for (const auto& [gy, cy] : y) {
      Poly cyn = cy.substitute(Poly::n(), Poly(), Poly());  // relabel m -> n
      Poly factor = cxm * cyn;
      for (const auto& t : spec.bracket(gx, gy)) out[t.target] += factor * t.coeff;
    }
  }
  return out;
}

}  // namespace

ModeAlgebraSpec apply_redefinition(const ModeAlgebraSpec& spec, const XscParameters& p,
                                   bool project) {
  const int L = spec.index_of("L"), G = spec.index_of("G");
  const int Th = spec.index_of("Th"), U = spec.index_of("U"), V = spec.index_of("V"),
            W = spec.index_of("W");
  Poly m = Poly::m();

  //

  // Forward combinations (central delta_m shifts commute with everything and
  // only matter in the back-substitution below).
  std::map<int, Combo> fwd;
  for (int g = 0; g < spec.count(); ++g) fwd[g] = identity_combo(g);
  fwd[L][U] += m.pow(2).scaled(p.beta * kHalf);
  fwd[G][W] += Poly(-(p.e * kHalf));
  fwd[G][Th] += m.pow(2).scaled(p.beta - p.alpha * GaussianRational(2)) + m.scaled(p.gamma) +
                Poly(p.gamma_prime);

  // Central parts of the shifts: L' = L - a'/2 delta_m + ..., so replacing
  // L_{m+n} by L'_{m+n} adds +a'/2 on the delta_{m+n} support.
  std::map<int, GaussianRational> central_shift;
  central_shift[L] = -(p.a_prime * kHalf);

  ModeAlgebraSpec out;
  for (int g = 0; g < spec.count(); ++g) out.add_generator(spec.name(g), spec.parity(g));

  for (int a = 0; a < spec.count(); ++a) {
    for (int b = 0; b < spec.count(); ++b) {
      auto raw = combo_bracket(spec, fwd[a], fwd[b]);
      // Back-substitute redefined targets: T = T' - (fwd[T] - T) - central.
      std::map<int, Poly> expressed;
      for (auto& [target, coeff] : raw) {
        if (coeff.is_zero()) continue;
        if (target == kCentral) { expressed[kCentral] += coeff; continue; }
        expressed[target] += coeff;
        auto fit = fwd.find(target);
        if (fit != fwd.end()) {
          for (const auto& [sub, subc] : fit->second) {
            if (sub == target) continue;
            Poly lifted = subc.substitute(Poly::m() + Poly::n(), Poly(), Poly());
            expressed[sub] -= coeff * lifted;
          }
        }
        auto cs = central_shift.find(target);
        if (cs != central_shift.end()) expressed[kCentral] -= coeff.scaled(cs->second);
      }
      std::vector<ModeBracketTerm> terms;
      for (auto& [target, coeff] : expressed)
        if (!coeff.is_zero()) terms.push_back({target, coeff});
      out.set_bracket(a, b, std::move(terms));
    }
  }

  if (!project) return out;

  // Projection theta_m = 0, U_m = delta_m: drop Th, turn U targets central.
  ModeAlgebraSpec proj;
  std::map<int, int> remap;
  for (int g = 0; g < out.count(); ++g) {
    if (g == Th || g == U) continue;
    remap[g] = proj.count();
    proj.add_generator(out.name(g), out.parity(g));
  }
  for (int a = 0; a < out.count(); ++a) {
    if (a == Th || a == U) continue;
    for (int b = 0; b < out.count(); ++b) {
      if (b == Th || b == U) continue;
      std::vector<ModeBracketTerm> terms;
      for (const auto& t : out.bracket(a, b)) {
        if (t.target == Th) continue;
        if (t.target == U) terms.push_back({kCentral, t.coeff});
        else if (t.target == kCentral) terms.push_back({kCentral, t.coeff});
        else terms.push_back({remap.at(t.target), t.coeff});
      }
      proj.set_bracket(remap.at(a), remap.at(b), std::move(terms));
    }
  }
  (void)V;
  (void)W;
  return proj;
}

ModeAlgebraSpec sub_table(const ModeAlgebraSpec& spec, const std::vector<std::string>& keep) {
  ModeAlgebraSpec out;
  std::map<int, int> remap;
  for (const auto& name : keep) {
    int g = spec.index_of(name);
    remap[g] = out.count();
    out.add_generator(name, spec.parity(g));
  }
  for (const auto& [ga, ia] : remap) {
    for (const auto& [gb, ib] : remap) {
      std::vector<ModeBracketTerm> terms;
      for (const auto& t : spec.bracket(ga, gb)) {
        if (t.target == kCentral) { terms.push_back({kCentral, t.coeff}); continue; }
        auto it = remap.find(t.target);
        if (it == remap.end())
          throw std::invalid_argument("sub-table does not close on the kept generators: [" +
                                      spec.name(ga) + "," + spec.name(gb) + "] hits " +
                                      spec.name(t.target));
        terms.push_back({it->second, t.coeff});
      }
      out.set_bracket(ia, ib, std::move(terms));
    }
  }
  return out;
}

bool table_equal(const ModeAlgebraSpec& a, const ModeAlgebraSpec& b) {
  if (a.count() != b.count()) return false;
  for (int g = 0; g < a.count(); ++g)
    if (a.name(g) != b.name(g) || a.parity(g) != b.parity(g)) return false;
  for (int x = 0; x < a.count(); ++x) {
    for (int y = 0; y < a.count(); ++y) {
      std::map<int, Poly> diff;
      for (const auto& t : a.bracket(x, y)) diff[t.target] += t.coeff;
      for (const auto& t : b.bracket(x, y)) diff[t.target] -= t.coeff;
      for (auto& [target, poly] : diff) {
        Poly reduced = target == kCentral
            ? poly.substitute(Poly::m(), -Poly::m(), Poly())
            : poly;
        if (!reduced.is_zero()) return false;
      }
    }
  }
  return true;
}

GaussianRational kmgl_central_pairing(int n, int m, const GaussianRational& k1,
                                      const GaussianRational& k2,
                                      const std::vector<GaussianRational>& x,
                                      const std::vector<GaussianRational>& y) {
  ModeAlgebraSpec spec = kmgl_spec(n, m, k1, k2);
  const int d = n + 1 + m;
  if ((int)x.size() != d || (int)y.size() != d)
    throw std::invalid_argument("diagonal combination size mismatch");
  Poly central;
  auto idx = [&](int mu) { return mu * d + mu; };
  for (int mu = 0; mu < d; ++mu) {
    for (int sg = 0; sg < d; ++sg) {
      for (const auto& t : spec.bracket(idx(mu), idx(sg))) {
        if (t.target != kCentral) continue;
        central += t.coeff.scaled(x[mu] * y[sg]);
      }
    }
  }
  // central(m, n) = -n * B on the pairing; read off B at n = 1.
  return -central.evaluate(GaussianRational(0), GaussianRational(1), GaussianRational(0));
}

ModeAlgebraSpec kmgl_sl_restriction(int nsp, int mfer, const GaussianRational& k1,
                                    const GaussianRational& k2) {
  SuperDimension dim(nsp, mfer);
  ModeAlgebraSpec gl = kmgl_spec(nsp, mfer, k1, k2);
  const int d = dim.total() + 1;
  auto idx = [&](int mu, int nu) { return mu * d + nu; };

  // sl basis: off-diagonal elementary generators plus stepwise supertraceless
  // diagonal combinations H_k = (-)^{deg k} E^k_k - (-)^{deg k+1} E^{k+1}_{k+1}.
  struct BasisElem { std::string name; int parity; Combo combo; };
  std::vector<BasisElem> basis;
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu)
      if (mu != nu)
        basis.push_back({gl.name(idx(mu, nu)), (dim.deg(mu) + dim.deg(nu)) & 1,
                         identity_combo(idx(mu, nu))});
  for (int k = 0; k + 1 < d; ++k) {
    Combo h;
    h[idx(k, k)] = Poly(GaussianRational(pow_sign(dim.deg(k))));
    h[idx(k + 1, k + 1)] = Poly(GaussianRational(-pow_sign(dim.deg(k + 1))));
    basis.push_back({"H" + std::to_string(k), 0, std::move(h)});
  }

  ModeAlgebraSpec out;
  for (const auto& e : basis) out.add_generator(e.name, e.parity);

  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto raw = combo_bracket(gl, basis[a].combo, basis[b].combo);
      std::vector<ModeBracketTerm> terms;
      // Diagonal part of the result, to be solved in the H basis.
      std::vector<Poly> diag(d);
      for (auto& [target, coeff] : raw) {
        if (coeff.is_zero()) continue;
        if (target == kCentral) { terms.push_back({kCentral, coeff}); continue; }
        int mu = target / d, nu = target % d;
        if (mu != nu) {
          terms.push_back({out.index_of(gl.name(target)), coeff});
        } else {
          diag[mu] += coeff;
        }
      }
      std::vector<Poly> alpha(d > 1 ? d - 1 : 0);
      Poly carry;
      for (int k = 0; k + 1 < d; ++k) {
        Poly ak = diag[k].scaled(GaussianRational(pow_sign(dim.deg(k)))) + carry;
        alpha[k] = ak;
        carry = ak;
      }
      if (d > 1) {
        Poly check = diag[d - 1] +
                     carry.scaled(GaussianRational(pow_sign(dim.deg(d - 1))));
        if (!check.is_zero())
          throw std::logic_error("sl restriction: bracket result not supertraceless");
      }
      for (int k = 0; k + 1 < d; ++k)
        if (!alpha[k].is_zero())
          terms.push_back({out.index_of("H" + std::to_string(k)), alpha[k]});
      out.set_bracket(int(a), int(b), std::move(terms));
    }
  }
  return out;
}

ModeAlgebraSpec parse_mode_spec_file(const std::string& text,
                                     const std::map<std::string, GaussianRational>& params) {
  ModeAlgebraSpec spec;
  std::map<std::string, GaussianRational> bound = params;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("spec file line " + std::to_string(lineno) + ": " + msg);
  };

  std::vector<std::tuple<int, int, std::string>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "param") {
      std::string name, eq, val;
      if (!(ls >> name >> eq >> val) || eq != "=") fail("expected 'param name = value'");
      if (val == "i") bound[name] = GaussianRational::i();
      else bound[name] = GaussianRational(Rational::from_string(val));
    } else if (kw == "generator") {
      std::string name, par;
      if (!(ls >> name >> par)) fail("expected 'generator name even|odd'");
      if (par != "even" && par != "odd") fail("parity must be even or odd");
      spec.add_generator(name, par == "odd" ? 1 : 0);
    } else if (kw == "bracket") {
      std::string ga, gb, eq;
      if (!(ls >> ga >> gb >> eq) || eq != "=") fail("expected 'bracket A B = rhs'");
      std::string rhs;
      std::getline(ls, rhs);
      pending.emplace_back(spec.index_of(ga), spec.index_of(gb), rhs);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }

  for (auto& [a, b, rhs] : pending) {
    // Split the right-hand side into top-level summands, peel the trailing
    // target name off each, and parse the rest as a polynomial in m, n.
    std::vector<ModeBracketTerm> terms;
    std::vector<std::pair<std::string, int>> chunks;  // text, sign
    std::string cur;
    int depth = 0, sign = 1;
    auto flush = [&](int next_sign) {
      if (cur.find_first_not_of(" \t") != std::string::npos) chunks.emplace_back(cur, sign);
      cur.clear();
      sign = next_sign;
    };
    for (char ch : rhs) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') &&
          cur.find_first_not_of(" \t") != std::string::npos) {
        flush(ch == '-' ? -1 : 1);
        continue;
      }
      if (depth == 0 && ch == '-' && cur.find_first_not_of(" \t") == std::string::npos) {
        sign = -sign;
        continue;
      }
      cur += ch;
    }
    flush(1);
    if (chunks.empty() || (chunks.size() == 1 && chunks[0].first.find_first_not_of(" \t0") ==
                                                     std::string::npos)) {
      spec.set_bracket(a, b, {});
      continue;
    }
    for (auto& [chunk, csign] : chunks) {
      // peel trailing identifier
      int end = int(chunk.size());
      while (end > 0 && std::isspace((unsigned char)chunk[end - 1])) --end;
      int start = end;
      while (start > 0 && (std::isalnum((unsigned char)chunk[start - 1]) || chunk[start - 1] == '_'))
        --start;
      std::string target_name = chunk.substr(start, end - start);
      int target;
      if (target_name == "CENTRAL") target = kCentral;
      else if (auto g = spec.find(target_name)) target = *g;
      else fail("summand '" + chunk + "' does not end in a generator or CENTRAL");
      std::string coeff_text = chunk.substr(0, start);
      // drop a trailing '*' between coefficient and target
      auto last = coeff_text.find_last_not_of(" \t");
      if (last != std::string::npos && coeff_text[last] == '*') coeff_text.erase(last);
      if (coeff_text.find_first_not_of(" \t") == std::string::npos) coeff_text = "1";
      Poly coeff = Poly::parse(coeff_text, {"m", "n", "p"}, bound);
      if (csign < 0) coeff = -coeff;
      terms.push_back({target, coeff});
    }
    spec.set_bracket(a, b, std::move(terms));
  }
  spec.complete_by_skewness();
  return spec;
}

}  // namespace superfock
