#include "superfock/gauge.hpp"

namespace superfock {

namespace {

int pow_sign(int e) { return (e & 1) ? -1 : 1; }

Scalar inv_2pi_i() { return Scalar(GaussianRational(Rational(0), Rational(-1)), -1); }

bool is_abelian(const FiniteSuperalgebra& g) {
  for (const auto& plane : g.f)
    for (const auto& row : plane)
      for (const auto& v : row)
        if (!v.is_zero()) return false;
  return true;
}

bool metric_is_identity(const FiniteSuperalgebra& g) {
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      if (g.metric[a][b] != (a == b ? GaussianRational(1) : GaussianRational()))
        return false;
  return true;
}

}  // namespace

CurrentSmearing make_smearing(const CurrentConfig& cfg, std::vector<SuperFunction> comps) {
  if ((int)comps.size() != cfg.algebra.dim())
    throw std::invalid_argument("smearing component count mismatch");
  CurrentSmearing x;
  x.comps = std::move(comps);
  int parity = -1;
  for (int a = 0; a < cfg.algebra.dim(); ++a) {
    if (x.comps[a].is_zero()) continue;
    int p = (x.comps[a].parity() + cfg.algebra.parities[a]) & 1;
    if (parity < 0) parity = p;
    else if (p != parity)
      throw std::invalid_argument("smearing components have inconsistent parity");
  }
  x.parity = parity < 0 ? 0 : parity;
  return x;
}

OscillatorUniverse current_universe(SuperDimension dim, const CurrentConfig& cfg) {
  OscillatorUniverse u;
  u.dim = dim;
  u.current_count = cfg.algebra.dim();
  u.current_level = cfg.level;
  return u;
}

TrajOperator current_generator(const OscillatorUniverse& u, const CurrentSmearing& x,
                               const CurrentConfig& cfg) {
  if (!is_abelian(cfg.algebra) || !metric_is_identity(cfg.algebra))
    throw std::invalid_argument(
        "only the abelian identity-metric current realization is built");
  if (u.current_count != cfg.algebra.dim())
    throw std::invalid_argument("universe current family mismatch");
  TrajOperator op(u, x.parity);
  for (int a = 0; a < cfg.algebra.dim(); ++a) {
    if (x.comps[a].is_zero()) continue;
    op.add(trajectory_integral(u, x.comps[a], Scalar(1), 0,
                               {{ModeKind::Cur, std::uint8_t(a + 1), 0, {}}}));
  }
  return op;
}

CurrentSmearing current_bracket(const CurrentSmearing& x, const CurrentSmearing& y,
                                const CurrentConfig& cfg) {
  const FiniteSuperalgebra& g = cfg.algebra;
  const int d = g.dim();
  CurrentSmearing out;
  out.parity = (x.parity + y.parity) & 1;
  SuperDimension dim;
  for (const auto& c : x.comps)
    if (!c.is_zero()) dim = c.dim();
  for (const auto& c : y.comps)
    if (!c.is_zero()) dim = c.dim();
  for (int c = 0; c < d; ++c) {
    SuperFunction acc = SuperFunction::zero(
        dim, (out.parity + g.parities[c]) & 1);
    for (int a = 0; a < d; ++a) {
      if (x.comps[a].is_zero()) continue;
      for (int b = 0; b < d; ++b) {
        GaussianRational f = g.f[a][b][c];
        if (f.is_zero() || y.comps[b].is_zero()) continue;
        int s = pow_sign(g.parities[a] * (y.parity + g.parities[b]));
        SuperFunction t = (x.comps[a] * y.comps[b]).scaled(Scalar(GaussianRational::i() * f));
        acc += s < 0 ? -t : t;
      }
    }
    out.comps.push_back(acc);
  }
  return out;
}

TrajOperator gauge_cocycle_expected(const OscillatorUniverse& u, const CurrentSmearing& x,
                                    const CurrentSmearing& y, const CurrentConfig& cfg,
                                    CocycleContraction contraction) {
  const FiniteSuperalgebra& g = cfg.algebra;
  const SuperDimension dim = u.dim;
  SuperFunction acc = SuperFunction::zero(dim, (x.parity + y.parity) & 1);
  for (int a = 0; a < g.dim(); ++a) {
    if (x.comps[a].is_zero()) continue;
    for (int b = 0; b < g.dim(); ++b) {
      GaussianRational pairing = contraction == CocycleContraction::metric
          ? g.metric[a][b]
          : (a == b ? g.metric[a][a] : GaussianRational());
      if (pairing.is_zero() || y.comps[b].is_zero()) continue;
      int s = pow_sign(g.parities[a] * (y.parity + g.parities[b]));
      for (int mu = 0; mu <= dim.total(); ++mu) {
        SuperFunction dx = x.comps[a].derive(mu);
        if (dx.is_zero()) continue;
        SuperFunction t = (SuperFunction::velocity(dim, mu) * dx * y.comps[b])
                              .scaled(Scalar(pairing));
        acc += s < 0 ? -t : t;
      }
    }
  }
  // defect = -k Int d^x S_1^mu ... = -k (1/2 pi i) Int dt dq^mu (...)
  return trajectory_integral(u, acc, -(cfg.level * inv_2pi_i()), 0, {});
}

GaugeCheckResult gauge_cocycle_check(const OscillatorUniverse& u, const CurrentSmearing& x,
                                     const CurrentSmearing& y, const CurrentConfig& cfg,
                                     const Window& w, CocycleContraction contraction) {
  TrajOperator jx = current_generator(u, x, cfg);
  TrajOperator jy = current_generator(u, y, cfg);
  TrajOperator jb = current_generator(u, current_bracket(x, y, cfg), cfg);
  TrajOperator expected = gauge_cocycle_expected(u, x, y, cfg, contraction);
  GaugeCheckResult res;
  for (const auto& s : enumerate_basis(u, w)) {
    StateVector col = apply_graded_commutator(jx, jy, s);
    accumulate(col, apply(jb, s), Scalar(-1));
    accumulate(col, apply(expected, s), Scalar(-1));
    if (!is_zero(col)) {
      res.ok = false;
      res.detail = "cocycle residual on column " + s.str();
      return res;
    }
  }
  return res;
}

GaugeCheckResult gauge_intertwine_check(const OscillatorUniverse& u, const SuperVectorField& xi,
                                        const CurrentSmearing& y, const CurrentConfig& cfg,
                                        const Window& w) {
  TrajOperator lx = vector_field_generator(u, xi);
  TrajOperator jy = current_generator(u, y, cfg);
  CurrentSmearing xiy;
  xiy.parity = (xi.parity() + y.parity) & 1;
  for (const auto& comp : y.comps) xiy.comps.push_back(apply_field(xi, comp));
  TrajOperator jxiy = current_generator(u, xiy, cfg);
  GaugeCheckResult res;
  auto basis = enumerate_basis(u, w);
  for (const auto& s : basis) {
    StateVector col = apply_graded_commutator(lx, jy, s);
    accumulate(col, apply(jxiy, s), Scalar(-1));
    if (!is_zero(col)) {
      res.ok = false;
      res.detail = "intertwining residual on column " + s.str();
      return res;
    }
  }
  // S_1 transformation law against a sampled one-form built from Y.
  SmearingTensor h(u.dim, 0, 1, y.parity);
  bool have = false;
  for (int nu = 0; nu <= u.dim.total(); ++nu) {
    for (const auto& comp : y.comps) {
      SuperFunction d = comp.derive(nu);
      if (!d.is_zero() && d.parity() == ((y.parity + u.dim.deg(nu)) & 1)) {
        h.set_component({nu}, d);
        have = true;
        break;
      }
    }
  }
  if (have) {
    TrajOperator s1 = sn_operator(u, h, false);
    TrajOperator s1t = sn_operator(u, s1_transformed_smearing(xi, h), false);
    for (const auto& s : basis) {
      StateVector col = apply_graded_commutator(lx, s1, s);
      accumulate(col, apply(s1t, s), Scalar(-1));
      if (!is_zero(col)) {
        res.ok = false;
        res.detail = "S_1 law residual on column " + s.str();
        return res;
      }
    }
  }
  return res;
}

}  // namespace superfock
