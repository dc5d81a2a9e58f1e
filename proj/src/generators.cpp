#include "superfock/generators.hpp"

#include <bit>

namespace superfock {

namespace {

int pow_sign(int e) { return (e & 1) ? -1 : 1; }

// 1/(2 pi i) = -i tau^-1 with tau = 2 pi.
Scalar inv_2pi_i() { return Scalar(GaussianRational(Rational(0), Rational(-1)), -1); }

int factor_tau_power(const TrajFactor& f) {
  switch (f.kind) {
    case ModeKind::P:
    case ModeKind::AuxP:
    case ModeKind::Cur: return -1;
    default: return 0;
  }
}

// sum_rho v^rho d_rho F over all space-time indices with v^0 = 1.
SuperFunction vgrad(const SuperFunction& f) {
  SuperFunction out = f.derive(0);
  for (int mu = 1; mu <= f.dim().total(); ++mu) {
    SuperFunction d = f.derive(mu);
    if (!d.is_zero()) out += SuperFunction::velocity(f.dim(), mu) * d;
  }
  return out;
}

}  // namespace

TrajOperator trajectory_integral(const OscillatorUniverse& u, const SuperFunction& integrand,
                                 const Scalar& prefactor, int extra_mode,
                                 const std::vector<TrajFactor>& tail) {
  if (integrand.dim() != u.dim) throw std::invalid_argument("integrand dimension mismatch");
  if (integrand.has_time_power())
    throw std::invalid_argument("integrand is not a Fourier polynomial");
  int tail_parity = 0;
  int tau_power = 1;  // the circle integral
  for (const auto& f : tail) {
    tau_power += factor_tau_power(f);
    if (f.kind == ModeKind::Q || f.kind == ModeKind::P) tail_parity += u.dim.deg(f.dir);
    else if (f.kind != ModeKind::Cur) tail_parity += f.dir > u.aux_bosonic ? 1 : 0;
  }
  TrajOperator op(u, (integrand.parity() + tail_parity) & 1);
  const SuperDimension dim = u.dim;
  const int m_fer = dim.m_fermionic;
  for (const auto& [key, coeff] : integrand.terms()) {
    TrajTerm term;
    term.total_mode = -(key.fourier + extra_mode);
    term.coeff = coeff * prefactor * Scalar::tau(tau_power);
    for (const auto& [idx, exp] : key.bos) {
      if (idx == 0) throw std::invalid_argument("integrand is not a Fourier polynomial");
      for (int e = 0; e < exp; ++e) term.factors.push_back({ModeKind::Q, idx, 0, {}});
    }
    for (const auto& [idx, exp] : key.vbos)
      for (int e = 0; e < exp; ++e) term.factors.push_back({ModeKind::Q, idx, 1, {}});
    for (const auto& [idx, exp] : key.abos)
      for (int e = 0; e < exp; ++e) term.factors.push_back({ModeKind::Q, idx, 2, {}});
    // Odd symbols in their canonical ordinal order (theta, then velocity,
    // then acceleration), matching the sign normalization of the integrand.
    std::uint64_t rest = key.odd;
    while (rest) {
      int g = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint8_t der = std::uint8_t(g / m_fer);
      std::uint8_t dir = std::uint8_t(dim.fermion_index(g % m_fer));
      term.factors.push_back({ModeKind::Q, dir, der, {}});
    }
    for (const auto& f : tail) term.factors.push_back(f);
    if (!term.coeff.is_tau_free())
      throw std::logic_error("assembled operator term carries stray tau powers");
    op.add_term(std::move(term));
  }
  return op;
}

TrajOperator mode_component_operator(const OscillatorUniverse& u, const SuperFunction& f, int r) {
  return trajectory_integral(u, f, Scalar::tau(-1), -r, {});
}

TrajOperator q_mode_operator(const OscillatorUniverse& u, int dir, int mode) {
  TrajOperator op(u, u.dim.deg(dir));
  TrajTerm t;
  t.coeff = Scalar(1);
  t.total_mode = mode;
  t.factors.push_back({ModeKind::Q, std::uint8_t(dir), 0, mode});
  op.add_term(std::move(t));
  return op;
}

TrajOperator p_mode_operator(const OscillatorUniverse& u, int dir, int mode) {
  TrajOperator op(u, u.dim.deg(dir));
  TrajTerm t;
  t.coeff = Scalar(1);
  t.total_mode = mode;
  t.factors.push_back({ModeKind::P, std::uint8_t(dir), 0, mode});
  op.add_term(std::move(t));
  return op;
}

TrajOperator p0_mode_operator(const OscillatorUniverse& u, int r) {
  TrajOperator op(u, 0);
  const SuperDimension dim = u.dim;
  for (int i = 1; i <= dim.total(); ++i) {
    SuperFunction vi = SuperFunction::velocity(dim, i);
    op.add(trajectory_integral(u, -vi, Scalar(1), -r,
                               {{ModeKind::P, std::uint8_t(i), 0, {}}}));
  }
  for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
    op.add(trajectory_integral(u, SuperFunction::constant(dim, Scalar(-1)), Scalar(1), -r,
                               {{ModeKind::AuxQ, std::uint8_t(alpha), 1, {}},
                                {ModeKind::AuxP, std::uint8_t(alpha), 0, {}}}));
  }
  return op;
}

TrajOperator vector_field_generator(const OscillatorUniverse& u, const SuperVectorField& xi) {
  if (xi.dim() != u.dim) throw std::invalid_argument("field dimension mismatch");
  if (xi.has_time_power())
    throw std::invalid_argument("vector field is not a Fourier polynomial");
  for (const auto& [mu, comp] : xi.components()) {
    (void)mu;
    if (comp.has_jet()) throw std::invalid_argument("vector field carries jet symbols");
  }
  const SuperDimension dim = u.dim;
  TrajOperator op(u, xi.parity());
  SuperFunction xi0 = xi.component(0);
  for (int i = 1; i <= dim.total(); ++i) {
    SuperFunction tilde = xi.component(i);
    if (!xi0.is_zero()) tilde -= xi0 * SuperFunction::velocity(dim, i);
    if (tilde.is_zero()) continue;
    op.add(trajectory_integral(u, tilde, Scalar(1), 0, {{ModeKind::P, std::uint8_t(i), 0, {}}}));
  }
  if (!xi0.is_zero()) {
    // xi^0(q) L(t) with L(t) = -sum_alpha :dqhat^alpha phat_alpha:(t).
    for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
      op.add(trajectory_integral(u, -xi0, Scalar(1), 0,
                                 {{ModeKind::AuxQ, std::uint8_t(alpha), 1, {}},
                                  {ModeKind::AuxP, std::uint8_t(alpha), 0, {}}}));
    }
  }
  return op;
}

void require_margin(const SuperVectorField& xi, const SuperVectorField& eta,
                    const Window& margin) {
  int need_e = xi.fourier_bandwidth() + eta.fourier_bandwidth();
  int need_d = xi.spatial_degree() + eta.spatial_degree();
  if (margin.e_max < need_e || margin.d_max < need_d)
    throw MarginError("window margin (" + std::to_string(margin.e_max) + "," +
                      std::to_string(margin.d_max) + ") below the exactness requirement (" +
                      std::to_string(need_e) + "," + std::to_string(need_d) + ")");
}

WindowMatrix commutator_defect(const OscillatorUniverse& u, const SuperVectorField& xi,
                               const SuperVectorField& eta, const Window& w,
                               const Window& margin) {
  require_margin(xi, eta, margin);
  TrajOperator lx = vector_field_generator(u, xi);
  TrajOperator le = vector_field_generator(u, eta);
  TrajOperator lb = vector_field_generator(u, lie_bracket(xi, eta));
  WindowMatrix m;
  m.basis = enumerate_basis(u, w);
  m.columns.reserve(m.basis.size());
  for (const auto& s : m.basis) {
    StateVector col = apply_graded_commutator(lx, le, s);
    accumulate(col, apply(lb, s), Scalar(-1));
    m.columns.push_back(std::move(col));
  }
  return m;
}

ExtensionConstants declared_constants(const OscillatorUniverse& u) {
  return {u.declared_aux_charge(), GaussianRational(0), GaussianRational(0)};
}

TrajOperator extension_operator(const OscillatorUniverse& u, const SuperVectorField& xi,
                                const SuperVectorField& eta, const ExtensionConstants& k) {
  const SuperDimension dim = u.dim;
  const int px = xi.parity(), pe = eta.parity();
  GaussianRational kappa_c = (k.c + GaussianRational(2 * (dim.n_spatial - dim.m_fermionic))) *
                             GaussianRational(Rational(1, 12));
  GaussianRational one_k1 = GaussianRational(1) + k.k1;
  SuperFunction acc = SuperFunction::zero(dim, (px + pe) & 1);
  SuperFunction xi0 = xi.component(0), eta0 = eta.component(0);
  SuperFunction dt_xi0 = xi0.time_derivative(), dt_eta0 = eta0.time_derivative();
  SuperFunction div_xi = divergence(xi), div_eta = divergence(eta);

  // (1+k1) (-)^{(xi+eta+nu)nu} d_nu dxi^mu d_mu eta^nu
  for (int nu = 0; nu <= dim.total(); ++nu) {
    int sign = pow_sign((px + pe + dim.deg(nu)) * dim.deg(nu));
    for (int mu = 0; mu <= dim.total(); ++mu) {
      SuperFunction a = xi.component(mu).time_derivative().derive(nu);
      SuperFunction b = eta.component(nu).derive(mu);
      if (a.is_zero() || b.is_zero()) continue;
      SuperFunction t = (a * b).scaled(Scalar(one_k1));
      acc += sign < 0 ? -t : t;
    }
  }
  // k2 (div xi)^. div eta
  if (!k.k2.is_zero() && !div_eta.is_zero())
    acc += (div_xi.time_derivative() * div_eta).scaled(Scalar(k.k2));
  // (-)^{(xi+eta+nu)nu} d_nu xi^0 vgrad(deta^nu)
  for (int nu = 0; nu <= dim.total(); ++nu) {
    SuperFunction a = xi0.derive(nu);
    if (a.is_zero()) continue;
    SuperFunction b = vgrad(eta.component(nu).time_derivative());
    if (b.is_zero()) continue;
    int sign = pow_sign((px + pe + dim.deg(nu)) * dim.deg(nu));
    SuperFunction t = a * b;
    acc += sign < 0 ? -t : t;
  }
  // - vgrad(dxi^mu) d_mu eta^0
  for (int mu = 0; mu <= dim.total(); ++mu) {
    SuperFunction a = vgrad(xi.component(mu).time_derivative());
    SuperFunction b = eta0.derive(mu);
    if (!a.is_zero() && !b.is_zero()) acc -= a * b;
  }
  // - dxi^0 vgrad(deta^0) + vgrad(dxi^0) deta^0
  acc -= dt_xi0 * vgrad(dt_eta0);
  acc += vgrad(dt_xi0) * dt_eta0;
  // + 1/2 (div xi)^. deta^0 - 1/2 dxi^0 (div eta)^.
  acc += (div_xi.time_derivative() * dt_eta0).scaled(Scalar(Rational(1, 2)));
  acc -= (dt_xi0 * div_eta.time_derivative()).scaled(Scalar(Rational(1, 2)));
  // - (2 - kappa_c) ddxi^0 deta^0 - kappa_c dxi^0 eta^0
  acc -= (dt_xi0.time_derivative() * dt_eta0).scaled(Scalar(GaussianRational(2) - kappa_c));
  acc -= (dt_xi0 * eta0).scaled(Scalar(kappa_c));
  // + i/2 (div xi deta^0 - dxi^0 div eta)
  SuperFunction imag_part = div_xi * dt_eta0 - dt_xi0 * div_eta;
  acc += imag_part.scaled(Scalar(GaussianRational(Rational(0), Rational(1, 2))));

  return trajectory_integral(u, acc, inv_2pi_i(), 0, {});
}

TrajOperator extension_operator_kernel(const OscillatorUniverse& u, const SuperVectorField& xi,
                                       const SuperVectorField& eta, const ExtensionConstants& k) {
  const SuperDimension dim = u.dim;
  const int px = xi.parity(), pe = eta.parity();
  auto deg = [&](int mu) { return dim.deg(mu); };
  GaussianRational kappa_c = (k.c + GaussianRational(2 * (dim.n_spatial - dim.m_fermionic))) *
                             GaussianRational(Rational(1, 12));
  GaussianRational one_k1 = GaussianRational(1) + k.k1;
  const int D = dim.total();
  auto v = [&](int mu) { return SuperFunction::velocity(dim, mu); };
  auto acc_of = [&](int mu) { return SuperFunction::acceleration(dim, mu); };
  SuperFunction xi0 = xi.component(0), eta0 = eta.component(0);
  SuperFunction div_xi = divergence(xi), div_eta = divergence(eta);
  SuperFunction acc = SuperFunction::zero(dim, (px + pe) & 1);

  // (1+k1) (-)^{(xi+eta+nu)nu} v^rho d_rho d_nu xi^mu d_mu eta^nu
  for (int nu = 0; nu <= D; ++nu) {
    int s0 = pow_sign((px + pe + deg(nu)) * deg(nu));
    for (int mu = 0; mu <= D; ++mu) {
      SuperFunction b = eta.component(nu).derive(mu);
      if (b.is_zero()) continue;
      for (int rho = 0; rho <= D; ++rho) {
        SuperFunction a = xi.component(mu).derive(nu).derive(rho);
        if (a.is_zero()) continue;
        SuperFunction t = (v(rho) * a * b).scaled(Scalar(one_k1));
        acc += s0 < 0 ? -t : t;
      }
    }
  }
  // k2 v^rho d_rho div xi div eta
  if (!k.k2.is_zero() && !div_eta.is_zero()) {
    for (int rho = 0; rho <= D; ++rho) {
      SuperFunction a = div_xi.derive(rho);
      if (a.is_zero()) continue;
      acc += (v(rho) * a * div_eta).scaled(Scalar(k.k2));
    }
  }
  // (-)^{(xi+eta+nu)nu + rho(nu+xi) + sigma(nu+xi+rho)} v^rho v^sigma
  //   d_nu xi^0 d_rho d_sigma eta^nu
  for (int nu = 0; nu <= D; ++nu) {
    SuperFunction dxi0 = xi0.derive(nu);
    if (dxi0.is_zero()) continue;
    for (int rho = 0; rho <= D; ++rho) {
      for (int sg = 0; sg <= D; ++sg) {
        SuperFunction b = eta.component(nu).derive(sg).derive(rho);
        if (b.is_zero()) continue;
        int s = pow_sign((px + pe + deg(nu)) * deg(nu) + deg(rho) * (deg(nu) + px) +
                         deg(sg) * (deg(nu) + px + deg(rho)));
        SuperFunction t = v(rho) * v(sg) * dxi0 * b;
        acc += s < 0 ? -t : t;
      }
    }
  }
  // -(-)^{sigma rho} v^rho v^sigma d_rho d_sigma xi^mu d_mu eta^0
  for (int mu = 0; mu <= D; ++mu) {
    SuperFunction b = eta0.derive(mu);
    if (b.is_zero()) continue;
    for (int rho = 0; rho <= D; ++rho) {
      for (int sg = 0; sg <= D; ++sg) {
        SuperFunction a = xi.component(mu).derive(sg).derive(rho);
        if (a.is_zero()) continue;
        int s = pow_sign(deg(sg) * deg(rho));
        SuperFunction t = v(rho) * v(sg) * a * b;
        acc -= s < 0 ? -t : t;
      }
    }
  }
  // -(-)^{rho xi + tau(sigma+xi+rho)} v^rho v^sigma v^tau d_sigma xi^0 d_rho d_tau eta^0
  for (int rho = 0; rho <= D; ++rho) {
    for (int sg = 0; sg <= D; ++sg) {
      SuperFunction a = xi0.derive(sg);
      if (a.is_zero()) continue;
      for (int ta = 0; ta <= D; ++ta) {
        SuperFunction b = eta0.derive(ta).derive(rho);
        if (b.is_zero()) continue;
        int s = pow_sign(deg(rho) * px + deg(ta) * (deg(sg) + px + deg(rho)));
        SuperFunction t = v(rho) * v(sg) * v(ta) * a * b;
        acc -= s < 0 ? -t : t;
      }
    }
  }
  // +(-)^{sigma rho + tau(rho+sigma+xi)} v^rho v^sigma v^tau d_rho d_sigma xi^0 d_tau eta^0
  for (int rho = 0; rho <= D; ++rho) {
    for (int sg = 0; sg <= D; ++sg) {
      SuperFunction a = xi0.derive(sg).derive(rho);
      if (a.is_zero()) continue;
      for (int ta = 0; ta <= D; ++ta) {
        SuperFunction b = eta0.derive(ta);
        if (b.is_zero()) continue;
        int s = pow_sign(deg(sg) * deg(rho) + deg(ta) * (deg(rho) + deg(sg) + px));
        SuperFunction t = v(rho) * v(sg) * v(ta) * a * b;
        acc += s < 0 ? -t : t;
      }
    }
  }
  // +1/2 (-)^{sigma(rho+xi)} v^rho v^sigma (d_rho div xi d_sigma eta^0
  //                                        - d_rho xi^0 d_sigma div eta)
  for (int rho = 0; rho <= D; ++rho) {
    for (int sg = 0; sg <= D; ++sg) {
      int s = pow_sign(deg(sg) * (deg(rho) + px));
      SuperFunction t = SuperFunction::zero(dim, (px + pe) & 1);
      SuperFunction a1 = div_xi.derive(rho);
      SuperFunction b1 = eta0.derive(sg);
      if (!a1.is_zero() && !b1.is_zero()) t += v(rho) * v(sg) * a1 * b1;
      SuperFunction a2 = xi0.derive(rho);
      SuperFunction b2 = div_eta.derive(sg);
      if (!a2.is_zero() && !b2.is_zero()) t -= v(rho) * v(sg) * a2 * b2;
      if (t.is_zero()) continue;
      t = t.scaled(Scalar(Rational(1, 2)));
      acc += s < 0 ? -t : t;
    }
  }
  // -(2 - kappa_c) [ (-)^{sigma(rho+xi)} ddq^rho dq^sigma d_rho xi^0 d_sigma eta^0
  //   + (-)^{rho sigma + tau(rho+sigma+xi)} dq^rho dq^sigma dq^tau
  //     d_rho d_sigma xi^0 d_tau eta^0 ]
  {
    Scalar coeff = Scalar(GaussianRational(2) - kappa_c);
    for (int rho = 0; rho <= D; ++rho) {
      for (int sg = 0; sg <= D; ++sg) {
        SuperFunction a1 = xi0.derive(rho);
        SuperFunction b1 = eta0.derive(sg);
        if (!a1.is_zero() && !b1.is_zero()) {
          int s = pow_sign(deg(sg) * (deg(rho) + px));
          SuperFunction t = (acc_of(rho) * v(sg) * a1 * b1).scaled(coeff);
          if (!t.is_zero()) acc -= s < 0 ? -t : t;
        }
        for (int ta = 0; ta <= D; ++ta) {
          SuperFunction a2 = xi0.derive(sg).derive(rho);
          SuperFunction b2 = eta0.derive(ta);
          if (a2.is_zero() || b2.is_zero()) continue;
          int s = pow_sign(deg(rho) * deg(sg) + deg(ta) * (deg(rho) + deg(sg) + px));
          SuperFunction t = (v(rho) * v(sg) * v(ta) * a2 * b2).scaled(coeff);
          acc -= s < 0 ? -t : t;
        }
      }
    }
  }
  // - kappa_c v^rho d_rho xi^0 eta^0
  if (!eta0.is_zero()) {
    for (int rho = 0; rho <= D; ++rho) {
      SuperFunction a = xi0.derive(rho);
      if (a.is_zero()) continue;
      acc -= (v(rho) * a * eta0).scaled(Scalar(kappa_c));
    }
  }
  // + i/2 ( (-)^{xi rho} v^rho div xi d_rho eta^0 - v^rho d_rho xi^0 div eta )
  for (int rho = 0; rho <= D; ++rho) {
    SuperFunction t = SuperFunction::zero(dim, (px + pe) & 1);
    SuperFunction b1 = eta0.derive(rho);
    if (!div_xi.is_zero() && !b1.is_zero()) {
      int s = pow_sign(px * deg(rho));
      SuperFunction piece = v(rho) * div_xi * b1;
      t += s < 0 ? -piece : piece;
    }
    SuperFunction a2 = xi0.derive(rho);
    if (!a2.is_zero() && !div_eta.is_zero()) t -= v(rho) * a2 * div_eta;
    if (!t.is_zero()) acc += t.scaled(Scalar(GaussianRational(Rational(0), Rational(1, 2))));
  }

  return trajectory_integral(u, acc, inv_2pi_i(), 0, {});
}

bool is_graded_symmetric(const SmearingTensor& h) {
  const SuperDimension dim = h.dim();
  const int n = h.lower_rank();
  if (h.upper_rank() != 0) return false;
  if (n < 2) return true;
  std::vector<int> idx(n, 0);
  while (true) {
    for (int slot = 0; slot + 1 < n; ++slot) {
      std::vector<int> swapped = idx;
      std::swap(swapped[slot], swapped[slot + 1]);
      int s = pow_sign(dim.deg(idx[slot]) * dim.deg(idx[slot + 1]));
      SuperFunction want = h.component(swapped);
      if (s < 0) want = -want;
      if (h.component(idx) != want) return false;
    }
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == dim.total()) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return true;
}

TrajOperator sn_operator(const OscillatorUniverse& u, const SmearingTensor& h,
                         bool require_symmetric) {
  const SuperDimension dim = u.dim;
  if (h.dim() != dim || h.upper_rank() != 0)
    throw std::invalid_argument("S_n smearing must be a lower tensor");
  if (require_symmetric && !is_graded_symmetric(h))
    throw std::invalid_argument("S_n smearing must be graded symmetric");
  SuperFunction acc;
  bool seeded = false;
  for (const auto& [idx, comp] : h.components()) {
    SuperFunction t = comp;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it)
      t = SuperFunction::velocity(dim, *it) * t;
    if (t.is_zero()) continue;
    if (!seeded) { acc = SuperFunction::zero(dim, t.parity()); seeded = true; }
    acc += t;
  }
  if (!seeded) acc = SuperFunction::zero(dim, 0);
  // S_n(h) = -(1/2 pi i) Int dt dq..dq h(q)
  return trajectory_integral(u, acc, -inv_2pi_i(), 0, {});
}

TrajOperator rn_operator(const OscillatorUniverse& u, const SmearingTensor& g,
                         const SmearingTensor& h) {
  const SuperDimension dim = u.dim;
  if (g.dim() != dim || g.upper_rank() != 0 || g.lower_rank() != 1)
    throw std::invalid_argument("R_n one-form has lower rank one");
  if (h.dim() != dim || h.upper_rank() != 0)
    throw std::invalid_argument("R_n smearing must be a lower tensor");
  if (!is_graded_symmetric(h))
    throw std::invalid_argument("R_n smearing must be graded symmetric");
  SuperFunction acc;
  bool seeded = false;
  for (int mu = 0; mu <= dim.total(); ++mu) {
    SuperFunction gmu = g.component({mu});
    if (gmu.is_zero()) continue;
    for (const auto& [idx, comp] : h.components()) {
      SuperFunction t = gmu * comp;
      for (auto it = idx.rbegin(); it != idx.rend(); ++it)
        t = SuperFunction::velocity(dim, *it) * t;
      t = SuperFunction::acceleration(dim, mu) * t;
      if (t.is_zero()) continue;
      if (!seeded) { acc = SuperFunction::zero(dim, t.parity()); seeded = true; }
      acc += t;
    }
  }
  if (!seeded) acc = SuperFunction::zero(dim, 0);
  return trajectory_integral(u, acc, -inv_2pi_i(), 0, {});
}

SmearingTensor s1_transformed_smearing(const SuperVectorField& xi, const SmearingTensor& h) {
  const SuperDimension dim = h.dim();
  if (h.upper_rank() != 0 || h.lower_rank() != 1)
    throw std::invalid_argument("S_1 law needs a lower one-form");
  SmearingTensor out(dim, 0, 1, (h.parity() + xi.parity()) & 1);
  for (int nu = 0; nu <= dim.total(); ++nu) {
    SuperFunction acc = apply_field(xi, h.component({nu}));
    if (pow_sign(xi.parity() * dim.deg(nu)) < 0) acc = -acc;
    for (int mu = 0; mu <= dim.total(); ++mu) {
      SuperFunction a = xi.component(mu).derive(nu);
      SuperFunction b = h.component({mu});
      if (!a.is_zero() && !b.is_zero()) acc += a * b;
    }
    if (!acc.is_zero()) out.set_component({nu}, acc);
  }
  return out;
}

TrajOperator temporal_generator(const OscillatorUniverse& u, int m) {
  SuperVectorField xi(u.dim, 0);
  xi.set_component(0, SuperFunction::fourier(u.dim, m).scaled(-Scalar::i()));
  return vector_field_generator(u, xi);
}

GaussianRational central_charge_probe(const std::function<TrajOperator(int)>& family) {
  auto vac = [&](int m) {
    StateVector v = apply_graded_commutator(family(m), family(-m), FockState{});
    auto it = v.find(FockState{});
    Scalar s = it == v.end() ? Scalar() : it->second;
    if (!s.is_tau_free()) throw std::runtime_error("probe value carries tau powers");
    return s.at_tau0();
  };
  GaussianRational v1 = vac(1), v2 = vac(2), v3 = vac(3);
  // <0|[A_m, A_{-m}]|0> = alpha m + beta (m^3 - m)
  GaussianRational alpha = v1;
  GaussianRational beta = (v2 - alpha * GaussianRational(2)) * GaussianRational(Rational(1, 6));
  if (v3 != alpha * GaussianRational(3) + beta * GaussianRational(24))
    throw std::runtime_error("family does not close as a Virasoro algebra on the vacuum");
  return -(beta * GaussianRational(12));
}

SuperconformalFamily superconformal_generators(const OscillatorUniverse& u, int m) {
  const SuperDimension dim = u.dim;
  if (dim.n_spatial != 0 || dim.m_fermionic != 1)
    throw std::invalid_argument("superconformal family lives on (1|1) super space-time");
  SuperFunction th = SuperFunction::coordinate(dim, 1);
  SuperFunction vth = SuperFunction::velocity(dim, 1);
  SuperFunction ath = SuperFunction::acceleration(dim, 1);
  Scalar i = Scalar::i();
  Scalar half(Rational(1, 2));
  std::vector<TrajFactor> ptail{{ModeKind::P, 1, 0, {}}};

  SuperconformalFamily fam;
  // L_m = Int e^{imt} { i :dth p: + m/2 :th p: - i L(t) }
  fam.L = trajectory_integral(u, vth.scaled(i) + th.scaled(half * Scalar(m)), Scalar(1), m, ptail);
  for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
    fam.L.add(trajectory_integral(u, SuperFunction::constant(dim, i), Scalar(1), m,
                                  {{ModeKind::AuxQ, std::uint8_t(alpha), 1, {}},
                                   {ModeKind::AuxP, std::uint8_t(alpha), 0, {}}}));
  }
  // G_m = Int e^{imt} { :dth th p: - i p + th L(t) }
  fam.G = trajectory_integral(u, vth * th - SuperFunction::constant(dim, i), Scalar(1), m, ptail);
  for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
    fam.G.add(trajectory_integral(u, -th, Scalar(1), m,
                                  {{ModeKind::AuxQ, std::uint8_t(alpha), 1, {}},
                                   {ModeKind::AuxP, std::uint8_t(alpha), 0, {}}}));
  }
  Scalar pre = inv_2pi_i();
  fam.Th = trajectory_integral(u, th, pre, m, {});
  fam.U = trajectory_integral(u, vth * th, pre, m, {});
  fam.V = trajectory_integral(u, ath * vth, pre, m, {});
  fam.W = trajectory_integral(u, ath * vth * th, Scalar::tau(-1), m, {});
  return fam;
}

TrajOperator hamiltonian_generator_direct(const OscillatorUniverse& u, const SuperFunction& f,
                                          const SymplecticData& w) {
  const SuperDimension dim = u.dim;
  if (w.dim() != dim) throw std::invalid_argument("symplectic dimension mismatch");
  TrajOperator op(u, f.parity());
  const int pf = f.parity();
  // nu > 0 slots: (-)^{f mu + nu} :d_mu f omega^{mu nu} p_nu:
  for (int nu = 1; nu <= dim.total(); ++nu) {
    SuperFunction comp = SuperFunction::zero(dim, (pf + dim.deg(nu)) & 1);
    for (int mu : w.support()) {
      Scalar om = w.upper(mu, nu);
      if (om.is_zero()) continue;
      SuperFunction df = f.derive(mu);
      if (df.is_zero()) continue;
      int s = pow_sign(pf * dim.deg(mu) + dim.deg(nu));
      SuperFunction t = df.scaled(om);
      comp += s < 0 ? -t : t;
    }
    if (comp.is_zero()) continue;
    op.add(trajectory_integral(u, comp, Scalar(1), 0, {{ModeKind::P, std::uint8_t(nu), 0, {}}}));
  }
  // nu = 0 slot: p_0(t) = -dq^j p_j, and the same coefficient feeds the
  // auxiliary Virasoro term (-)^{f mu} d_mu f omega^{mu 0} L(t).
  SuperFunction f0 = SuperFunction::zero(dim, pf);
  for (int mu : w.support()) {
    Scalar om = w.upper(mu, 0);
    if (om.is_zero()) continue;
    SuperFunction df = f.derive(mu);
    if (df.is_zero()) continue;
    int s = pow_sign(pf * dim.deg(mu));
    SuperFunction t = df.scaled(om);
    f0 += s < 0 ? -t : t;
  }
  if (!f0.is_zero()) {
    for (int j = 1; j <= dim.total(); ++j) {
      op.add(trajectory_integral(u, -(f0 * SuperFunction::velocity(dim, j)), Scalar(1), 0,
                                 {{ModeKind::P, std::uint8_t(j), 0, {}}}));
    }
    for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
      op.add(trajectory_integral(u, -f0, Scalar(1), 0,
                                 {{ModeKind::AuxQ, std::uint8_t(alpha), 1, {}},
                                  {ModeKind::AuxP, std::uint8_t(alpha), 0, {}}}));
    }
  }
  return op;
}

TrajOperator hamiltonian_generator(const OscillatorUniverse& u, const SuperFunction& f,
                                   const SymplecticData& w) {
  return vector_field_generator(u, hamiltonian_field(f, w));
}

TrajOperator contact_generator(const OscillatorUniverse& u, const SuperFunction& f,
                               const SymplecticData& w) {
  return vector_field_generator(u, contact_field(f, w));
}

}  // namespace superfock
