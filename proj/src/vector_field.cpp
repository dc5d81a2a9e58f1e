#include "superfock/vector_field.hpp"

#include <stdexcept>

namespace superfock {

SuperVectorField SuperVectorField::basis(SuperDimension dim, int mu) {
  SuperVectorField f(dim, dim.deg(mu));
  f.set_component(mu, SuperFunction::constant(dim, Scalar(1)));
  return f;
}

bool SuperVectorField::is_zero() const {
  for (const auto& [mu, f] : comps_)
    if (!f.is_zero()) return false;
  return true;
}

void SuperVectorField::set_component(int mu, const SuperFunction& f) {
  if (!dim_.valid_index(mu)) throw std::out_of_range("component index");
  if (f.is_zero()) { comps_.erase(mu); return; }
  if (f.dim() != dim_) throw std::invalid_argument("component dimension mismatch");
  if (f.parity() != ((parity_ + dim_.deg(mu)) & 1))
    throw std::invalid_argument("component parity violates field parity");
  comps_[mu] = f;
}

SuperFunction SuperVectorField::component(int mu) const {
  auto it = comps_.find(mu);
  if (it != comps_.end()) return it->second;
  return SuperFunction::zero(dim_, (parity_ + dim_.deg(mu)) & 1);
}

SuperVectorField SuperVectorField::operator-() const {
  SuperVectorField r(dim_, parity_);
  for (const auto& [mu, f] : comps_) r.comps_.emplace(mu, -f);
  return r;
}

SuperVectorField operator+(const SuperVectorField& a, const SuperVectorField& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("super dimension mismatch");
  if (!a.is_zero() && !b.is_zero() && a.parity_ != b.parity_)
    throw std::invalid_argument("parity mismatch in vector field sum");
  SuperVectorField r(a.dim_, a.is_zero() ? b.parity_ : a.parity_);
  for (const auto& [mu, f] : a.comps_) r.set_component(mu, f);
  for (const auto& [mu, f] : b.comps_) r.set_component(mu, r.component(mu) + f);
  return r;
}

SuperVectorField operator-(const SuperVectorField& a, const SuperVectorField& b) {
  return a + (-b);
}

SuperVectorField SuperVectorField::scaled(const Scalar& c) const {
  SuperVectorField r(dim_, parity_);
  for (const auto& [mu, f] : comps_) r.set_component(mu, f.scaled(c));
  return r;
}

bool operator==(const SuperVectorField& a, const SuperVectorField& b) {
  if (a.dim_ != b.dim_) return false;
  for (int mu = 0; mu <= a.dim_.total(); ++mu)
    if (a.component(mu) != b.component(mu)) return false;
  return true;
}

int SuperVectorField::fourier_bandwidth() const {
  int bw = 0;
  for (const auto& [mu, f] : comps_) { (void)mu; bw = std::max(bw, f.fourier_bandwidth()); }
  return bw;
}

int SuperVectorField::spatial_degree() const {
  int deg = 0;
  for (const auto& [mu, f] : comps_) { (void)mu; deg = std::max(deg, f.spatial_degree()); }
  return deg;
}

bool SuperVectorField::has_time_power() const {
  for (const auto& [mu, f] : comps_) { (void)mu; if (f.has_time_power()) return true; }
  return false;
}

std::string SuperVectorField::str() const {
  std::string out;
  for (const auto& [mu, f] : comps_) {
    if (!out.empty()) out += " + ";
    out += "(" + f.str() + ")*d" + std::to_string(mu);
  }
  return out.empty() ? "0" : out;
}

SuperFunction apply_field(const SuperVectorField& xi, const SuperFunction& f) {
  SuperFunction out = SuperFunction::zero(xi.dim(), (xi.parity() + f.parity()) & 1);
  for (const auto& [mu, comp] : xi.components()) {
    SuperFunction d = f.derive(mu);
    if (!d.is_zero()) out += comp * d;
  }
  return out;
}

SuperVectorField lie_bracket(const SuperVectorField& xi, const SuperVectorField& eta) {
  if (xi.dim() != eta.dim()) throw std::invalid_argument("super dimension mismatch");
  const SuperDimension dim = xi.dim();
  int cross = (xi.parity() * eta.parity()) & 1;
  SuperVectorField out(dim, (xi.parity() + eta.parity()) & 1);
  for (int nu = 0; nu <= dim.total(); ++nu) {
    SuperFunction c = apply_field(xi, eta.component(nu));
    SuperFunction d = apply_field(eta, xi.component(nu));
    if (cross == 0) c -= d;
    else c += d;
    out.set_component(nu, c);
  }
  return out;
}

SuperFunction divergence(const SuperVectorField& xi) {
  const SuperDimension dim = xi.dim();
  SuperFunction out = SuperFunction::zero(dim, xi.parity());
  for (const auto& [mu, comp] : xi.components()) {
    SuperFunction d = comp.derive(mu);
    if (d.is_zero()) continue;
    int sign = ((xi.parity() * dim.deg(mu) + dim.deg(mu)) & 1) ? -1 : 1;
    out += sign < 0 ? -d : d;
  }
  return out;
}

std::map<int, SuperFunction> tilde_components(const SuperVectorField& xi) {
  const SuperDimension dim = xi.dim();
  std::map<int, SuperFunction> out;
  SuperFunction xi0 = xi.component(0);
  for (int i = 1; i <= dim.total(); ++i) {
    SuperFunction t = xi.component(i);
    if (!xi0.is_zero()) t -= xi0 * SuperFunction::velocity(dim, i);
    if (!t.is_zero()) out.emplace(i, t);
  }
  return out;
}

namespace {

// sum_rho v^rho * d_rho F over all space-time indices, v^0 = 1. Coincides
// with the total time derivative on pure coordinate functions but leaves
// velocity symbols untouched.
SuperFunction vgrad(const SuperFunction& f) {
  SuperFunction out = f.derive(0);
  for (int mu = 1; mu <= f.dim().total(); ++mu) {
    SuperFunction d = f.derive(mu);
    if (!d.is_zero()) out += SuperFunction::velocity(f.dim(), mu) * d;
  }
  return out;
}

int pow_sign(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace

JetIdentityReport verify_tilde_identities(const SuperVectorField& xi, const SuperVectorField& eta) {
  const SuperDimension dim = xi.dim();
  JetIdentityReport rep;
  const int px = xi.parity(), pe = eta.parity();

  auto tx = tilde_components(xi);
  auto te = tilde_components(eta);
  auto tilde = [&](const std::map<int, SuperFunction>& m, int i, int parity) {
    auto it = m.find(i);
    return it == m.end() ? SuperFunction::zero(dim, (parity + dim.deg(i)) & 1) : it->second;
  };

  // (-)^{xi i + i} d_i xtilde^i = div xi - d/dt xi^0.
  SuperFunction lhs1 = SuperFunction::zero(dim, px);
  for (int i = 1; i <= dim.total(); ++i) {
    SuperFunction d = tilde(tx, i, px).derive(i);
    if (d.is_zero()) continue;
    int sign = pow_sign(px * dim.deg(i) + dim.deg(i));
    lhs1 += sign < 0 ? -d : d;
  }
  rep.residual_divergence = lhs1 - divergence(xi) + xi.component(0).time_derivative();

  // Paired-contraction identity between the tilde fields and the full ones.
  SuperFunction lhs2 = SuperFunction::zero(dim, (px + pe) & 1);
  for (int j = 1; j <= dim.total(); ++j) {
    for (int i = 1; i <= dim.total(); ++i) {
      SuperFunction a = tilde(tx, i, px).time_derivative().derive(j);
      SuperFunction b = tilde(te, j, pe).derive(i);
      if (a.is_zero() || b.is_zero()) continue;
      int sign = pow_sign((px + pe + dim.deg(j)) * dim.deg(j));
      SuperFunction prod = a * b;
      lhs2 += sign < 0 ? -prod : prod;
    }
  }

  SuperFunction rhs2 = SuperFunction::zero(dim, (px + pe) & 1);
  SuperFunction xi0 = xi.component(0);
  SuperFunction eta0 = eta.component(0);
  SuperFunction dt_xi0 = xi0.time_derivative();
  SuperFunction dt_eta0 = eta0.time_derivative();
  for (int nu = 0; nu <= dim.total(); ++nu) {
    int sign = pow_sign((px + pe + dim.deg(nu)) * dim.deg(nu));
    SuperFunction acc = SuperFunction::zero(dim, (px + pe) & 1);
    for (int mu = 0; mu <= dim.total(); ++mu) {
      SuperFunction a = xi.component(mu).time_derivative().derive(nu);
      SuperFunction b = eta.component(nu).derive(mu);
      if (!a.is_zero() && !b.is_zero()) acc += a * b;
    }
    SuperFunction c = xi0.derive(nu);
    SuperFunction d = vgrad(eta.component(nu).time_derivative());
    if (!c.is_zero() && !d.is_zero()) acc += c * d;
    rhs2 += sign < 0 ? -acc : acc;
  }
  for (int mu = 0; mu <= dim.total(); ++mu) {
    SuperFunction a = vgrad(xi.component(mu).time_derivative());
    SuperFunction b = eta0.derive(mu);
    if (!a.is_zero() && !b.is_zero()) rhs2 -= a * b;
  }
  rhs2 -= xi0.time_derivative().time_derivative() * dt_eta0;
  rhs2 -= dt_xi0 * vgrad(dt_eta0);
  rhs2 += vgrad(dt_xi0) * dt_eta0;

  SuperFunction boundary = dt_xi0 * dt_eta0;
  for (int nu = 0; nu <= dim.total(); ++nu) {
    SuperFunction c = xi0.derive(nu);
    SuperFunction d = eta.component(nu).time_derivative();
    if (c.is_zero() || d.is_zero()) continue;
    int sign = pow_sign((px + pe + dim.deg(nu)) * dim.deg(nu));
    SuperFunction prod = c * d;
    boundary -= sign < 0 ? -prod : prod;
  }
  rhs2 += boundary.time_derivative();

  rep.residual_pairing = lhs2 - rhs2;
  rep.ok = rep.residual_divergence.is_zero() && rep.residual_pairing.is_zero();
  return rep;
}

}  // namespace superfock
