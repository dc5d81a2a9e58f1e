#include "superfock/symplectic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace superfock {

namespace {

int pow_sign(int exponent) { return (exponent & 1) ? -1 : 1; }

// Exact inverse of a small matrix over the scalar ring by Gauss-Jordan.
std::vector<std::vector<Scalar>> invert(std::vector<std::vector<Scalar>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Scalar(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("omega not invertible on its support");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Scalar d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) { a[col][j] = a[col][j] / d; inv[col][j] = inv[col][j] / d; }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SymplecticData SymplecticData::from_upper(SuperDimension dim,
                                          const std::map<std::pair<int, int>, Scalar>& upper) {
  SymplecticData w;
  w.dim_ = dim;
  std::set<int> sup;
  for (const auto& [idx, val] : upper) {
    auto [mu, nu] = idx;
    if (!dim.valid_index(mu) || !dim.valid_index(nu))
      throw std::out_of_range("omega index out of range");
    if (dim.deg(mu) != dim.deg(nu))
      throw std::invalid_argument("mixed-parity omega entries not supported");
    if (val.is_zero()) continue;
    w.upper_[{mu, nu}] += val;
    sup.insert(mu);
    sup.insert(nu);
  }
  // Complete graded partners omega^{nu mu} = -(-)^{mu nu} omega^{mu nu}.
  auto entries = w.upper_;
  for (const auto& [idx, val] : entries) {
    auto [mu, nu] = idx;
    if (mu == nu) continue;
    auto rev = w.upper_.find({nu, mu});
    Scalar partner = val;
    if (pow_sign(dim.deg(mu) * dim.deg(nu) + 1) < 0) partner = -partner;
    if (rev == w.upper_.end()) w.upper_[{nu, mu}] = partner;
    else if (rev->second != partner)
      throw std::invalid_argument("omega violates graded skewness");
  }
  w.support_.assign(sup.begin(), sup.end());

  // Solve omega^{mu rho} omega_{rho nu} = (-)^mu delta^mu_nu on the support.
  const std::size_t n = w.support_.size();
  if (n > 0) {
    std::vector<std::vector<Scalar>> U(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        U[i][j] = w.upper(w.support_[i], w.support_[j]);
    auto Uinv = invert(U);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar v = Uinv[i][j];
        if (dim.deg(w.support_[j]) == 1) v = -v;  // right-multiplied by diag((-)^mu)
        if (!v.is_zero()) w.lower_[{w.support_[i], w.support_[j]}] = v;
      }
    }
  }

  // Default contact direction: time.
  w.z_up_ = {{0, Scalar(1)}};
  w.z_dn_ = {{0, Scalar(1)}};
  w.validate();
  return w;
}

SymplecticData SymplecticData::contact_k11() {
  return from_upper(SuperDimension(0, 1), {{{1, 1}, Scalar::i()}});
}

SymplecticData SymplecticData::contact_k12() {
  return from_upper(SuperDimension(0, 2), {{{1, 2}, Scalar::i()}});
}

SymplecticData SymplecticData::bosonic_darboux(int pairs) {
  std::map<std::pair<int, int>, Scalar> u;
  for (int k = 0; k < pairs; ++k) u[{2 * k + 1, 2 * k + 2}] = Scalar(1);
  return from_upper(SuperDimension(2 * pairs, 0), u);
}

void SymplecticData::set_z(const std::map<int, Scalar>& z_upper,
                           const std::map<int, Scalar>& z_lower) {
  z_up_ = z_upper;
  z_dn_ = z_lower;
  has_z_ = true;
  validate();
}

Scalar SymplecticData::upper(int mu, int nu) const {
  auto it = upper_.find({mu, nu});
  return it == upper_.end() ? Scalar() : it->second;
}

Scalar SymplecticData::lower(int mu, int nu) const {
  auto it = lower_.find({mu, nu});
  return it == lower_.end() ? Scalar() : it->second;
}

Scalar SymplecticData::z_upper(int mu) const {
  auto it = z_up_.find(mu);
  return it == z_up_.end() ? Scalar() : it->second;
}

Scalar SymplecticData::z_lower(int mu) const {
  auto it = z_dn_.find(mu);
  return it == z_dn_.end() ? Scalar() : it->second;
}

void SymplecticData::validate() const {
  for (const auto& [idx, val] : upper_) {
    auto [mu, nu] = idx;
    Scalar rev = upper(nu, mu);
    Scalar want = pow_sign(dim_.deg(mu) * dim_.deg(nu) + 1) < 0 ? -val : val;
    if (rev != want) throw std::invalid_argument("upper omega violates graded skewness");
  }
  for (const auto& [idx, val] : lower_) {
    auto [mu, nu] = idx;
    Scalar rev = lower(nu, mu);
    Scalar want = pow_sign(dim_.deg(mu) * dim_.deg(nu) + 1) < 0 ? -val : val;
    if (rev != want) throw std::invalid_argument("lower omega violates graded skewness");
  }
  for (int mu : support_) {
    for (int nu : support_) {
      Scalar acc1, acc2;
      for (int rho : support_) {
        acc1 += upper(mu, rho) * lower(rho, nu);
        Scalar t = lower(nu, rho) * upper(rho, mu);
        if (dim_.deg(rho) == 1) t = -t;
        acc2 += t;
      }
      Scalar want1 = (mu == nu) ? Scalar(dim_.deg(mu) == 1 ? -1 : 1) : Scalar();
      Scalar want2 = (mu == nu) ? Scalar(1) : Scalar();
      if (acc1 != want1 || acc2 != want2)
        throw std::invalid_argument("omega inverse relations violated");
    }
  }
  // z conditions: bosonic support, z_mu z^mu = 1, z_mu omega^{mu nu} = 0.
  Scalar norm;
  for (const auto& [mu, zv] : z_dn_) {
    if (dim_.deg(mu) == 1) throw std::invalid_argument("z must be bosonic");
    norm += zv * z_upper(mu);
  }
  for (const auto& [mu, zv] : z_up_) {
    (void)zv;
    if (dim_.deg(mu) == 1) throw std::invalid_argument("z must be bosonic");
  }
  if (norm != Scalar(1)) throw std::invalid_argument("z_mu z^mu != 1");
  for (int nu : support_) {
    Scalar acc;
    for (const auto& [mu, zv] : z_dn_) acc += zv * upper(mu, nu);
    if (!acc.is_zero()) throw std::invalid_argument("z_mu omega^{mu nu} != 0");
  }
}

SuperFunction poisson_bracket(const SuperFunction& f, const SuperFunction& g,
                              const SymplecticData& w) {
  const SuperDimension dim = w.dim();
  SuperFunction out = SuperFunction::zero(dim, (f.parity() + g.parity()) & 1);
  for (int mu : w.support()) {
    SuperFunction df = f.derive(mu);
    if (df.is_zero()) continue;
    for (int nu : w.support()) {
      Scalar om = w.upper(mu, nu);
      if (om.is_zero()) continue;
      SuperFunction dg = g.derive(nu);
      if (dg.is_zero()) continue;
      int sign = pow_sign(f.parity() * dim.deg(mu) + dim.deg(nu));
      SuperFunction term = (df.scaled(om)) * dg;
      out += sign < 0 ? -term : term;
    }
  }
  return out;
}

SuperVectorField hamiltonian_field(const SuperFunction& f, const SymplecticData& w) {
  const SuperDimension dim = w.dim();
  SuperVectorField out(dim, f.parity());
  for (int nu : w.support()) {
    SuperFunction comp = SuperFunction::zero(dim, (f.parity() + dim.deg(nu)) & 1);
    for (int mu : w.support()) {
      Scalar om = w.upper(mu, nu);
      if (om.is_zero()) continue;
      SuperFunction df = f.derive(mu);
      if (df.is_zero()) continue;
      int sign = pow_sign(f.parity() * dim.deg(mu) + dim.deg(nu));
      SuperFunction term = df.scaled(om);
      comp += sign < 0 ? -term : term;
    }
    out.set_component(nu, comp);
  }
  return out;
}

namespace {

SuperFunction z_grad(const SuperFunction& f, const SymplecticData& w) {
  SuperFunction out = SuperFunction::zero(f.dim(), f.parity());
  for (int mu = 0; mu <= f.dim().total(); ++mu) {
    Scalar zv = w.z_upper(mu);
    if (zv.is_zero()) continue;
    out += f.derive(mu).scaled(zv);
  }
  return out;
}

SuperFunction z_coordinate(const SymplecticData& w) {
  const SuperDimension dim = w.dim();
  SuperFunction out = SuperFunction::zero(dim, 0);
  for (int mu = 0; mu <= dim.total(); ++mu) {
    Scalar zv = w.z_lower(mu);
    if (zv.is_zero()) continue;
    out += SuperFunction::coordinate(dim, mu).scaled(zv);
  }
  return out;
}

}  // namespace

SuperFunction euler(const SuperFunction& f, const SymplecticData& w) {
  const SuperDimension dim = w.dim();
  SuperFunction out = SuperFunction::zero(dim, f.parity());
  for (int mu = 0; mu <= dim.total(); ++mu) {
    SuperFunction d = f.derive(mu);
    if (d.is_zero()) continue;
    out += SuperFunction::coordinate(dim, mu) * d;
  }
  SuperFunction zg = z_grad(f, w);
  if (!zg.is_zero()) out -= z_coordinate(w) * zg;
  return out;
}

SuperFunction delta_of(const SuperFunction& f, const SymplecticData& w) {
  return f.scaled(Scalar(2)) - euler(f, w);
}

SuperFunction contact_bracket(const SuperFunction& f, const SuperFunction& g,
                              const SymplecticData& w) {
  SuperFunction out = delta_of(f, w) * z_grad(g, w);
  out -= z_grad(f, w) * delta_of(g, w);
  out -= poisson_bracket(f, g, w);
  return out;
}

SuperVectorField contact_field(const SuperFunction& f, const SymplecticData& w) {
  const SuperDimension dim = w.dim();
  SuperVectorField out(dim, f.parity());
  SuperFunction delta_f = delta_of(f, w);
  SuperFunction zdf = z_grad(f, w);
  SuperVectorField hf = hamiltonian_field(f, w);
  SuperFunction zx = z_coordinate(w);
  for (int nu = 0; nu <= dim.total(); ++nu) {
    SuperFunction comp = SuperFunction::zero(dim, (f.parity() + dim.deg(nu)) & 1);
    Scalar zv = w.z_upper(nu);
    if (!zv.is_zero()) comp += delta_f.scaled(zv);
    comp -= hf.component(nu);
    if (!zdf.is_zero()) {
      SuperFunction env = SuperFunction::coordinate(dim, nu);
      Scalar zl = Scalar();
      // E^nu = x^nu - z_sigma x^sigma z^nu
      zl = w.z_upper(nu);
      if (!zl.is_zero()) env -= zx.scaled(zl);
      comp += zdf * env;
    }
    out.set_component(nu, comp);
  }
  return out;
}

}  // namespace superfock
