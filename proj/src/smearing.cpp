#include "superfock/smearing.hpp"

#include <stdexcept>

namespace superfock {

namespace {
int pow_sign(int exponent) { return (exponent & 1) ? -1 : 1; }
}

int SmearingTensor::tuple_parity(const std::vector<int>& idx) const {
  int s = parity_;
  for (int mu : idx) s += dim_.deg(mu);
  return s & 1;
}

void SmearingTensor::set_component(const std::vector<int>& idx, const SuperFunction& f) {
  if ((int)idx.size() != q_ + p_) throw std::invalid_argument("smearing index rank mismatch");
  for (int mu : idx)
    if (!dim_.valid_index(mu)) throw std::out_of_range("smearing index");
  if (f.is_zero()) { comps_.erase(idx); return; }
  if (f.parity() != tuple_parity(idx))
    throw std::invalid_argument("smearing component parity mismatch");
  comps_[idx] = f;
}

SuperFunction SmearingTensor::component(const std::vector<int>& idx) const {
  auto it = comps_.find(idx);
  if (it != comps_.end()) return it->second;
  return SuperFunction::zero(dim_, tuple_parity(idx));
}

bool operator==(const SmearingTensor& a, const SmearingTensor& b) {
  if (a.dim_ != b.dim_ || a.q_ != b.q_ || a.p_ != b.p_) return false;
  for (const auto& [k, v] : a.comps_)
    if (b.component(k) != v) return false;
  for (const auto& [k, v] : b.comps_)
    if (a.component(k) != v) return false;
  return true;
}

SmearingTensor lie_derivative_smearing(const SuperVectorField& xi, const SmearingTensor& f,
                                       const Rational& kappa) {
  const SuperDimension dim = f.dim();
  if (xi.dim() != dim) throw std::invalid_argument("super dimension mismatch");
  const int q = f.upper_rank(), p = f.lower_rank();
  const int pf = f.parity(), px = xi.parity();
  SmearingTensor out(dim, q, p, (pf + px) & 1);

  SuperFunction div_xi = divergence(xi);
  Scalar weight = Scalar(Rational(1) - kappa);

  // Enumerate all index tuples.
  std::vector<int> idx(q + p, 0);
  const int dims = dim.total() + 1;
  auto deg = [&](int mu) { return dim.deg(mu); };
  while (true) {
    SuperFunction comp = f.component(idx);
    SuperFunction acc = apply_field(xi, comp);
    if (!div_xi.is_zero() && !comp.is_zero()) acc += (div_xi * comp).scaled(weight);

    // Lower-slot substitutions sigma_i -> mu.
    for (int i = 0; i < p; ++i) {
      int sigma = idx[q + i];
      int tail = 0;
      for (int j = 0; j < q; ++j) tail += deg(idx[j]);
      for (int j = i + 1; j < p; ++j) tail += deg(idx[q + j]);
      for (int mu = 0; mu < dims; ++mu) {
        SuperFunction dxi = xi.component(mu).derive(sigma);
        if (dxi.is_zero()) continue;
        std::vector<int> sub = idx;
        sub[q + i] = mu;
        SuperFunction g = f.component(sub);
        if (g.is_zero()) continue;
        int sign = pow_sign((pf + tail) * (deg(mu) + deg(sigma)) + px * deg(sigma));
        SuperFunction term = dxi * g;
        acc += sign < 0 ? -term : term;
      }
    }

    // Upper-slot substitutions tau_j -> mu.
    for (int j = 0; j < q; ++j) {
      int tau = idx[j];
      int tail = 0;
      for (int l = j + 1; l < q; ++l) tail += deg(idx[l]);
      for (int mu = 0; mu < dims; ++mu) {
        SuperFunction dxi = xi.component(tau).derive(mu);
        if (dxi.is_zero()) continue;
        std::vector<int> sub = idx;
        sub[j] = mu;
        SuperFunction g = f.component(sub);
        if (g.is_zero()) continue;
        int sign = pow_sign((pf + tail + deg(mu)) * (deg(mu) + deg(tau)) + px * deg(mu));
        SuperFunction term = dxi * g;
        acc -= sign < 0 ? -term : term;
      }
    }

    if (!acc.is_zero()) out.set_component(idx, acc);

    int pos = q + p - 1;
    while (pos >= 0 && idx[pos] == dims - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

}  // namespace superfock
