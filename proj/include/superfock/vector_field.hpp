#ifndef SUPERFOCK_VECTOR_FIELD_HPP
#define SUPERFOCK_VECTOR_FIELD_HPP

#include <map>
#include <vector>

#include "superfock/superfunction.hpp"

namespace superfock {

// First-order differential operator xi = xi^mu(x) d_mu. Components are
// stored per coordinate index; parity(xi^mu) = parity(xi) + deg(mu).
class SuperVectorField {
 public:
  SuperVectorField() = default;
  SuperVectorField(SuperDimension dim, int parity) : dim_(dim), parity_(parity & 1) {}

  static SuperVectorField basis(SuperDimension dim, int mu);  // d_mu

  const SuperDimension& dim() const { return dim_; }
  int parity() const { return parity_; }
  bool is_zero() const;

  void set_component(int mu, const SuperFunction& f);
  SuperFunction component(int mu) const;
  const std::map<int, SuperFunction>& components() const { return comps_; }

  SuperVectorField operator-() const;
  friend SuperVectorField operator+(const SuperVectorField& a, const SuperVectorField& b);
  friend SuperVectorField operator-(const SuperVectorField& a, const SuperVectorField& b);
  SuperVectorField scaled(const Scalar& c) const;
  SuperVectorField& operator+=(const SuperVectorField& o) { *this = *this + o; return *this; }

  friend bool operator==(const SuperVectorField& a, const SuperVectorField& b);
  friend bool operator!=(const SuperVectorField& a, const SuperVectorField& b) { return !(a == b); }

  int fourier_bandwidth() const;
  int spatial_degree() const;
  bool has_time_power() const;

  std::string str() const;

 private:
  SuperDimension dim_;
  int parity_ = 0;
  std::map<int, SuperFunction> comps_;
};

// xi acting on a function: xi(f) = xi^mu d_mu f.
SuperFunction apply_field(const SuperVectorField& xi, const SuperFunction& f);

// [xi, eta] = xi^mu d_mu eta^nu d_nu - (-)^{xi eta} eta^nu d_nu xi^mu d_mu.
SuperVectorField lie_bracket(const SuperVectorField& xi, const SuperVectorField& eta);

// div xi = (-)^{xi mu + mu} d_mu xi^mu.
SuperFunction divergence(const SuperVectorField& xi);

// Velocity-eliminated components xtilde^i = xi^i - xi^0 v^i for the spatial
// directions i = 1..N+M (xtilde^0 vanishes identically).
std::map<int, SuperFunction> tilde_components(const SuperVectorField& xi);

struct JetIdentityReport {
  bool ok = false;
  SuperFunction residual_divergence;  // (-)^{xi i + i} d_i xtilde^i - (div xi - d/dt xi^0)
  SuperFunction residual_pairing;     // LHS - RHS of the paired-contraction identity
};

// Checks the two jet-level identities relating xtilde to divergences and
// total time derivatives; both residuals must cancel to the zero function.
JetIdentityReport verify_tilde_identities(const SuperVectorField& xi, const SuperVectorField& eta);

}  // namespace superfock

#endif
