#ifndef SUPERFOCK_SYMPLECTIC_HPP
#define SUPERFOCK_SYMPLECTIC_HPP

#include <map>
#include <optional>
#include <utility>

#include "superfock/vector_field.hpp"

namespace superfock {

// Constant graded skew pairing omega^{mu nu} together with its inverse
// omega_{mu nu} and the optional contact direction vector z. Entries are
// restricted to pairs of equal coordinate parity; purely Grassmann-valued
// omega (the odd analogue) is out of scope here.
class SymplecticData {
 public:
  SymplecticData() = default;

  // `upper` lists independent entries of omega^{mu nu}; the graded partner
  // omega^{nu mu} = -(-)^{mu nu} omega^{mu nu} is filled in automatically and
  // the lower-index inverse is solved for on the support.
  static SymplecticData from_upper(SuperDimension dim,
                                   const std::map<std::pair<int, int>, Scalar>& upper);

  // Standard data for the contact superalgebras on (1|1) and (1|2)
  // dimensions: omega^{11} = i resp. omega^{12} = i.
  static SymplecticData contact_k11();
  static SymplecticData contact_k12();
  // N Darboux pairs on (2N|0) spatial dimensions: omega^{2k-1,2k} = 1.
  static SymplecticData bosonic_darboux(int pairs);

  void set_z(const std::map<int, Scalar>& z_upper, const std::map<int, Scalar>& z_lower);

  const SuperDimension& dim() const { return dim_; }
  Scalar upper(int mu, int nu) const;
  Scalar lower(int mu, int nu) const;
  const std::vector<int>& support() const { return support_; }
  bool has_z() const { return has_z_; }
  Scalar z_upper(int mu) const;
  Scalar z_lower(int mu) const;

  // Verifies graded skewness of both index pictures, the two inverse
  // relations, and the z conditions z_mu z^mu = 1, z_mu omega^{mu nu} = 0.
  void validate() const;

 private:
  SuperDimension dim_;
  std::map<std::pair<int, int>, Scalar> upper_;
  std::map<std::pair<int, int>, Scalar> lower_;
  std::vector<int> support_;
  bool has_z_ = false;
  std::map<int, Scalar> z_up_;
  std::map<int, Scalar> z_dn_;
};

// {f, g} = (-)^{f mu + nu} d_mu f omega^{mu nu} d_nu g.
SuperFunction poisson_bracket(const SuperFunction& f, const SuperFunction& g,
                              const SymplecticData& w);

// H_f = (-)^{f mu + nu} d_mu f omega^{mu nu} d_nu.
SuperVectorField hamiltonian_field(const SuperFunction& f, const SymplecticData& w);

// Euler operator E = x^mu d_mu - z_mu x^mu z^nu d_nu and Delta = 2 - E.
SuperFunction euler(const SuperFunction& f, const SymplecticData& w);
SuperFunction delta_of(const SuperFunction& f, const SymplecticData& w);

// {f, g}_K = Delta(f) z^mu d_mu g - z^mu d_mu f Delta(g) - {f, g}.
SuperFunction contact_bracket(const SuperFunction& f, const SuperFunction& g,
                              const SymplecticData& w);

// K_f = Delta(f) z^mu d_mu - H_f + z^mu d_mu f * E.
SuperVectorField contact_field(const SuperFunction& f, const SymplecticData& w);

}  // namespace superfock

#endif
