#ifndef SUPERFOCK_SUPERALGEBRA_HPP
#define SUPERFOCK_SUPERALGEBRA_HPP

#include <string>
#include <vector>

#include "superfock/rational.hpp"

namespace superfock {

// Finite-dimensional superalgebra with brackets [J^a, J^b] = i f^{ab}_c J^c
// and a graded symmetric invariant metric delta^{ab}.
struct FiniteSuperalgebra {
  std::vector<std::string> names;
  std::vector<int> parities;
  // f[a][b][c] and metric[a][b]; Gaussian-rational entries.
  std::vector<std::vector<std::vector<GaussianRational>>> f;
  std::vector<std::vector<GaussianRational>> metric;

  int dim() const { return int(names.size()); }
  int index_of(const std::string& name) const;

  static FiniteSuperalgebra u1();
  // gl(1|1) in the elementary-matrix basis E^mu_nu with the supertrace
  // metric str(E^mu_nu E^sigma_tau) = (-)^mu delta^sigma_nu delta^mu_tau.
  static FiniteSuperalgebra gl11();
};

struct AlgebraViolation {
  std::string identity;       // which family failed
  std::vector<int> indices;   // offending generator tuple
  std::string detail;
};

struct AlgebraReport {
  bool ok = true;
  std::vector<AlgebraViolation> violations;
};

// Exact checks: parity selection rule for f and metric, graded antisymmetry
// of f, the super-Jacobi identity, graded symmetry of the metric and its
// invariance under the adjoint action.
AlgebraReport verify_finite_superalgebra(const FiniteSuperalgebra& g);

// Structured text format: `dim`, `parity`, `name`, `f a b c = value`,
// `metric a b = value` lines; indices are 1-based.
FiniteSuperalgebra parse_algebra_file(const std::string& text);

}  // namespace superfock

#endif
