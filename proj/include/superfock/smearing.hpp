#ifndef SUPERFOCK_SMEARING_HPP
#define SUPERFOCK_SMEARING_HPP

#include <map>
#include <vector>

#include "superfock/vector_field.hpp"

namespace superfock {

// Smearing tensor f^{tau_1..tau_q}{}_{sigma_1..sigma_p}(x): q upper and p
// lower indices, component functions keyed by the concatenated index tuple
// (upper first). deg(component) = intrinsic parity + sum of index parities.
class SmearingTensor {
 public:
  SmearingTensor() = default;
  SmearingTensor(SuperDimension dim, int upper_rank, int lower_rank, int parity)
      : dim_(dim), q_(upper_rank), p_(lower_rank), parity_(parity & 1) {}

  const SuperDimension& dim() const { return dim_; }
  int upper_rank() const { return q_; }
  int lower_rank() const { return p_; }
  int parity() const { return parity_; }

  void set_component(const std::vector<int>& idx, const SuperFunction& f);
  SuperFunction component(const std::vector<int>& idx) const;
  const std::map<std::vector<int>, SuperFunction>& components() const { return comps_; }

  friend bool operator==(const SmearingTensor& a, const SmearingTensor& b);
  friend bool operator!=(const SmearingTensor& a, const SmearingTensor& b) { return !(a == b); }

 private:
  int tuple_parity(const std::vector<int>& idx) const;

  SuperDimension dim_;
  int q_ = 0;
  int p_ = 0;
  int parity_ = 0;
  std::map<std::vector<int>, SuperFunction> comps_;
};

// Dual diffeomorphism action on smearing tensors with density weight kappa:
// the derivative term, the (1 - kappa) div xi weight term, and one graded
// index-substitution sum per lower and upper slot.
SmearingTensor lie_derivative_smearing(const SuperVectorField& xi, const SmearingTensor& f,
                                       const Rational& kappa);

}  // namespace superfock

#endif
