#ifndef SUPERFOCK_OPERATORS_HPP
#define SUPERFOCK_OPERATORS_HPP

#include <optional>
#include <stdexcept>

#include "superfock/fock.hpp"
#include "superfock/superfunction.hpp"

namespace superfock {

// One oscillator slot of a normal-ordered integrand factor. `der` counts
// time derivatives: the mode-m component is weighted by (i m)^der. A fixed
// mode pins the slot; otherwise the mode is summed subject to the term's
// total mode constraint.
struct TrajFactor {
  ModeKind kind{};
  std::uint8_t dir = 0;
  std::uint8_t der = 0;
  std::optional<int> fixed_mode;
};

// coeff * sum over mode assignments with sum(modes) = total_mode of the
// normal-ordered product of the factors in written order.
struct TrajTerm {
  Scalar coeff;
  int total_mode = 0;
  std::vector<TrajFactor> factors;
};

// Finite sum of mode-summed normal-ordered monomials; every concrete
// monomial of a term shifts the state energy by exactly total_mode and every
// application to a state is a finite exact computation.
class TrajOperator {
 public:
  TrajOperator() = default;
  TrajOperator(OscillatorUniverse u, int parity) : universe_(u), parity_(parity & 1) {}

  const OscillatorUniverse& universe() const { return universe_; }
  int parity() const { return parity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<TrajTerm>& terms() const { return terms_; }

  void add_term(TrajTerm term);
  void add(const TrajOperator& other, const Scalar& scale = Scalar(1));
  TrajOperator scaled(const Scalar& c) const;
  friend TrajOperator operator+(const TrajOperator& a, const TrajOperator& b);
  friend TrajOperator operator-(const TrajOperator& a, const TrajOperator& b);

  // Largest |total_mode| over the terms.
  int mode_bandwidth() const;

 private:
  OscillatorUniverse universe_;
  int parity_ = 0;
  std::vector<TrajTerm> terms_;
};

StateVector apply(const TrajOperator& op, const FockState& state);
StateVector apply_linear(const TrajOperator& op, const StateVector& v);

// Graded commutator action [A, B] |s> = A(B|s>) - (-)^{AB} B(A|s>).
StateVector apply_graded_commutator(const TrajOperator& a, const TrajOperator& b,
                                    const FockState& state);

Scalar vacuum_expectation(const TrajOperator& op);

// Exact matrix columns over a basis. Columns are full state vectors; the
// window only selects which columns are assembled.
struct WindowMatrix {
  std::vector<FockState> basis;
  std::vector<StateVector> columns;

  bool is_zero() const;
  int nonzero_entries() const;
  std::string first_nonzero(int limit = 3) const;

  friend WindowMatrix operator-(const WindowMatrix& a, const WindowMatrix& b);
};

WindowMatrix window_matrix(const TrajOperator& op, const std::vector<FockState>& basis);

struct MarginError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace superfock

#endif
