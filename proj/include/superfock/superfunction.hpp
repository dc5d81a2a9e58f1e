#ifndef SUPERFOCK_SUPERFUNCTION_HPP
#define SUPERFOCK_SUPERFUNCTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superfock/scalar.hpp"
#include "superfock/superspace.hpp"

namespace superfock {

// Exponent list for commuting symbols, sorted by index, exponents > 0.
using ExpVec = std::vector<std::pair<std::uint8_t, std::uint8_t>>;

// One monomial of a superspace function:
//   coeff * e^{i*fourier*t} * prod x^mu^k * (Grassmann monomial) * (jet monomial)
// Odd symbols (coordinates theta_f, velocities v_theta_f, accelerations
// a_theta_f) live in one bitmask; the ordinal order theta < v < a, each class
// ascending in f, is the canonical order every coefficient is relative to.
struct TermKey {
  int fourier = 0;
  ExpVec bos;        // bosonic coordinate powers; index 0 = t (symbolic layer only)
  std::uint64_t odd = 0;
  ExpVec vbos;       // bosonic velocity powers, index 1..N
  ExpVec abos;       // bosonic acceleration powers, index 1..N

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

class SuperFunction {
 public:
  SuperFunction() = default;
  explicit SuperFunction(SuperDimension dim, int parity = 0) : dim_(dim), parity_(parity) {}

  static SuperFunction zero(SuperDimension dim, int parity = 0) { return SuperFunction(dim, parity); }
  static SuperFunction constant(SuperDimension dim, const Scalar& c);
  static SuperFunction coordinate(SuperDimension dim, int mu);   // x^mu or theta
  static SuperFunction fourier(SuperDimension dim, int m);       // e^{imt}
  static SuperFunction velocity(SuperDimension dim, int mu);     // v^mu (v^0 == 1)
  static SuperFunction acceleration(SuperDimension dim, int mu); // a^mu (a^0 == 0)

  const SuperDimension& dim() const { return dim_; }
  int parity() const { return parity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TermKey, Scalar>& terms() const { return terms_; }

  void add_term(const TermKey& key, const Scalar& coeff);

  SuperFunction operator-() const;
  friend SuperFunction operator+(const SuperFunction& a, const SuperFunction& b);
  friend SuperFunction operator-(const SuperFunction& a, const SuperFunction& b);
  friend SuperFunction operator*(const SuperFunction& a, const SuperFunction& b);
  SuperFunction& operator+=(const SuperFunction& o) { *this = *this + o; return *this; }
  SuperFunction& operator-=(const SuperFunction& o) { *this = *this - o; return *this; }

  SuperFunction scaled(const Scalar& c) const;
  friend bool operator==(const SuperFunction& a, const SuperFunction& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SuperFunction& a, const SuperFunction& b) { return !(a == b); }

  // Left partial derivative d/dx^mu; mu = 0 also differentiates the Fourier
  // factor: d_0 e^{imt} = im e^{imt}.
  SuperFunction derive(int mu) const;
  // Jet partials d/dv^mu and d/da^mu.
  SuperFunction derive_v(int mu) const;
  SuperFunction derive_a(int mu) const;
  // Total time derivative along the trajectory:
  //   d/dt = d_0 + sum_i v^i d_i + sum_i a^i d/dv^i   (v^0 = 1, a^0 = 0).
  SuperFunction time_derivative() const;

  bool has_time_power() const;   // any explicit t^k factor
  bool has_jet() const;          // any v/a symbol
  int fourier_bandwidth() const; // max |m| over terms
  int spatial_degree() const;    // max total spatial bosonic degree over terms

  std::string str() const;

 private:
  void check_compatible(const SuperFunction& o) const;

  SuperDimension dim_;
  int parity_ = 0;
  std::map<TermKey, Scalar> terms_;
};

// Koszul sign for appending the sorted odd word `b` after the sorted odd
// word `a` and re-sorting; 0 if they share a symbol.
int odd_merge_sign(std::uint64_t a, std::uint64_t b);

// Sign picked up by a left derivative reaching ordinal g inside mask `m`.
int odd_prefix_sign(std::uint64_t m, int g);

ExpVec expvec_add(const ExpVec& a, const ExpVec& b);

}  // namespace superfock

#endif
