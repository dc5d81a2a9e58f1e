#ifndef SUPERFOCK_FOCK_HPP
#define SUPERFOCK_FOCK_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "superfock/scalar.hpp"
#include "superfock/superspace.hpp"

namespace superfock {

// Oscillator families. Q/P are the trajectory modes q^i_m, p_{j,m} with
//   q^i(t) = sum_m q^i_m e^{imt},  p_j(t) = (1/tau) sum_m p_{j,m} e^{imt},
//   [p_{j,m}, q^i_n] = delta^i_j delta_{m+n,0}.
// AuxQ/AuxP build the internal Virasoro module, Cur the abelian currents with
// [J_{a,m}, J_{b,n}] = k m delta_{ab} delta_{m+n,0}.
enum class ModeKind : std::uint8_t { Q = 0, P = 1, AuxQ = 2, AuxP = 3, Cur = 4 };

struct ModeLabel {
  ModeKind kind{};
  std::uint8_t dir = 0;
  std::int16_t mode = 0;
  std::uint8_t parity = 0;

  // Vacuum polarization matching the delta-split of the mode expansions in
  // e^{-imt}: annihilators are q-type modes with m > 0 and p-type/current
  // modes with m >= 0; q zero modes create, p zero modes annihilate (the
  // current zero mode acts as zero).
  bool is_creator() const {
    if (kind == ModeKind::Q || kind == ModeKind::AuxQ) return mode <= 0;
    return mode < 0;
  }
  int energy() const { return mode < 0 ? -mode : mode; }

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
  std::string str() const;
};

// Oscillator content of one verification context: the trajectory in `dim`,
// optional auxiliary pairs realizing the internal Virasoro generator
// L(t) = -sum_alpha :d/dt qhat^alpha(t) phat_alpha(t):, and optional abelian
// current oscillators at the given level.
struct OscillatorUniverse {
  SuperDimension dim;
  int aux_bosonic = 0;
  int aux_fermionic = 0;
  int current_count = 0;
  Scalar current_level;

  friend bool operator==(const OscillatorUniverse& a, const OscillatorUniverse& b) {
    return a.dim == b.dim && a.aux_bosonic == b.aux_bosonic &&
           a.aux_fermionic == b.aux_fermionic && a.current_count == b.current_count &&
           a.current_level == b.current_level;
  }

  ModeLabel q(int dir, int mode) const;
  ModeLabel p(int dir, int mode) const;
  ModeLabel aux_q(int alpha, int mode) const;
  ModeLabel aux_p(int alpha, int mode) const;
  ModeLabel cur(int a, int mode) const;

  // Central charge the auxiliary realization is declared to carry; the probe
  // tests confirm it.
  GaussianRational declared_aux_charge() const {
    return GaussianRational(2 * (aux_bosonic - aux_fermionic));
  }

  // Nonzero graded commutator [annihilator, creator] between conjugate
  // modes; zero Scalar otherwise.
  Scalar contraction(const ModeLabel& annihilator, const ModeLabel& creator) const;
};

// Normal-ordered basis state: sorted creator occupations applied to the
// vacuum; fermionic occupation numbers never exceed one.
struct FockState {
  std::vector<std::pair<ModeLabel, std::uint32_t>> occ;

  int energy() const;
  int zero_mode_degree() const;
  int parity() const;
  friend auto operator<=>(const FockState&, const FockState&) = default;
  std::string str() const;
};

using StateVector = std::map<FockState, Scalar>;

bool is_zero(const StateVector& v);
StateVector& accumulate(StateVector& into, const FockState& s, const Scalar& c);
StateVector& accumulate(StateVector& into, const StateVector& v, const Scalar& scale);

// Energy / zero-mode-degree truncation window.
struct Window {
  int e_max = 0;
  int d_max = 0;
};

// All states with energy <= e_max and zero-mode degree <= d_max, each exactly
// once, in a deterministic order (energy, degree, label lexicographic).
std::vector<FockState> enumerate_basis(const OscillatorUniverse& u, const Window& w);

}  // namespace superfock

#endif
