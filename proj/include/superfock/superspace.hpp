#ifndef SUPERFOCK_SUPERSPACE_HPP
#define SUPERFOCK_SUPERSPACE_HPP

#include <stdexcept>
#include <string>

namespace superfock {

// (N+1|M)-dimensional super space-time. Index mu = 0 is time, 1..N are the
// spatial bosonic directions, N+1..N+M the fermionic ones. deg(mu) is the
// Z_2 parity of the coordinate.
struct SuperDimension {
  int n_spatial = 0;   // N
  int m_fermionic = 0; // M

  SuperDimension() = default;
  SuperDimension(int n, int m) : n_spatial(n), m_fermionic(m) {
    if (n < 0 || m < 0 || 3 * m > 60) throw std::invalid_argument("bad super dimension");
  }

  int total() const { return n_spatial + m_fermionic; }  // spatial dims, time excluded
  bool valid_index(int mu) const { return mu >= 0 && mu <= total(); }

  int deg(int mu) const {
    if (!valid_index(mu)) throw std::out_of_range("coordinate index " + std::to_string(mu));
    return mu > n_spatial ? 1 : 0;
  }
  bool fermionic(int mu) const { return deg(mu) == 1; }

  // Ordinal of a fermionic index inside [0, M).
  int fermion_ordinal(int mu) const { return mu - n_spatial - 1; }
  int fermion_index(int ordinal) const { return n_spatial + 1 + ordinal; }

  friend bool operator==(const SuperDimension& a, const SuperDimension& b) {
    return a.n_spatial == b.n_spatial && a.m_fermionic == b.m_fermionic;
  }
  friend bool operator!=(const SuperDimension& a, const SuperDimension& b) { return !(a == b); }

  std::string str() const {
    return "(" + std::to_string(n_spatial + 1) + "|" + std::to_string(m_fermionic) + ")";
  }
};

inline int parity_sign(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace superfock

#endif
