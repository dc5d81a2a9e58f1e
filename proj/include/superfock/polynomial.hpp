#ifndef SUPERFOCK_POLYNOMIAL_HPP
#define SUPERFOCK_POLYNOMIAL_HPP

#include <array>
#include <map>
#include <string>

#include "superfock/rational.hpp"

namespace superfock {

// Polynomials over Q(i) in the mode indeterminates m, n, p. Identities of
// mode algebras are decided by exact arithmetic here, never by sampling.
class Poly {
 public:
  using Key = std::array<int, 3>;

  Poly() = default;
  Poly(std::int64_t c) { add(Key{0, 0, 0}, GaussianRational(c)); }
  Poly(const GaussianRational& c) { add(Key{0, 0, 0}, c); }

  static Poly var(int axis);  // 0 -> m, 1 -> n, 2 -> p
  static Poly m() { return var(0); }
  static Poly n() { return var(1); }
  static Poly p() { return var(2); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussianRational>& terms() const { return terms_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
  Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const GaussianRational& c) const;
  Poly pow(int k) const;

  // Substitute each axis by the given polynomial.
  Poly substitute(const Poly& xm, const Poly& xn, const Poly& xp) const;
  Poly swap_mn() const { return substitute(Poly::n(), Poly::m(), Poly::p()); }

  GaussianRational evaluate(const GaussianRational& vm, const GaussianRational& vn,
                            const GaussianRational& vp) const;

  std::string str() const;

  // Parse an expression in the variables named in `vars` (by axis) with
  // named Gaussian-rational parameters; supports + - * / ^ and implicit
  // multiplication by juxtaposition. Throws std::invalid_argument with a
  // column-annotated message on bad input.
  static Poly parse(const std::string& text, const std::array<std::string, 3>& vars,
                    const std::map<std::string, GaussianRational>& params);

 private:
  void add(const Key& k, const GaussianRational& c);
  std::map<Key, GaussianRational> terms_;
};

}  // namespace superfock

#endif
