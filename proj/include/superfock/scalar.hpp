#ifndef SUPERFOCK_SCALAR_HPP
#define SUPERFOCK_SCALAR_HPP

#include <map>
#include <string>

#include "superfock/rational.hpp"

namespace superfock {

// Coefficient ring Q(i)[tau, tau^-1] with tau = 2*pi kept symbolic. Circle
// integrals contribute one factor of tau, the momentum and current mode
// expansions one factor of tau^-1 each, so fully assembled operators always
// land back on tau^0; intermediate values do not.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t v) { set(0, GaussianRational(v)); }
  Scalar(const Rational& v) { set(0, GaussianRational(v)); }
  Scalar(const GaussianRational& v) { set(0, v); }
  Scalar(const GaussianRational& v, int tau_power) { set(tau_power, v); }

  static Scalar i() { return Scalar(GaussianRational::i()); }
  static Scalar tau(int power = 1) { return Scalar(GaussianRational(1), power); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  // The tau^0 coefficient; most callers sit entirely in that component.
  GaussianRational at_tau0() const {
    auto it = coeffs_.find(0);
    return it == coeffs_.end() ? GaussianRational() : it->second;
  }
  bool is_tau_free() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

  Scalar operator-() const {
    Scalar r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    for (const auto& [e, c] : b.coeffs_) r.add(e, c);
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    for (const auto& [e, c] : b.coeffs_) r.add(e, -c);
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r;
    for (const auto& [ea, ca] : a.coeffs_)
      for (const auto& [eb, cb] : b.coeffs_) r.add(ea + eb, ca * cb);
    return r;
  }
  // Division by a tau-monomial; that is the only case the engine needs.
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (!b.is_monomial()) throw std::domain_error("scalar division requires tau-monomial divisor");
    auto [eb, cb] = *b.coeffs_.begin();
    Scalar r;
    for (const auto& [ea, ca] : a.coeffs_) r.add(ea - eb, ca / cb);
    return r;
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    auto flat = [](const Scalar& s) {
      std::string out;
      for (const auto& [e, c] : s.coeffs_) out += std::to_string(e) + ":" + c.str() + ";";
      return out;
    };
    return flat(a) < flat(b);
  }

  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
      std::string piece = c.str();
      if (e != 0) {
        if (piece == "1") piece.clear();
        else piece = needs_parens(piece) ? "(" + piece + ")*" : piece + "*";
        piece += e == 1 ? "tau" : "tau^" + std::to_string(e);
      }
      if (!first) out += " + ";
      out += piece;
      first = false;
    }
    return out;
  }

 private:
  static bool needs_parens(const std::string& s) {
    return s.find('+') != std::string::npos || s.find('-', 1) != std::string::npos;
  }
  void set(int e, const GaussianRational& c) {
    if (!c.is_zero()) coeffs_[e] = c;
  }
  void add(int e, const GaussianRational& c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  std::map<int, GaussianRational> coeffs_;  // tau power -> coefficient
};

}  // namespace superfock

#endif
