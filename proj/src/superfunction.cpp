#include "superfock/superfunction.hpp"

#include <bit>
#include <stdexcept>

namespace superfock {

int odd_merge_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int inversions = 0;
  std::uint64_t rest = b;
  while (rest) {
    int g = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t above = (g == 63) ? 0 : (a >> (g + 1));
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

int odd_prefix_sign(std::uint64_t m, int g) {
  std::uint64_t below = m & ((std::uint64_t(1) << g) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
    else {
      out.emplace_back(a[i].first, std::uint8_t(a[i].second + b[j].second));
      ++i; ++j;
    }
  }
  return out;
}

namespace {

int term_parity(const TermKey& k) { return std::popcount(k.odd) & 1; }

ExpVec single(std::uint8_t idx, std::uint8_t exp = 1) { return ExpVec{{idx, exp}}; }

}  // namespace

SuperFunction SuperFunction::constant(SuperDimension dim, const Scalar& c) {
  SuperFunction f(dim, 0);
  f.add_term(TermKey{}, c);
  return f;
}

SuperFunction SuperFunction::coordinate(SuperDimension dim, int mu) {
  if (!dim.valid_index(mu)) throw std::out_of_range("coordinate index");
  if (dim.fermionic(mu)) {
    SuperFunction f(dim, 1);
    TermKey k;
    k.odd = std::uint64_t(1) << dim.fermion_ordinal(mu);
    f.add_term(k, Scalar(1));
    return f;
  }
  SuperFunction f(dim, 0);
  TermKey k;
  k.bos = single(std::uint8_t(mu));
  f.add_term(k, Scalar(1));
  return f;
}

SuperFunction SuperFunction::fourier(SuperDimension dim, int m) {
  SuperFunction f(dim, 0);
  TermKey k;
  k.fourier = m;
  f.add_term(k, Scalar(1));
  return f;
}

SuperFunction SuperFunction::velocity(SuperDimension dim, int mu) {
  if (!dim.valid_index(mu)) throw std::out_of_range("velocity index");
  if (mu == 0) return constant(dim, Scalar(1));  // dq^0/dt = 1
  if (dim.fermionic(mu)) {
    SuperFunction f(dim, 1);
    TermKey k;
    k.odd = std::uint64_t(1) << (dim.m_fermionic + dim.fermion_ordinal(mu));
    f.add_term(k, Scalar(1));
    return f;
  }
  SuperFunction f(dim, 0);
  TermKey k;
  k.vbos = single(std::uint8_t(mu));
  f.add_term(k, Scalar(1));
  return f;
}

SuperFunction SuperFunction::acceleration(SuperDimension dim, int mu) {
  if (!dim.valid_index(mu)) throw std::out_of_range("acceleration index");
  if (mu == 0) return zero(dim);  // d^2 q^0/dt^2 = 0
  if (dim.fermionic(mu)) {
    SuperFunction f(dim, 1);
    TermKey k;
    k.odd = std::uint64_t(1) << (2 * dim.m_fermionic + dim.fermion_ordinal(mu));
    f.add_term(k, Scalar(1));
    return f;
  }
  SuperFunction f(dim, 0);
  TermKey k;
  k.abos = single(std::uint8_t(mu));
  f.add_term(k, Scalar(1));
  return f;
}

void SuperFunction::add_term(const TermKey& key, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  if (terms_.empty()) parity_ = term_parity(key);
  else if (term_parity(key) != parity_)
    throw std::invalid_argument("inhomogeneous parity in super function");
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void SuperFunction::check_compatible(const SuperFunction& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("super dimension mismatch");
}

SuperFunction SuperFunction::operator-() const {
  SuperFunction r(dim_, parity_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SuperFunction operator+(const SuperFunction& a, const SuperFunction& b) {
  a.check_compatible(b);
  SuperFunction r = a;
  if (r.is_zero()) r.parity_ = b.parity_;
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

SuperFunction operator-(const SuperFunction& a, const SuperFunction& b) {
  return a + (-b);
}

SuperFunction operator*(const SuperFunction& a, const SuperFunction& b) {
  a.check_compatible(b);
  SuperFunction r(a.dim_, (a.parity_ + b.parity_) & 1);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int sign = odd_merge_sign(ka.odd, kb.odd);
      if (sign == 0) continue;
      TermKey k;
      k.fourier = ka.fourier + kb.fourier;
      k.bos = expvec_add(ka.bos, kb.bos);
      k.odd = ka.odd | kb.odd;
      k.vbos = expvec_add(ka.vbos, kb.vbos);
      k.abos = expvec_add(ka.abos, kb.abos);
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(k, c);
    }
  }
  return r;
}

SuperFunction SuperFunction::scaled(const Scalar& c) const {
  SuperFunction r(dim_, parity_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

namespace {

// Differentiate an exponent list entry, used by both x- and jet-derivatives.
bool lower_exponent(const ExpVec& in, std::uint8_t idx, ExpVec& out, int& factor) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i].first != idx) continue;
    out = in;
    factor = in[i].second;
    if (out[i].second == 1) out.erase(out.begin() + i);
    else --out[i].second;
    return true;
  }
  return false;
}

}  // namespace

SuperFunction SuperFunction::derive(int mu) const {
  if (!dim_.valid_index(mu)) throw std::out_of_range("derivative index");
  SuperFunction r(dim_, (parity_ + dim_.deg(mu)) & 1);
  for (const auto& [k, c] : terms_) {
    if (mu == 0) {
      if (k.fourier != 0) {
        Scalar nc = c * Scalar(GaussianRational(Rational(0), Rational(k.fourier)));
        r.add_term(k, nc);
      }
      ExpVec nb; int factor = 0;
      if (lower_exponent(k.bos, 0, nb, factor)) {
        TermKey nk = k;
        nk.bos = nb;
        r.add_term(nk, c * Scalar(factor));
      }
      continue;
    }
    if (!dim_.fermionic(mu)) {
      ExpVec nb; int factor = 0;
      if (lower_exponent(k.bos, std::uint8_t(mu), nb, factor)) {
        TermKey nk = k;
        nk.bos = nb;
        r.add_term(nk, c * Scalar(factor));
      }
      continue;
    }
    int g = dim_.fermion_ordinal(mu);
    std::uint64_t bit = std::uint64_t(1) << g;
    if (!(k.odd & bit)) continue;
    TermKey nk = k;
    nk.odd &= ~bit;
    int sign = odd_prefix_sign(k.odd, g);
    r.add_term(nk, sign < 0 ? -c : c);
  }
  return r;
}

SuperFunction SuperFunction::derive_v(int mu) const {
  if (!dim_.valid_index(mu) || mu == 0) throw std::out_of_range("velocity derivative index");
  SuperFunction r(dim_, (parity_ + dim_.deg(mu)) & 1);
  for (const auto& [k, c] : terms_) {
    if (!dim_.fermionic(mu)) {
      ExpVec nv; int factor = 0;
      if (lower_exponent(k.vbos, std::uint8_t(mu), nv, factor)) {
        TermKey nk = k;
        nk.vbos = nv;
        r.add_term(nk, c * Scalar(factor));
      }
      continue;
    }
    int g = dim_.m_fermionic + dim_.fermion_ordinal(mu);
    std::uint64_t bit = std::uint64_t(1) << g;
    if (!(k.odd & bit)) continue;
    TermKey nk = k;
    nk.odd &= ~bit;
    int sign = odd_prefix_sign(k.odd, g);
    r.add_term(nk, sign < 0 ? -c : c);
  }
  return r;
}

SuperFunction SuperFunction::derive_a(int mu) const {
  if (!dim_.valid_index(mu) || mu == 0) throw std::out_of_range("acceleration derivative index");
  SuperFunction r(dim_, (parity_ + dim_.deg(mu)) & 1);
  for (const auto& [k, c] : terms_) {
    if (!dim_.fermionic(mu)) {
      ExpVec na; int factor = 0;
      if (lower_exponent(k.abos, std::uint8_t(mu), na, factor)) {
        TermKey nk = k;
        nk.abos = na;
        r.add_term(nk, c * Scalar(factor));
      }
      continue;
    }
    int g = 2 * dim_.m_fermionic + dim_.fermion_ordinal(mu);
    std::uint64_t bit = std::uint64_t(1) << g;
    if (!(k.odd & bit)) continue;
    TermKey nk = k;
    nk.odd &= ~bit;
    int sign = odd_prefix_sign(k.odd, g);
    r.add_term(nk, sign < 0 ? -c : c);
  }
  return r;
}

SuperFunction SuperFunction::time_derivative() const {
  // Jet order is capped at accelerations; differentiating an a-symbol would
  // need jerks.
  std::uint64_t theta_v_mask = (std::uint64_t(1) << (2 * dim_.m_fermionic)) - 1;
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (!k.abos.empty() || (k.odd & ~theta_v_mask))
      throw std::domain_error("time derivative beyond jet order 2");
  }
  SuperFunction r = derive(0);
  for (int mu = 1; mu <= dim_.total(); ++mu) {
    SuperFunction d = derive(mu);
    if (!d.is_zero()) r += velocity(dim_, mu) * d;
    SuperFunction dv = derive_v(mu);
    if (!dv.is_zero()) r += acceleration(dim_, mu) * dv;
  }
  return r;
}

bool SuperFunction::has_time_power() const {
  for (const auto& [k, c] : terms_) {
    (void)c;
    for (const auto& [idx, exp] : k.bos)
      if (idx == 0 && exp > 0) return true;
  }
  return false;
}

bool SuperFunction::has_jet() const {
  std::uint64_t theta_mask = (dim_.m_fermionic >= 64) ? ~std::uint64_t(0)
      : ((std::uint64_t(1) << dim_.m_fermionic) - 1);
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (!k.vbos.empty() || !k.abos.empty()) return true;
    if (k.odd & ~theta_mask) return true;
  }
  return false;
}

int SuperFunction::fourier_bandwidth() const {
  int bw = 0;
  for (const auto& [k, c] : terms_) {
    (void)c;
    bw = std::max(bw, k.fourier < 0 ? -k.fourier : k.fourier);
  }
  return bw;
}

int SuperFunction::spatial_degree() const {
  int deg = 0;
  for (const auto& [k, c] : terms_) {
    (void)c;
    int d = 0;
    for (const auto& [idx, exp] : k.bos)
      if (idx >= 1) d += exp;
    deg = std::max(deg, d);
  }
  return deg;
}

std::string SuperFunction::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string piece;
    std::string cs = c.str();
    piece = "(" + cs + ")";
    if (k.fourier != 0)
      piece += "*exp(i*" + std::to_string(k.fourier) + "*t)";
    for (const auto& [idx, exp] : k.bos)
      for (int e = 0; e < exp; ++e) piece += "*x" + std::to_string(idx);
    std::uint64_t rest = k.odd;
    while (rest) {
      int g = std::countr_zero(rest);
      rest &= rest - 1;
      int m = dim_.m_fermionic;
      if (g < m) piece += "*th" + std::to_string(g + 1);
      else if (g < 2 * m) piece += "*v" + std::to_string(dim_.fermion_index(g - m));
      else piece += "*a" + std::to_string(dim_.fermion_index(g - 2 * m));
    }
    for (const auto& [idx, exp] : k.vbos)
      for (int e = 0; e < exp; ++e) piece += "*v" + std::to_string(idx);
    for (const auto& [idx, exp] : k.abos)
      for (int e = 0; e < exp; ++e) piece += "*a" + std::to_string(idx);
    if (!first) out += " + ";
    out += piece;
    first = false;
  }
  return out;
}

}  // namespace superfock
