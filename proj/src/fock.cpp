#include "superfock/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace superfock {

std::string ModeLabel::str() const {
  static const char* kind_names[] = {"q", "p", "Q", "P", "J"};
  return std::string(kind_names[int(kind)]) + std::to_string(dir) + "[" +
         std::to_string(mode) + "]";
}

ModeLabel OscillatorUniverse::q(int dir, int mode) const {
  if (dir < 1 || dir > dim.total()) throw std::out_of_range("q direction");
  return {ModeKind::Q, std::uint8_t(dir), std::int16_t(mode), std::uint8_t(dim.deg(dir))};
}

ModeLabel OscillatorUniverse::p(int dir, int mode) const {
  if (dir < 1 || dir > dim.total()) throw std::out_of_range("p direction");
  return {ModeKind::P, std::uint8_t(dir), std::int16_t(mode), std::uint8_t(dim.deg(dir))};
}

ModeLabel OscillatorUniverse::aux_q(int alpha, int mode) const {
  if (alpha < 1 || alpha > aux_bosonic + aux_fermionic) throw std::out_of_range("aux direction");
  return {ModeKind::AuxQ, std::uint8_t(alpha), std::int16_t(mode),
          std::uint8_t(alpha > aux_bosonic ? 1 : 0)};
}

ModeLabel OscillatorUniverse::aux_p(int alpha, int mode) const {
  if (alpha < 1 || alpha > aux_bosonic + aux_fermionic) throw std::out_of_range("aux direction");
  return {ModeKind::AuxP, std::uint8_t(alpha), std::int16_t(mode),
          std::uint8_t(alpha > aux_bosonic ? 1 : 0)};
}

ModeLabel OscillatorUniverse::cur(int a, int mode) const {
  if (a < 1 || a > current_count) throw std::out_of_range("current index");
  return {ModeKind::Cur, std::uint8_t(a), std::int16_t(mode), 0};
}

Scalar OscillatorUniverse::contraction(const ModeLabel& a, const ModeLabel& c) const {
  if (a.dir != c.dir || a.mode + c.mode != 0) return Scalar();
  switch (a.kind) {
    case ModeKind::P:
      // [p_{j,m}, q^i_n] = delta^i_j delta_{m+n,0}
      return c.kind == ModeKind::Q ? Scalar(1) : Scalar();
    case ModeKind::Q:
      // [q^i_m, p_{j,n}] = -(-)^{deg} delta^i_j delta_{m+n,0}
      if (c.kind != ModeKind::P) return Scalar();
      return a.parity ? Scalar(1) : Scalar(-1);
    case ModeKind::AuxP:
      return c.kind == ModeKind::AuxQ ? Scalar(1) : Scalar();
    case ModeKind::AuxQ:
      if (c.kind != ModeKind::AuxP) return Scalar();
      return a.parity ? Scalar(1) : Scalar(-1);
    case ModeKind::Cur:
      // [J_{a,m}, J_{b,n}] = k m delta_{ab} delta_{m+n,0}
      if (c.kind != ModeKind::Cur) return Scalar();
      return current_level * Scalar(a.mode);
  }
  return Scalar();
}

int FockState::energy() const {
  int e = 0;
  for (const auto& [label, occ] : this->occ) e += label.energy() * int(occ);
  return e;
}

int FockState::zero_mode_degree() const {
  int d = 0;
  for (const auto& [label, occ] : this->occ)
    if (label.mode == 0) d += int(occ);
  return d;
}

int FockState::parity() const {
  int p = 0;
  for (const auto& [label, occ] : this->occ) p += label.parity * int(occ);
  return p & 1;
}

std::string FockState::str() const {
  if (occ.empty()) return "|0>";
  std::string out;
  for (const auto& [label, n] : occ) {
    out += label.str();
    if (n > 1) out += "^" + std::to_string(n);
    out += " ";
  }
  return out + "|0>";
}

bool is_zero(const StateVector& v) {
  for (const auto& [s, c] : v)
    if (!c.is_zero()) return false;
  return true;
}

StateVector& accumulate(StateVector& into, const FockState& s, const Scalar& c) {
  if (c.is_zero()) return into;
  auto it = into.find(s);
  if (it == into.end()) { into.emplace(s, c); return into; }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
  return into;
}

StateVector& accumulate(StateVector& into, const StateVector& v, const Scalar& scale) {
  for (const auto& [s, c] : v) accumulate(into, s, c * scale);
  return into;
}

namespace {

void collect_creators(const OscillatorUniverse& u, const Window& w, std::vector<ModeLabel>& out) {
  for (int dir = 1; dir <= u.dim.total(); ++dir) {
    for (int m = -w.e_max; m <= 0; ++m)
      if (m < 0 || w.d_max > 0) out.push_back(u.q(dir, m));
    for (int m = -w.e_max; m <= -1; ++m) out.push_back(u.p(dir, m));
  }
  for (int alpha = 1; alpha <= u.aux_bosonic + u.aux_fermionic; ++alpha) {
    for (int m = -w.e_max; m <= 0; ++m)
      if (m < 0 || w.d_max > 0) out.push_back(u.aux_q(alpha, m));
    for (int m = -w.e_max; m <= -1; ++m) out.push_back(u.aux_p(alpha, m));
  }
  for (int a = 1; a <= u.current_count; ++a)
    for (int m = -w.e_max; m <= -1; ++m) out.push_back(u.cur(a, m));
  std::sort(out.begin(), out.end());
}

void recurse(const std::vector<ModeLabel>& creators, std::size_t next, int e_left, int d_left,
             FockState& partial, std::vector<FockState>& out) {
  out.push_back(partial);
  for (std::size_t i = next; i < creators.size(); ++i) {
    const ModeLabel& c = creators[i];
    int e = c.energy();
    int d = c.mode == 0 ? 1 : 0;
    if (e > e_left || d > d_left) continue;
    int max_occ = c.parity ? 1 : (e > 0 ? e_left / e : d_left);
    for (int n = 1; n <= max_occ; ++n) {
      if (n * e > e_left || n * d > d_left) break;
      partial.occ.emplace_back(c, n);
      recurse(creators, i + 1, e_left - n * e, d_left - n * d, partial, out);
      partial.occ.pop_back();
    }
  }
}

}  // namespace

std::vector<FockState> enumerate_basis(const OscillatorUniverse& u, const Window& w) {
  if (w.e_max < 0 || w.d_max < 0) throw std::invalid_argument("negative window");
  std::vector<ModeLabel> creators;
  collect_creators(u, w, creators);
  std::vector<FockState> out;
  FockState partial;
  recurse(creators, 0, w.e_max, w.d_max, partial, out);
  std::sort(out.begin(), out.end(), [](const FockState& a, const FockState& b) {
    int ea = a.energy(), eb = b.energy();
    if (ea != eb) return ea < eb;
    int da = a.zero_mode_degree(), db = b.zero_mode_degree();
    if (da != db) return da < db;
    return a.occ < b.occ;
  });
  return out;
}

}  // namespace superfock
