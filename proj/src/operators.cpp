#include "superfock/operators.hpp"

#include <algorithm>

namespace superfock {

void TrajOperator::add_term(TrajTerm term) {
  if (term.coeff.is_zero()) return;
  int par = 0;
  for (const auto& f : term.factors) {
    int fp = 0;
    switch (f.kind) {
      case ModeKind::Q:
      case ModeKind::P: fp = universe_.dim.deg(f.dir); break;
      case ModeKind::AuxQ:
      case ModeKind::AuxP: fp = f.dir > universe_.aux_bosonic ? 1 : 0; break;
      case ModeKind::Cur: fp = 0; break;
    }
    par += fp;
  }
  if ((par & 1) != parity_)
    throw std::invalid_argument("operator term parity mismatch");
  terms_.push_back(std::move(term));
}

void TrajOperator::add(const TrajOperator& other, const Scalar& scale) {
  if (other.is_zero()) return;
  if (!(universe_ == other.universe_)) throw std::invalid_argument("oscillator universe mismatch");
  if (terms_.empty()) parity_ = other.parity_;
  for (TrajTerm t : other.terms_) {
    t.coeff *= scale;
    add_term(std::move(t));
  }
}

TrajOperator TrajOperator::scaled(const Scalar& c) const {
  TrajOperator r(universe_, parity_);
  if (c.is_zero()) return r;
  for (TrajTerm t : terms_) {
    t.coeff *= c;
    r.terms_.push_back(std::move(t));
  }
  return r;
}

TrajOperator operator+(const TrajOperator& a, const TrajOperator& b) {
  TrajOperator r = a;
  r.add(b);
  return r;
}

TrajOperator operator-(const TrajOperator& a, const TrajOperator& b) {
  TrajOperator r = a;
  r.add(b, Scalar(-1));
  return r;
}

int TrajOperator::mode_bandwidth() const {
  int bw = 0;
  for (const auto& t : terms_)
    bw = std::max(bw, t.total_mode < 0 ? -t.total_mode : t.total_mode);
  return bw;
}

namespace {

ModeKind conjugate_kind(ModeKind k) {
  switch (k) {
    case ModeKind::Q: return ModeKind::P;
    case ModeKind::P: return ModeKind::Q;
    case ModeKind::AuxQ: return ModeKind::AuxP;
    case ModeKind::AuxP: return ModeKind::AuxQ;
    case ModeKind::Cur: return ModeKind::Cur;
  }
  return ModeKind::Q;
}

int creator_max_mode(ModeKind k) {
  return (k == ModeKind::Q || k == ModeKind::AuxQ) ? 0 : -1;
}

// Annihilate one quantum: A |state>, walking the annihilator through the
// sorted creator word with Koszul signs and occupation factors.
void apply_annihilator(const OscillatorUniverse& u, const ModeLabel& a, const FockState& state,
                       const Scalar& coeff, StateVector& out) {
  int sign = 1;
  for (std::size_t j = 0; j < state.occ.size(); ++j) {
    const auto& [c, occ] = state.occ[j];
    Scalar pairing = u.contraction(a, c);
    if (!pairing.is_zero()) {
      Scalar value = coeff * pairing * Scalar(std::int64_t(occ));
      if (sign < 0) value = -value;
      FockState reduced = state;
      if (occ == 1) reduced.occ.erase(reduced.occ.begin() + j);
      else --reduced.occ[j].second;
      accumulate(out, reduced, value);
    }
    if (a.parity && c.parity && (occ & 1)) sign = -sign;
  }
}

// Create one quantum: C |state> with the Koszul sign of moving C from the
// left into its sorted slot. Returns false when a fermionic slot is filled.
bool apply_creator(const OscillatorUniverse&, const ModeLabel& c, FockState& state, int& sign) {
  int crossings = 0;
  std::size_t pos = 0;
  while (pos < state.occ.size() && state.occ[pos].first < c) {
    if (c.parity && state.occ[pos].first.parity && (state.occ[pos].second & 1)) ++crossings;
    ++pos;
  }
  if (pos < state.occ.size() && state.occ[pos].first == c) {
    if (c.parity) return false;
    ++state.occ[pos].second;
  } else {
    state.occ.insert(state.occ.begin() + pos, {c, 1});
  }
  if (crossings & 1) sign = -sign;
  return true;
}

// Apply the normal ordering of a concrete word (in written order) to a
// state. Normal ordering reorders creators to the left with the pure Koszul
// sign; no contractions are kept, per the definition of :...:.
void apply_word(const OscillatorUniverse& u, const std::vector<ModeLabel>& word, Scalar coeff,
                const FockState& state, StateVector& out) {
  std::vector<ModeLabel> creators, annihilators;
  int reorder_sign = 1;
  for (const auto& w : word) {
    if (w.is_creator()) {
      // moving this creator left across the annihilators already seen
      if (w.parity) {
        for (const auto& a : annihilators)
          if (a.parity) reorder_sign = -reorder_sign;
      }
      creators.push_back(w);
    } else {
      annihilators.push_back(w);
    }
  }
  if (reorder_sign < 0) coeff = -coeff;

  StateVector current;
  current.emplace(state, coeff);
  for (auto it = annihilators.rbegin(); it != annihilators.rend(); ++it) {
    StateVector next;
    for (const auto& [s, c] : current) apply_annihilator(u, *it, s, c, next);
    current = std::move(next);
    if (current.empty()) return;
  }
  for (auto it = creators.rbegin(); it != creators.rend(); ++it) {
    StateVector next;
    for (const auto& [s, c] : current) {
      FockState ns = s;
      int sign = 1;
      if (!apply_creator(u, *it, ns, sign)) continue;
      accumulate(next, ns, sign < 0 ? -c : c);
    }
    current = std::move(next);
    if (current.empty()) return;
  }
  for (const auto& [s, c] : current) accumulate(out, s, c);
}

ModeLabel make_label(const OscillatorUniverse& u, const TrajFactor& f, int mode) {
  switch (f.kind) {
    case ModeKind::Q: return u.q(f.dir, mode);
    case ModeKind::P: return u.p(f.dir, mode);
    case ModeKind::AuxQ: return u.aux_q(f.dir, mode);
    case ModeKind::AuxP: return u.aux_p(f.dir, mode);
    case ModeKind::Cur: return u.cur(f.dir, mode);
  }
  throw std::logic_error("bad factor kind");
}

// Recursive enumeration of mode assignments for one term against one state.
void enumerate_modes(const OscillatorUniverse& u, const TrajTerm& term, const FockState& state,
                     std::size_t index, int remaining, int max_state_mode,
                     std::vector<ModeLabel>& word, Scalar coeff, StateVector& out) {
  if (index == term.factors.size()) {
    if (remaining == 0) apply_word(u, word, coeff, state, out);
    return;
  }
  const TrajFactor& f = term.factors[index];
  int rest = int(term.factors.size() - index - 1);

  auto try_mode = [&](int m) {
    if (f.der > 0 && m == 0) return;
    if (f.kind == ModeKind::Cur && m == 0) return;
    Scalar factor_coeff = coeff;
    for (int d = 0; d < f.der; ++d)
      factor_coeff *= Scalar(GaussianRational(Rational(0), Rational(m)));
    word.push_back(make_label(u, f, m));
    enumerate_modes(u, term, state, index + 1, remaining - m, max_state_mode, word,
                    factor_coeff, out);
    word.pop_back();
  };

  if (f.fixed_mode) {
    try_mode(*f.fixed_mode);
    return;
  }

  // Annihilator candidates come from the quanta of the state.
  ModeKind conj = conjugate_kind(f.kind);
  std::vector<int> cands;
  for (const auto& [c, occ] : state.occ) {
    (void)occ;
    if (c.kind != conj || c.dir != f.dir) continue;
    int m = -c.mode;
    if (m > creator_max_mode(f.kind)) cands.push_back(m);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (int m : cands) try_mode(m);

  // Creator candidates are bounded by the remaining mode budget: later
  // factors contribute at most +max_state_mode each (their annihilator cap).
  int hi = creator_max_mode(f.kind);
  int lo = remaining - rest * max_state_mode;
  for (int m = lo; m <= hi; ++m) try_mode(m);
}

}  // namespace

StateVector apply(const TrajOperator& op, const FockState& state) {
  StateVector out;
  int max_mode = 0;
  for (const auto& [label, occ] : state.occ) {
    (void)occ;
    max_mode = std::max(max_mode, label.energy());
  }
  for (const auto& term : op.terms()) {
    std::vector<ModeLabel> word;
    enumerate_modes(op.universe(), term, state, 0, term.total_mode, max_mode, word, term.coeff,
                    out);
  }
  return out;
}

StateVector apply_linear(const TrajOperator& op, const StateVector& v) {
  StateVector out;
  for (const auto& [s, c] : v) {
    StateVector part = apply(op, s);
    accumulate(out, part, c);
  }
  return out;
}

StateVector apply_graded_commutator(const TrajOperator& a, const TrajOperator& b,
                                    const FockState& state) {
  StateVector ab = apply_linear(a, apply(b, state));
  StateVector ba = apply_linear(b, apply(a, state));
  int sign = (a.parity() & b.parity()) ? 1 : -1;
  accumulate(ab, ba, Scalar(sign));
  return ab;
}

Scalar vacuum_expectation(const TrajOperator& op) {
  StateVector v = apply(op, FockState{});
  auto it = v.find(FockState{});
  return it == v.end() ? Scalar() : it->second;
}

bool WindowMatrix::is_zero() const {
  for (const auto& col : columns)
    if (!superfock::is_zero(col)) return false;
  return true;
}

int WindowMatrix::nonzero_entries() const {
  int n = 0;
  for (const auto& col : columns)
    for (const auto& [s, c] : col)
      if (!c.is_zero()) ++n;
  return n;
}

std::string WindowMatrix::first_nonzero(int limit) const {
  std::string out;
  int shown = 0;
  for (std::size_t j = 0; j < columns.size() && shown < limit; ++j) {
    for (const auto& [s, c] : columns[j]) {
      if (c.is_zero()) continue;
      out += "<" + s.str() + "| col " + basis[j].str() + "> = " + c.str() + "; ";
      if (++shown >= limit) break;
    }
  }
  return out;
}

WindowMatrix operator-(const WindowMatrix& a, const WindowMatrix& b) {
  if (a.basis != b.basis) throw std::invalid_argument("window basis mismatch");
  WindowMatrix r;
  r.basis = a.basis;
  r.columns.resize(a.columns.size());
  for (std::size_t j = 0; j < a.columns.size(); ++j) {
    r.columns[j] = a.columns[j];
    accumulate(r.columns[j], b.columns[j], Scalar(-1));
  }
  return r;
}

WindowMatrix window_matrix(const TrajOperator& op, const std::vector<FockState>& basis) {
  WindowMatrix m;
  m.basis = basis;
  m.columns.reserve(basis.size());
  for (const auto& s : basis) m.columns.push_back(apply(op, s));
  return m;
}

}  // namespace superfock
