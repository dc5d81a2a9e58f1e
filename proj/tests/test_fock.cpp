#include <doctest.h>

#include <set>

#include "superfock/generators.hpp"

using namespace superfock;

namespace {

OscillatorUniverse universe(int n, int m) {
  OscillatorUniverse u;
  u.dim = SuperDimension(n, m);
  return u;
}

bool op_equal(const TrajOperator& a, const TrajOperator& b, const std::vector<FockState>& basis) {
  for (const auto& s : basis) {
    StateVector va = apply(a, s);
    accumulate(va, apply(b, s), Scalar(-1));
    if (!is_zero(va)) return false;
  }
  return true;
}

// Brute-force enumeration oracle: independent recursion over all creator
// tuples, deduplicated through a set.
void brute(const OscillatorUniverse& u, std::vector<ModeLabel>& labels, std::size_t i,
           int e_left, int d_left, std::set<std::multiset<std::string>>& out,
           std::multiset<std::string>& cur) {
  out.insert(cur);
  for (std::size_t j = i; j < labels.size(); ++j) {
    const ModeLabel& l = labels[j];
    bool fermionic_used = l.parity && cur.count(l.str());
    if (fermionic_used) continue;
    int e = l.energy(), d = l.mode == 0 ? 1 : 0;
    if (e > e_left || d > d_left) continue;
    cur.insert(l.str());
    brute(u, labels, j, e_left - e, d_left - d, out, cur);
    cur.erase(cur.find(l.str()));
  }
}

}  // namespace

TEST_SUITE_BEGIN("fock");

TEST_CASE("window bases match the stated examples") {
  OscillatorUniverse u10 = universe(1, 0);
  CHECK(enumerate_basis(u10, {0, 0}).size() == 1);

  auto b1 = enumerate_basis(u10, {1, 0});
  REQUIRE(b1.size() == 3);
  CHECK(b1[0] == FockState{});
  // q^1_1 |0> and p_{1,1} |0>
  CHECK(b1[1].occ.size() == 1);
  CHECK(b1[2].occ.size() == 1);

  OscillatorUniverse u01 = universe(0, 1);
  CHECK(enumerate_basis(u01, {1, 1}).size() == 6);
}

TEST_CASE("window bases match a brute-force oracle") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}}) {
    OscillatorUniverse u = universe(n, m);
    Window w{2, 2};
    auto basis = enumerate_basis(u, w);
    std::vector<ModeLabel> labels;
    for (int dir = 1; dir <= u.dim.total(); ++dir) {
      for (int mode = -w.e_max; mode <= 0; ++mode) labels.push_back(u.q(dir, mode));
      for (int mode = -w.e_max; mode <= -1; ++mode) labels.push_back(u.p(dir, mode));
    }
    std::set<std::multiset<std::string>> expect;
    std::multiset<std::string> cur;
    brute(u, labels, 0, w.e_max, w.d_max, expect, cur);
    std::set<std::multiset<std::string>> got;
    for (const auto& s : basis) {
      std::multiset<std::string> key;
      for (const auto& [l, occ] : s.occ)
        for (unsigned k = 0; k < occ; ++k) key.insert(l.str());
      got.insert(key);
    }
    CHECK(got == expect);
    CHECK(got.size() == basis.size());  // no duplicates
  }
}

TEST_CASE("heisenberg pairings hold as operators") {
  OscillatorUniverse u = universe(1, 1);
  auto basis = enumerate_basis(u, {2, 1});
  for (int dir : {1, 2}) {
    for (int m = -2; m <= 2; ++m) {
      for (int n = -2; n <= 2; ++n) {
        TrajOperator pm = p_mode_operator(u, dir, m);
        TrajOperator qn = q_mode_operator(u, dir, n);
        for (const auto& s : basis) {
          StateVector got = apply_graded_commutator(pm, qn, s);
          StateVector want;
          if (m + n == 0) accumulate(want, s, Scalar(1));
          accumulate(got, want, Scalar(-1));
          CHECK(is_zero(got));
        }
        // Different directions never pair.
        TrajOperator qo = q_mode_operator(u, dir == 1 ? 2 : 1, n);
        for (const auto& s : basis) CHECK(is_zero(apply_graded_commutator(pm, qo, s)));
      }
    }
  }
}

TEST_CASE("composite time momentum reproduces the oscillator relations") {
  for (auto [nn, mm] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}}) {
    OscillatorUniverse u = universe(nn, mm);
    auto basis = enumerate_basis(u, {2, 1});
    for (int m = -2; m <= 2; ++m) {
      TrajOperator p0m = p0_mode_operator(u, m);
      for (int n = -2; n <= 2; ++n) {
        for (int dir = 1; dir <= u.dim.total(); ++dir) {
          // [p_{0,m}, q^i_n] = -i (m+n) q^i_{m+n}
          TrajOperator rhs =
              q_mode_operator(u, dir, m + n).scaled(Scalar(GaussianRational(
                  Rational(0), Rational(-(m + n)))));
          for (const auto& s : basis) {
            StateVector got = apply_graded_commutator(p0m, q_mode_operator(u, dir, n), s);
            accumulate(got, apply(rhs, s), Scalar(-1));
            CHECK(is_zero(got));
          }
          // [p_{0,m}, p_{j,n}] = -i n p_{j,m+n}
          TrajOperator rhp = p_mode_operator(u, dir, m + n)
                                 .scaled(Scalar(GaussianRational(Rational(0), Rational(-n))));
          for (const auto& s : basis) {
            StateVector got = apply_graded_commutator(p0m, p_mode_operator(u, dir, n), s);
            accumulate(got, apply(rhp, s), Scalar(-1));
            CHECK(is_zero(got));
          }
        }
      }
      // p_{0,m} is i times the temporal generator at opposite mode.
      TrajOperator probe = temporal_generator(u, -m).scaled(Scalar::i());
      CHECK(op_equal(p0m, probe, basis));
      // [p_{0,m}, p_{0,n}] = i (m - n) p_{0,m+n} up to a central value fixed
      // by the vacuum element: the defect acts as a multiple of the identity.
      for (int n = -2; n <= 2; ++n) {
        TrajOperator p0n = p0_mode_operator(u, n);
        TrajOperator rhs = p0_mode_operator(u, m + n)
                               .scaled(Scalar(GaussianRational(Rational(0), Rational(m - n))));
        StateVector vac = apply_graded_commutator(p0m, p0n, FockState{});
        accumulate(vac, apply(rhs, FockState{}), Scalar(-1));
        Scalar central = vac.count(FockState{}) ? vac.at(FockState{}) : Scalar();
        if (m + n != 0) CHECK(central.is_zero());
        for (const auto& s : basis) {
          StateVector got = apply_graded_commutator(p0m, p0n, s);
          accumulate(got, apply(rhs, s), Scalar(-1));
          accumulate(got, s, -central);
          CHECK(is_zero(got));
        }
      }
    }
  }
}

TEST_CASE("generator terms shift the energy by exactly the fourier mode") {
  OscillatorUniverse u = universe(1, 0);
  SuperVectorField xi(u.dim, 0);
  xi.set_component(1, SuperFunction::coordinate(u.dim, 1) * SuperFunction::fourier(u.dim, 2));
  TrajOperator op = vector_field_generator(u, xi);
  for (const auto& s : enumerate_basis(u, {3, 2})) {
    for (const auto& [out, c] : apply(op, s)) {
      (void)c;
      CHECK(out.energy() == s.energy() + 2);
    }
  }
}

TEST_SUITE_END();
