#include <doctest.h>

#include "superfock/gauge.hpp"
#include "testutil.hpp"

using namespace superfock;
using testutil::Rng;

namespace {

CurrentConfig u1_config(const Scalar& level) {
  return CurrentConfig{FiniteSuperalgebra::u1(), level};
}

SuperFunction x1(SuperDimension d) { return SuperFunction::coordinate(d, 1); }

}  // namespace

TEST_SUITE_BEGIN("gauge");

TEST_CASE("finite superalgebra checks") {
  CHECK(verify_finite_superalgebra(FiniteSuperalgebra::u1()).ok);
  CHECK(verify_finite_superalgebra(FiniteSuperalgebra::gl11()).ok);

  FiniteSuperalgebra bad = FiniteSuperalgebra::gl11();
  bad.f[0][1][2] += GaussianRational(1);
  AlgebraReport rep = verify_finite_superalgebra(bad);
  REQUIRE_FALSE(rep.ok);
  bool located = false;
  for (const auto& v : rep.violations)
    if (v.identity == "super-jacobi" || v.identity == "graded-antisymmetry") located = true;
  CHECK(located);
}

TEST_CASE("algebra file round trip") {
  std::string text =
      "dim 2\n"
      "name 1 A\n"
      "name 2 B\n"
      "parity 2 odd\n"
      "metric 1 1 = 1\n";
  FiniteSuperalgebra g = parse_algebra_file(text);
  CHECK(g.dim() == 2);
  CHECK(g.parities[1] == 1);
  CHECK(verify_finite_superalgebra(g).ok);
  CHECK_THROWS_WITH_AS(parse_algebra_file("dim 1\nf 1 1 2 = 1\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
}

TEST_CASE("realized current modes satisfy the level pairing") {
  SuperDimension d(1, 0);
  CurrentConfig cfg = u1_config(Scalar(Rational(5, 3)));
  OscillatorUniverse u = current_universe(d, cfg);
  auto basis = enumerate_basis(u, {2, 1});
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      TrajOperator jm(u, 0), jn(u, 0);
      TrajTerm tm;
      tm.coeff = Scalar(1);
      tm.total_mode = m;
      tm.factors.push_back({ModeKind::Cur, 1, 0, m});
      jm.add_term(tm);
      TrajTerm tn = tm;
      tn.total_mode = n;
      tn.factors[0].fixed_mode = n;
      jn.add_term(tn);
      for (const auto& s : basis) {
        StateVector got = apply_graded_commutator(jm, jn, s);
        if (m + n == 0 && m != 0 && n != 0)
          accumulate(got, s, -(cfg.level * Scalar(m)));
        CHECK(is_zero(got));
      }
    }
  }
}

TEST_CASE("cocycle defect for the fourier pair is linear in the level") {
  SuperDimension d(1, 0);
  for (auto lvl : {Scalar(0), Scalar(1), Scalar(Rational(5, 3))}) {
    CurrentConfig cfg = u1_config(lvl);
    OscillatorUniverse u = current_universe(d, cfg);
    CurrentSmearing X = make_smearing(cfg, {SuperFunction::fourier(d, 1)});
    CurrentSmearing Y = make_smearing(cfg, {SuperFunction::fourier(d, -1)});
    CHECK(gauge_cocycle_check(u, X, Y, cfg, {2, 1}).ok);
    // Closed-form value: defect = -k m on the vacuum for X = e^{imt}, Y = e^{-imt}.
    TrajOperator jx = current_generator(u, X, cfg);
    TrajOperator jy = current_generator(u, Y, cfg);
    StateVector v = apply_graded_commutator(jx, jy, FockState{});
    Scalar vac = v.count(FockState{}) ? v.at(FockState{}) : Scalar();
    CHECK(vac == -(lvl * Scalar(1)));
  }
}

TEST_CASE("total-derivative pairs and constants carry no defect") {
  SuperDimension d(1, 0);
  CurrentConfig cfg = u1_config(Scalar(2));
  OscillatorUniverse u = current_universe(d, cfg);
  CurrentSmearing Xx = make_smearing(cfg, {x1(d)});
  CurrentSmearing Yx = make_smearing(cfg, {x1(d)});
  CHECK(gauge_cocycle_check(u, Xx, Yx, cfg, {2, 2}).ok);
  WindowMatrix expected =
      window_matrix(gauge_cocycle_expected(u, Xx, Yx, cfg), enumerate_basis(u, {2, 2}));
  CHECK(expected.is_zero());

  CurrentSmearing c = make_smearing(cfg, {SuperFunction::constant(d, Scalar(1))});
  CurrentSmearing Ym = make_smearing(cfg, {SuperFunction::fourier(d, -1) * x1(d)});
  CHECK(gauge_cocycle_check(u, c, Ym, cfg, {2, 1}).ok);
  CHECK(window_matrix(gauge_cocycle_expected(u, c, Ym, cfg), enumerate_basis(u, {2, 1}))
            .is_zero());
  // Constant smearings give commuting zero-mode charges.
  TrajOperator jc = current_generator(u, c, cfg);
  for (const auto& s : enumerate_basis(u, {2, 1}))
    CHECK(is_zero(apply_graded_commutator(jc, jc, s)));
}

TEST_CASE("intertwining action of vector fields on currents") {
  SuperDimension d(1, 0);
  CurrentConfig cfg = u1_config(Scalar(Rational(3, 2)));
  OscillatorUniverse u = current_universe(d, cfg);

  SuperVectorField xi(d, 0);
  xi.set_component(1, SuperFunction::constant(d, Scalar(1)));  // d_1
  CurrentSmearing Y = make_smearing(cfg, {x1(d)});
  CHECK(gauge_intertwine_check(u, xi, Y, cfg, {2, 1}).ok);

  // Y constant: [L_xi, J_Y] = 0.
  CurrentSmearing c = make_smearing(cfg, {SuperFunction::constant(d, Scalar(1))});
  TrajOperator lx = vector_field_generator(u, xi);
  TrajOperator jc = current_generator(u, c, cfg);
  for (const auto& s : enumerate_basis(u, {2, 1}))
    CHECK(is_zero(apply_graded_commutator(lx, jc, s)));

  // Time-dependent field against a coordinate smearing.
  SuperVectorField eta(d, 0);
  eta.set_component(1, x1(d) * SuperFunction::fourier(d, 1));
  CurrentSmearing Ym = make_smearing(cfg, {x1(d) * SuperFunction::fourier(d, -1)});
  CHECK(gauge_intertwine_check(u, eta, Ym, cfg, {2, 1}).ok);
}

TEST_CASE("symbolic current bracket is graded skew") {
  CurrentConfig cfg{FiniteSuperalgebra::gl11(), Scalar(1)};
  SuperDimension d(1, 1);
  Rng rng(2718);
  for (int it = 0; it < 10; ++it) {
    int px = rng.range(0, 1), py = rng.range(0, 1);
    std::vector<SuperFunction> xs, ys;
    for (int a = 0; a < 4; ++a) {
      int want_x = (px + cfg.algebra.parities[a]) & 1;
      int want_y = (py + cfg.algebra.parities[a]) & 1;
      xs.push_back(testutil::random_function(rng, d, want_x));
      ys.push_back(testutil::random_function(rng, d, want_y));
    }
    CurrentSmearing X = make_smearing(cfg, xs);
    CurrentSmearing Y = make_smearing(cfg, ys);
    CurrentSmearing ab = current_bracket(X, Y, cfg);
    CurrentSmearing ba = current_bracket(Y, X, cfg);
    int sign = (px & py) ? 1 : -1;
    for (int c = 0; c < 4; ++c) {
      SuperFunction want = ba.comps[c].scaled(Scalar(sign));
      CHECK(ab.comps[c] == want);
    }
  }
}

TEST_SUITE_END();
