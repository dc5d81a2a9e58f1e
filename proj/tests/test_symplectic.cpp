#include <doctest.h>

#include "superfock/symplectic.hpp"
#include "testutil.hpp"

using namespace superfock;
using testutil::Rng;

namespace {

// Fourier basis functions of the (1|1) and (1|2) contact algebras:
//   ell_m = (1/2i) e^{imt},  g_m = theta e^{imt},
//   t_m = i theta thetabar e^{imt},  gbar_m = thetabar e^{imt}.
SuperFunction ell(SuperDimension d, int m) {
  return SuperFunction::fourier(d, m).scaled(Scalar(GaussianRational(Rational(0), Rational(-1, 2))));
}
SuperFunction gfun(SuperDimension d, int m) {
  return SuperFunction::coordinate(d, 1) * SuperFunction::fourier(d, m);
}
SuperFunction gbar(SuperDimension d, int m) {
  return SuperFunction::coordinate(d, 2) * SuperFunction::fourier(d, m);
}
SuperFunction tfun(SuperDimension d, int m) {
  return (SuperFunction::coordinate(d, 1) * SuperFunction::coordinate(d, 2) *
          SuperFunction::fourier(d, m)).scaled(Scalar::i());
}

}  // namespace

TEST_SUITE_BEGIN("symplectic");

TEST_CASE("poisson pairings of the contact data") {
  SymplecticData k11 = SymplecticData::contact_k11();
  SuperFunction th = SuperFunction::coordinate(k11.dim(), 1);
  CHECK(poisson_bracket(th, th, k11) == SuperFunction::constant(k11.dim(), Scalar::i()));
  SuperFunction one = SuperFunction::constant(k11.dim(), Scalar(1));
  CHECK(poisson_bracket(one, th, k11).is_zero());

  SymplecticData k12 = SymplecticData::contact_k12();
  SuperFunction thb = SuperFunction::coordinate(k12.dim(), 2);
  SuperFunction th2 = SuperFunction::coordinate(k12.dim(), 1);
  CHECK(poisson_bracket(th2, thb, k12) == SuperFunction::constant(k12.dim(), Scalar::i()));
  CHECK(poisson_bracket(thb, th2, k12) == SuperFunction::constant(k12.dim(), Scalar::i()));
  CHECK(poisson_bracket(th2, th2, k12).is_zero());
}

TEST_CASE("hamiltonian fields") {
  SymplecticData k11 = SymplecticData::contact_k11();
  SuperFunction c = SuperFunction::constant(k11.dim(), Scalar(Rational(7, 3)));
  CHECK(hamiltonian_field(c, k11).is_zero());

  // H_theta = i d_theta for omega^{11} = i.
  SuperFunction th = SuperFunction::coordinate(k11.dim(), 1);
  SuperVectorField h = hamiltonian_field(th, k11);
  SuperVectorField want(k11.dim(), 1);
  want.set_component(1, SuperFunction::constant(k11.dim(), Scalar::i()));
  CHECK(h == want);

  // Bosonic Darboux pair: H_{x^1} = d_2.
  SymplecticData dar = SymplecticData::bosonic_darboux(1);
  SuperVectorField hx = hamiltonian_field(SuperFunction::coordinate(dar.dim(), 1), dar);
  CHECK(hx == SuperVectorField::basis(dar.dim(), 2));
}

TEST_CASE("hamiltonian fields are divergence free and bracket-compatible") {
  SymplecticData k12 = SymplecticData::contact_k12();
  Rng rng(31);
  for (int it = 0; it < 25; ++it) {
    SuperFunction f = testutil::random_function(rng, k12.dim(), rng.range(0, 1));
    SuperFunction g = testutil::random_function(rng, k12.dim(), rng.range(0, 1));
    CHECK(divergence(hamiltonian_field(f, k12)).is_zero());
    SuperVectorField lhs = lie_bracket(hamiltonian_field(f, k12), hamiltonian_field(g, k12));
    CHECK(lhs == hamiltonian_field(poisson_bracket(f, g, k12), k12));
  }
}

TEST_CASE("poisson bracket satisfies the superalgebra axioms") {
  // Note the realized graded symmetry is {g,f} = -(-)^{fg}{f,g}; the
  // odd-odd pairing is symmetric, consistent with {theta,theta} = i above.
  SymplecticData w = SymplecticData::contact_k12();
  Rng rng(77);
  auto sgn = [](int a, int b) { return ((a & b) == 1) ? -1 : 1; };
  for (int it = 0; it < 25; ++it) {
    int pf = rng.range(0, 1), pg = rng.range(0, 1), ph = rng.range(0, 1);
    SuperFunction f = testutil::random_function(rng, w.dim(), pf);
    SuperFunction g = testutil::random_function(rng, w.dim(), pg);
    SuperFunction h = testutil::random_function(rng, w.dim(), ph);

    SuperFunction ab = poisson_bracket(f, g, w);
    SuperFunction ba = poisson_bracket(g, f, w);
    CHECK((sgn(pf, pg) < 0 ? ab - ba : ab + ba).is_zero());

    // Leibniz: {f, gh} = {f,g} h + (-)^{fg} g {f,h}.
    SuperFunction lhs = poisson_bracket(f, g * h, w);
    SuperFunction rhs = poisson_bracket(f, g, w) * h;
    SuperFunction tail = g * poisson_bracket(f, h, w);
    rhs += sgn(pf, pg) < 0 ? -tail : tail;
    CHECK(lhs == rhs);

    // Super-Jacobi.
    SuperFunction j = poisson_bracket(f, poisson_bracket(g, h, w), w);
    SuperFunction acc = sgn(pf, ph) < 0 ? -j : j;
    j = poisson_bracket(g, poisson_bracket(h, f, w), w);
    acc += sgn(pg, pf) < 0 ? -j : j;
    j = poisson_bracket(h, poisson_bracket(f, g, w), w);
    acc += sgn(ph, pg) < 0 ? -j : j;
    CHECK(acc.is_zero());
  }
}

TEST_CASE("contact structure constants on (1|1)") {
  SymplecticData w = SymplecticData::contact_k11();
  SuperDimension d = w.dim();
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      CHECK(contact_bracket(ell(d, m), ell(d, n), w) == ell(d, m + n).scaled(Scalar(n - m)));
      CHECK(contact_bracket(ell(d, m), gfun(d, n), w) ==
            gfun(d, m + n).scaled(Scalar(Rational(2 * n - m, 2))));
      CHECK(contact_bracket(gfun(d, m), gfun(d, n), w) == ell(d, m + n).scaled(Scalar(2)));
    }
  }
}

TEST_CASE("contact structure constants on (1|2)") {
  SymplecticData w = SymplecticData::contact_k12();
  SuperDimension d = w.dim();
  for (int m = -2; m <= 2; ++m) {
    for (int n = -2; n <= 2; ++n) {
      CHECK(contact_bracket(ell(d, m), ell(d, n), w) == ell(d, m + n).scaled(Scalar(n - m)));
      CHECK(contact_bracket(ell(d, m), tfun(d, n), w) == tfun(d, m + n).scaled(Scalar(n)));
      CHECK(contact_bracket(ell(d, m), gfun(d, n), w) ==
            gfun(d, m + n).scaled(Scalar(Rational(2 * n - m, 2))));
      CHECK(contact_bracket(ell(d, m), gbar(d, n), w) ==
            gbar(d, m + n).scaled(Scalar(Rational(2 * n - m, 2))));
      // {g_m, gbar_n} = 2 ell_{m+n} + (n-m) t_{m+n}
      SuperFunction want = ell(d, m + n).scaled(Scalar(2)) + tfun(d, m + n).scaled(Scalar(n - m));
      CHECK(contact_bracket(gfun(d, m), gbar(d, n), w) == want);
      // {t_m, g_n} = g_{m+n}, {t_m, gbar_n} = -gbar_{m+n} (mode conserving)
      CHECK(contact_bracket(tfun(d, m), gfun(d, n), w) == gfun(d, m + n));
      CHECK(contact_bracket(tfun(d, m), gbar(d, n), w) == -gbar(d, m + n));
      CHECK(contact_bracket(gfun(d, m), gfun(d, n), w).is_zero());
      CHECK(contact_bracket(gbar(d, m), gbar(d, n), w).is_zero());
      CHECK(contact_bracket(tfun(d, m), tfun(d, n), w).is_zero());
    }
  }
}

TEST_CASE("contact vector fields of the (1|1) basis") {
  SymplecticData w = SymplecticData::contact_k11();
  SuperDimension d = w.dim();
  for (int m = -2; m <= 2; ++m) {
    // K(ell_m) = e^{imt}(-i d_t + (m/2) theta d_theta)
    SuperVectorField want(d, 0);
    want.set_component(0, SuperFunction::fourier(d, m).scaled(-Scalar::i()));
    want.set_component(1, (SuperFunction::coordinate(d, 1) * SuperFunction::fourier(d, m))
                              .scaled(Scalar(Rational(m, 2))));
    CHECK(contact_field(ell(d, m), w) == want);

    // K(g_m) = e^{imt}(theta d_t - i d_theta)
    SuperVectorField wantg(d, 1);
    wantg.set_component(0, SuperFunction::coordinate(d, 1) * SuperFunction::fourier(d, m));
    wantg.set_component(1, SuperFunction::fourier(d, m).scaled(-Scalar::i()));
    CHECK(contact_field(gfun(d, m), w) == wantg);
  }
  // K(1) = 2 d_0.
  SuperFunction one = SuperFunction::constant(d, Scalar(1));
  SuperVectorField k1(d, 0);
  k1.set_component(0, SuperFunction::constant(d, Scalar(2)));
  CHECK(contact_field(one, w) == k1);
}

TEST_CASE("contact bracket axioms and field homomorphism") {
  SymplecticData w = SymplecticData::contact_k11();
  Rng rng(404);
  auto sgn = [](int a, int b) { return ((a & b) == 1) ? -1 : 1; };
  for (int it = 0; it < 25; ++it) {
    int pf = rng.range(0, 1), pg = rng.range(0, 1), ph = rng.range(0, 1);
    SuperFunction f = testutil::random_function(rng, w.dim(), pf);
    SuperFunction g = testutil::random_function(rng, w.dim(), pg);
    SuperFunction h = testutil::random_function(rng, w.dim(), ph);

    // Helper identities: d_0 Delta = Delta d_0, Delta(fg) = Delta(f)g + f Delta(g) - 2fg.
    CHECK(delta_of(f, w).derive(0) == delta_of(f.derive(0), w));
    CHECK(delta_of(f * g, w) == delta_of(f, w) * g + f * delta_of(g, w) - (f * g).scaled(Scalar(2)));

    // Modified Leibniz rule with the 2 d_0 f gh correction.
    SuperFunction lhs = contact_bracket(f, g * h, w);
    SuperFunction rhs = contact_bracket(f, g, w) * h;
    SuperFunction tail = g * contact_bracket(f, h, w);
    rhs += sgn(pf, pg) < 0 ? -tail : tail;
    rhs += (f.derive(0) * g * h).scaled(Scalar(2));
    CHECK(lhs == rhs);

    // Super-Jacobi for the contact bracket.
    SuperFunction j = contact_bracket(f, contact_bracket(g, h, w), w);
    SuperFunction acc = sgn(pf, ph) < 0 ? -j : j;
    j = contact_bracket(g, contact_bracket(h, f, w), w);
    acc += sgn(pg, pf) < 0 ? -j : j;
    j = contact_bracket(h, contact_bracket(f, g, w), w);
    acc += sgn(ph, pg) < 0 ? -j : j;
    CHECK(acc.is_zero());

    // [K_f, K_g] = K_{{f,g}_K}.
    SuperVectorField kb = lie_bracket(contact_field(f, w), contact_field(g, w));
    CHECK(kb == contact_field(contact_bracket(f, g, w), w));
  }
}

TEST_CASE("generalized contact direction along a spatial axis") {
  // omega on x^1, x^2; contact direction z = e_3; inputs independent of t.
  SymplecticData w = SymplecticData::from_upper(SuperDimension(3, 0), {{{1, 2}, Scalar(1)}});
  w.set_z({{3, Scalar(1)}}, {{3, Scalar(1)}});
  Rng rng(9);
  testutil::FunctionOptions opt;
  opt.max_fourier = 0;  // keep everything time independent
  for (int it = 0; it < 15; ++it) {
    SuperFunction f = testutil::random_function(rng, w.dim(), 0, opt);
    SuperFunction g = testutil::random_function(rng, w.dim(), 0, opt);
    SuperVectorField kb = lie_bracket(contact_field(f, w), contact_field(g, w));
    CHECK(kb == contact_field(contact_bracket(f, g, w), w));
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("symplectic");

TEST_CASE("contact vector fields of the (1|2) basis") {
  SymplecticData w = SymplecticData::contact_k12();
  SuperDimension d = w.dim();
  SuperFunction th = SuperFunction::coordinate(d, 1);
  SuperFunction thb = SuperFunction::coordinate(d, 2);
  for (int m = -2; m <= 2; ++m) {
    SuperFunction em = SuperFunction::fourier(d, m);
    Scalar im = Scalar(GaussianRational(Rational(0), Rational(m)));

    // K(g_m) = e^{imt}( theta d_t - i d_thb + i m theta thb d_thb )
    SuperVectorField kg = contact_field(th * em, w);
    SuperVectorField want(d, 1);
    want.set_component(0, th * em);
    want.set_component(2, em.scaled(-Scalar::i()) + (th * thb * em).scaled(im));
    CHECK(kg == want);

    // K(t_m) = e^{imt}( theta d_th - thb d_thb ) for t_m = i theta thb e^{imt}
    SuperVectorField kt = contact_field((th * thb * em).scaled(Scalar::i()), w);
    SuperVectorField wt(d, 0);
    wt.set_component(1, th * em);
    wt.set_component(2, -(thb * em));
    CHECK(kt == wt);
  }
  // Field homomorphism on random (1|2) inputs.
  testutil::Rng rng(777);
  for (int it = 0; it < 15; ++it) {
    SuperFunction f = testutil::random_function(rng, d, rng.range(0, 1));
    SuperFunction g = testutil::random_function(rng, d, rng.range(0, 1));
    CHECK(lie_bracket(contact_field(f, w), contact_field(g, w)) ==
          contact_field(contact_bracket(f, g, w), w));
  }
}

TEST_SUITE_END();
