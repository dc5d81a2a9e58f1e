#include <doctest.h>

#include "superfock/dsl.hpp"
#include "superfock/generators.hpp"
#include "testutil.hpp"

using namespace superfock;
using testutil::Rng;

TEST_SUITE_BEGIN("dsl");

TEST_CASE("basis fields and named expressions") {
  SuperDimension d(1, 1);
  SuperVectorField t = parse_vector_field("d0", d);
  CHECK(t == SuperVectorField::basis(d, 0));

  ParsedExpression e = parse_dsl("xi = exp(i*1*t)*x1*d1 + (1/2)*th1*d2", d);
  REQUIRE(e.name.has_value());
  CHECK(*e.name == "xi");
  REQUIRE(e.is_field());
  SuperVectorField xi = std::get<SuperVectorField>(e.value);
  CHECK(xi.parity() == 0);
  CHECK(xi.component(1) == SuperFunction::coordinate(d, 1) * SuperFunction::fourier(d, 1));
  CHECK(xi.component(2) == SuperFunction::coordinate(d, 2).scaled(Scalar(Rational(1, 2))));
  // The same expression with the odd component on an even direction is the
  // malformed-parity case and must be rejected.
  CHECK_THROWS_AS(parse_dsl("xi = exp(i*1*t)*x1*d1 + (1/2)*th1*d0", d), ParseError);
}

TEST_CASE("odd field parity bookkeeping") {
  SuperDimension d(0, 1);
  SuperVectorField f = parse_vector_field("exp(i*2*t)*th1*d0", d);
  CHECK(f.parity() == 1);
  // A term of the opposite parity on the same field is rejected, with the
  // offending column reported.
  try {
    parse_vector_field("exp(i*2*t)*th1*d0 + d0", d);
    FAIL("expected a parity diagnostic");
  } catch (const ParseError& e) {
    CHECK(e.column == 21);
  }
}

TEST_CASE("syntax errors carry positions") {
  SuperDimension d(1, 0);
  try {
    parse_vector_field("x1*", d);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.column == 4);
  }
  CHECK_THROWS_AS(parse_function("x9", d), ParseError);
  CHECK_THROWS_AS(parse_function("th1", d), ParseError);
  CHECK_THROWS_AS(parse_function("x1 x2", SuperDimension(2, 0)), ParseError);
  CHECK_THROWS_AS(parse_function("exp(i*m*t)", d), ParseError);
  CHECK_THROWS_AS(parse_vector_field("d1*x1", d), ParseError);
}

TEST_CASE("negative fourier modes in both spellings") {
  SuperDimension d(1, 0);
  CHECK(parse_function("exp(-i*2*t)", d) == SuperFunction::fourier(d, -2));
  CHECK(parse_function("exp(i*-2*t)", d) == SuperFunction::fourier(d, -2));
}

TEST_CASE("jet symbols and time powers") {
  SuperDimension d(1, 1);
  CHECK(parse_function("v1", d) == SuperFunction::velocity(d, 1));
  CHECK(parse_function("a2", d) == SuperFunction::acceleration(d, 2));
  CHECK(parse_function("v0", d) == SuperFunction::constant(d, Scalar(1)));
  CHECK(parse_function("a0*x1", d).is_zero());
  SuperFunction t2 = parse_function("x0*x0", d);
  CHECK(t2 == SuperFunction::coordinate(d, 0) * SuperFunction::coordinate(d, 0));
  // The symbolic layer accepts t powers; the Fock builders refuse them.
  OscillatorUniverse u;
  u.dim = d;
  SuperVectorField bad(d, 0);
  bad.set_component(1, t2);
  CHECK_THROWS_AS(vector_field_generator(u, bad), std::invalid_argument);
}

TEST_CASE("printer round-trips canonical forms") {
  Rng rng(31415);
  SuperDimension d(2, 2);
  for (int it = 0; it < 40; ++it) {
    SuperFunction f = testutil::random_function(rng, d, rng.range(0, 1));
    CHECK(parse_function(print_dsl(f), d) == f);
    SuperVectorField xi = testutil::random_field(rng, d, rng.range(0, 1));
    if (xi.is_zero()) continue;
    CHECK(parse_vector_field(print_dsl(xi), d) == xi);
  }
  // Gaussian and tau-carrying coefficients survive the round trip.
  SuperFunction f = SuperFunction::fourier(d, 1).scaled(
      Scalar(GaussianRational(Rational(1, 2), Rational(-3, 4))) * Scalar::tau(-1));
  CHECK(parse_function(print_dsl(f), d) == f);
}

TEST_SUITE_END();
