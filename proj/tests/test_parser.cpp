#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quadrics/form_parser.hpp"

using namespace quadrics;

TEST_CASE("quadratic parsing on the worked examples") {
  Field f3 = Field::make(3);
  auto f = parse_quadratic("x0^2+x1^2-x2^2", 3, f3);
  CHECK(f.coeff(0, 0) == 1);
  CHECK(f.coeff(1, 1) == 1);
  CHECK(f.coeff(2, 2) == 2);  // -1 mod 3
  CHECK(f.coeff(0, 1) == 0);

  CHECK(parse_quadratic("x1*x0", 3, f3) == parse_quadratic("x0*x1", 3, f3));
  CHECK_THROWS_AS(parse_quadratic("x0*x1*x2", 3, f3), ParseError);
}

TEST_CASE("coefficients, signs and whitespace") {
  Field f5 = Field::make(5);
  auto f = parse_quadratic("  2*x0*x1 - 3 * x2^2 + x0 *x0 ", 2, f5);
  CHECK(f.coeff(0, 1) == 2);
  CHECK(f.coeff(2, 2) == 2);  // -3 mod 5
  CHECK(f.coeff(0, 0) == 1);
  // like terms combine; cancellation to zero is rejected
  CHECK(parse_quadratic("x0*x1+x0*x1", 2, f5).coeff(0, 1) == 2);
  CHECK_THROWS_AS(parse_quadratic("x0*x1+4*x0*x1", 2, f5), ParseError);
}

TEST_CASE("extension-field coefficient vectors") {
  Field f4 = Field::make(2, 2);
  auto f = parse_quadratic("[0,1]*x0*x1+x2^2", 2, f4);
  CHECK(f.coeff(0, 1) == f4.from_coeffs(std::vector<int>{0, 1}));
  CHECK(f.coeff(2, 2) == 1);
  CHECK_THROWS_AS(parse_quadratic("[0,1,1]*x0*x1", 2, f4), ParseError);  // too long
}

TEST_CASE("errors carry positions and name the offending term") {
  Field f3 = Field::make(3);
  try {
    parse_quadratic("x0^2+x9*x1", 3, f3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse_form("x0*x1+x2", 3, f3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("x2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_quadratic("", 3, f3), ParseError);
  CHECK_THROWS_AS(parse_quadratic("x0^2 + + x1^2", 3, f3), ParseError);
  CHECK_THROWS_AS(parse_quadratic("3", 3, f3), ParseError);       // degree 0
  CHECK_THROWS_AS(parse_quadratic("x0", 3, f3), ParseError);      // degree 1
  CHECK_THROWS_AS(parse_quadratic("0*x0*x1", 3, f3), ParseError); // zero form
}

TEST_CASE("general forms of degree 1 and 3") {
  Field f2 = Field::make(2);
  auto cubic = parse_form("x0^3+x0*x1*x2+x2^2*x1", 2, f2);
  CHECK(cubic.degree() == 3);
  CHECK(cubic.evaluate_vector(std::vector<Fel>{1, 0, 0}) == 1);
  CHECK(cubic.evaluate_vector(std::vector<Fel>{1, 1, 1}) == 1);  // 1+1+1
  auto lin = parse_form("x0+x1", 2, f2);
  CHECK(lin.degree() == 1);
}

TEST_CASE("print/parse round-trip on random quadratics") {
  std::mt19937_64 rng(13);
  for (int q : {2, 3, 5}) {
    Field f = Field::make(q);
    for (int n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_form(f, n, rng);
        auto text = print_quadratic(g);
        CHECK(parse_quadratic(text, n, f) == g);
      }
  }
  Field f4 = Field::make(2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = oracles::random_form(f4, 2, rng);
    CHECK(parse_quadratic(print_quadratic(g), 2, f4) == g);
  }
}

TEST_CASE("printing uses the canonical term order") {
  Field f3 = Field::make(3);
  CHECK(print_quadratic(parse_quadratic("x2^2+2*x0*x1", 2, f3)) == "2*x0*x1+x2^2");
  CHECK(print_quadratic(parse_quadratic("x0^2+x1^2-x2^2", 2, f3)) == "x0^2+x1^2+2*x2^2");
}

TEST_CASE("quadratic/general conversions agree") {
  Field f3 = Field::make(3);
  auto qf = parse_quadratic("x0^2+2*x1*x2", 2, f3);
  auto gen = Form::from_quadratic(qf);
  CHECK(gen.degree() == 2);
  CHECK(gen.to_quadratic() == qf);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      std::vector<Fel> v{Fel(a), Fel(b), 1};
      CHECK(gen.evaluate_vector(v) == qf.evaluate_vector(v));
    }
}
