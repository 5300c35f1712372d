#include <random>

#include "doctest.h"
#include "mdenum/poly.hpp"

using namespace mdenum;

namespace {

MDPolynomial v() { return MDPolynomial::atom(Atom::V); }
MDPolynomial x() { return MDPolynomial::atom(Atom::X); }
MDPolynomial y() { return MDPolynomial::atom(Atom::Y); }

// Random homogeneous polynomial of the given grade.
MDPolynomial random_poly(std::mt19937& rng, int grade) {
  MDPolynomial p;
  std::uniform_int_distribution<int> coeff(1, 1000);
  std::uniform_int_distribution<int> terms(0, 6);
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    const int dimers = std::uniform_int_distribution<int>(0, grade / 2)(rng);
    const int nx = std::uniform_int_distribution<int>(0, dimers)(rng);
    p.add_term(grade - 2 * dimers, nx, dimers - nx, coeff(rng));
  }
  return p;
}

Rational atom_value(Atom a, const Rational& v0, const Rational& x0, const Rational& y0) {
  switch (a) {
    case Atom::Zero:
      return 0;
    case Atom::One:
      return 1;
    case Atom::V:
      return v0;
    case Atom::X:
      return x0;
    case Atom::Y:
      return y0;
  }
  return 0;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("poly_add examples") {
    const auto v2 = v().times(Atom::V);
    const auto sum = poly_add(v2, y());
    CHECK(sum.to_string() == "v^2 + y");
    CHECK(sum.grade() == 2);
    CHECK(poly_add(x(), x()).to_string() == "2*x");
    const auto p = poly_add(v2.times(Atom::V).times(Atom::V), x().times(Atom::X));
    CHECK(poly_add(MDPolynomial{}, p) == p);
    CHECK(poly_add(p, MDPolynomial{}) == p);
  }

  TEST_CASE("poly_add rejects mixed grades") {
    CHECK_THROWS_AS(poly_add(v(), x()), std::invalid_argument);
  }

  TEST_CASE("poly_mul_atom examples") {
    CHECK(poly_mul_atom(v(), Atom::V).to_string() == "v^2");
    const auto yy = poly_mul_atom(MDPolynomial::one(), Atom::Y);
    CHECK(yy.to_string() == "y");
    CHECK(yy.grade() == 2);
    const auto p = poly_mul_atom(v().times(Atom::V) + x(), Atom::X);
    CHECK(p.to_string() == "v^2*x + x^2");
    CHECK(p.grade() == 4);
    CHECK(poly_mul_atom(p, Atom::One) == p);
    CHECK(poly_mul_atom(p, Atom::Zero).is_zero());
  }

  TEST_CASE("poly_eval examples") {
    MDPolynomial g;
    g.add_term(4, 0, 0, 1);
    g.add_term(2, 1, 0, 2);
    g.add_term(2, 0, 1, 2);
    g.add_term(0, 2, 0, 1);
    g.add_term(0, 0, 2, 1);
    CHECK(poly_eval(g, 1, 1, 1) == 7);
    const auto h = v().times(Atom::V) + y();
    CHECK(poly_eval(h, 0, 1, 1) == 1);
    CHECK(poly_eval(h, 1, 0, 0) == 1);
    CHECK(poly_eval(h, Rational(1, 2), 3, Rational(2, 3)) == Rational(11, 12));
  }

  TEST_CASE("canonical text order") {
    MDPolynomial g;
    g.add_term(0, 0, 2, 1);
    g.add_term(2, 0, 1, 2);
    g.add_term(0, 2, 0, 1);
    g.add_term(4, 0, 0, 1);
    g.add_term(2, 1, 0, 2);
    CHECK(g.to_string() == "v^4 + 2*v^2*x + 2*v^2*y + x^2 + y^2");
    CHECK(MDPolynomial{}.to_string() == "0");
    CHECK(MDPolynomial::one().to_string() == "1");
    CHECK(MDPolynomial::monomial(0, 0, 0, 5).to_string() == "5");
  }

  TEST_CASE("coefficients and invariants") {
    const auto p = MDPolynomial::monomial(2, 1, 0, 3);
    CHECK(p.coefficient(2, 1, 0) == 3);
    CHECK(p.coefficient(0, 2, 0) == 0);
    CHECK(p.coefficient(1, 1, 0) == 0);
    CHECK(p.well_formed());
    CHECK_THROWS_AS(MDPolynomial::monomial(-1, 0, 0), std::invalid_argument);
  }

  TEST_CASE("homogeneity is preserved by add and mul_atom (randomized)") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
      const int grade = std::uniform_int_distribution<int>(0, 12)(rng);
      const auto a = random_poly(rng, grade);
      const auto b = random_poly(rng, grade);
      const auto sum = a + b;
      REQUIRE(sum.well_formed());
      if (!sum.is_zero()) REQUIRE(sum.grade() == grade);
      for (Atom atom : {Atom::V, Atom::X, Atom::Y, Atom::One}) {
        const auto prod = a.times(atom);
        REQUIRE(prod.well_formed());
        if (!a.is_zero()) REQUIRE(prod.grade() == grade + (atom == Atom::V ? 1 : atom == Atom::One ? 0 : 2));
      }
    }
  }

  TEST_CASE("eval is a semiring homomorphism (randomized)") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> small(0, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
      const int grade = std::uniform_int_distribution<int>(0, 10)(rng);
      const auto a = random_poly(rng, grade);
      const auto b = random_poly(rng, grade);
      Rational v0(small(rng), den(rng));
      Rational x0(small(rng), den(rng));
      Rational y0(small(rng), den(rng));
      v0.canonicalize();
      x0.canonicalize();
      y0.canonicalize();
      REQUIRE(poly_eval(a + b, v0, x0, y0) == poly_eval(a, v0, x0, y0) + poly_eval(b, v0, x0, y0));
      for (Atom atom : {Atom::V, Atom::X, Atom::Y, Atom::One, Atom::Zero}) {
        REQUIRE(poly_eval(a.times(atom), v0, x0, y0) == poly_eval(a, v0, x0, y0) * atom_value(atom, v0, x0, y0));
      }
      REQUIRE(poly_eval(a * b, v0, x0, y0) == poly_eval(a, v0, x0, y0) * poly_eval(b, v0, x0, y0));
    }
  }

  TEST_CASE("matching polynomial text") {
    UniPolynomial p{{1, 4, 2}};
    CHECK(p.to_string() == "1 + 4*z + 2*z^2");
    CHECK(UniPolynomial{{1}}.to_string() == "1");
  }

  TEST_CASE("parse_rational accepts p/q only") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
  }
}
