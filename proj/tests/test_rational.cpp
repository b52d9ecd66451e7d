#include "doctest.h"

#include <hodgecx/rational.hpp>

using namespace hodgecx;

TEST_CASE("rationals are canonical and render as p/q") {
  Rational q = make_rational(6, -8);
  CHECK(numerator(q) == -3);
  CHECK(denominator(q) == 4);
  CHECK(to_string(q) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(*parse_rational("-3/4") == q);
  CHECK(*parse_rational("7") == Rational(7));
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("").has_value());
}

TEST_CASE("gauss rational field operations") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  GaussRational z(Rational(1, 2), Rational(-3));
  GaussRational w = z / z;
  CHECK(w == GaussRational(1));
  CHECK((z * conjugate(z)).im == 0);
}

TEST_CASE("conjugation is an involution fixing exactly the rational subfield") {
  GaussRational z(Rational(2, 3), Rational(5, 7));
  CHECK(conjugate(conjugate(z)) == z);
  CHECK(conjugate(z) != z);
  GaussRational r(Rational(2, 3));
  CHECK(conjugate(r) == r);
}

TEST_CASE("gauss rational string round-trip") {
  for (const char* s : {"0", "1/2", "-2", "1/2+3i", "-2-1/3i", "1i", "-1/5i", "3+1i"}) {
    auto z = parse_gauss_rational(s);
    REQUIRE(z.has_value());
    CHECK(to_string(*z) == s);
  }
}
