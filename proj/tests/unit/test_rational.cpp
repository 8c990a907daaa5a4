#include <doctest.h>

#include "rkstab/rational.hpp"

using namespace rkstab;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational(" 22/7 ") == Rational(Integer(22), Integer(7)));
  CHECK(parse_rational("-6/8") == Rational(Integer(-3), Integer(4)));
  CHECK(parse_rational("0.125") == Rational(Integer(1), Integer(8)));
  CHECK(parse_rational("-.5") == Rational(Integer(-1), Integer(2)));
  CHECK(parse_rational("1e3") == 1000);
  CHECK(parse_rational("010/08") == Rational(Integer(5), Integer(4)));
  CHECK(parse_rational("0.0") == 0);
  CHECK(parse_rational("2.5E-1") == Rational(Integer(1), Integer(4)));
}

TEST_CASE("decimal literals convert exactly over a power of ten") {
  const auto value = parse_rational("4.477718303076007e-3");
  CHECK(to_string(value) == "4477718303076007/1000000000000000000");
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "4!", "1/2/3", "e5", "1e", "--1", "1 2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(Rational(Integer(10), Integer(-4))) == "-5/2");
  CHECK(to_string(Rational(Integer(4), Integer(2))) == "2");
  const Rational x(Integer(-119041), Integer(4485456));
  CHECK(parse_rational(to_string(x)) == x);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(12) == 479001600);
  CHECK(inverse_factorial(12) == Rational(Integer(1), Integer(479001600)));
  CHECK(factorial(25).str() == "15511210043330985984000000");
}
