#include "helpers.hpp"

#include "gwa/orbit.hpp"

using namespace gwa;

TEST_CASE("letter monoid") {
  CHECK(letter_mul('1', 'x') == 'x');
  CHECK(letter_mul('x', 'y') == '0');
  CHECK(letter_mul('y', 'y') == 'y');
  CHECK(letter_mul('0', '1') == '0');
  for (char a : std::string("01xy"))
    for (char b : std::string("01xy")) CHECK(letter_mul(a, b) == letter_mul(b, a));
}

TEST_CASE("word tensor") {
  CHECK(word_tensor("x1x", "1yx") == "xyx");
  CHECK(word_tensor("1x", "1y") == "10");
  CHECK(word_tensor("x1y1", "11") == "x1y1");
  CHECK(word_tensor("x1y1", "1111") == "x1y1");
  // lengths 2 and 4 at p = 2 read cyclically to length 4
  CHECK(word_tensor("1x", "x1y1").size() == 4);
}

TEST_CASE("word shift and periodicity") {
  CHECK(word_shift("x1y1", 2, 0) == "x1y1");
  CHECK(word_shift("x1y1", 2, 2) == "x1y1");
  CHECK(word_shift("x1y1", 2, 1) == "y1x1");
  CHECK_FALSE(word_is_periodic("111", 3));
  CHECK(word_is_periodic("x1x1", 2));
  CHECK_FALSE(word_is_periodic("x1y1", 2));
  CHECK(primitive_period("x1x1x1", 2) == 1);
}

TEST_CASE("canonical shift") {
  CHECK(canonical_shift("x1y1", 2) == std::make_pair(std::string("x1y1"), 0));
  CHECK(canonical_shift("y1x1", 2) == std::make_pair(std::string("x1y1"), 1));
  CHECK(canonical_shift("1111", 2) == std::make_pair(std::string("1111"), 0));
}

TEST_CASE("t parameters") {
  OrbitConfig cfg(3, 3);
  TParam t = TParam::parse("0:1,2:2", 3);
  CHECK(t.e == std::vector<int>{1, 0, 2});
  CHECK(t.str() == "0:1,2:2");
  CHECK(TParam::parse("", 3) == TParam::one(3));
  CHECK(t.is_break(0));
  CHECK(t.is_break(-1));
  CHECK_FALSE(t.is_break(4));
  CHECK(t.breaks() == std::vector<int>{0, 2});
  CHECK((t * TParam::parse("1:1", 3)).str() == "0:1,1:1,2:2");
  CHECK(t.at(cfg, 0).is_zero());
  // t(q) = (q - 1)(q - q^2)^2 is a nonzero element of Q(zeta_3)
  CHECK_FALSE(t.at(cfg, 1).is_zero());
  CHECK_THROWS_AS(TParam::parse("0:1,", 3), ParseError);
}

TEST_CASE("word validity") {
  TParam t = TParam::parse("0:1,2:1", 3);
  CHECK(word_valid(t, "x1x", 3));
  CHECK_FALSE(word_valid(t, "11x", 3));
  CHECK(word_valid(TParam::one(3), "111", 1));
}

TEST_CASE("twist scalar") {
  OrbitConfig cfg(2, 2);
  TParam u = TParam::parse("0:1", 2);
  CHECK(scalar_twist_product(cfg, u, "1x1x", "1x1x").is_one());
  CHECK(scalar_twist_product(cfg, TParam::one(2), "1x1x", "x1x1").is_one());
  // frozen from the explicit-matrix oracle: u(q^1) u(q^3) = (-2)(-2)
  CHECK(scalar_twist_product(cfg, u, "1x1x", "x1x1") == th::Q(2, 4));
}
