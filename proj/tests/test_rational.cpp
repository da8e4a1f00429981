#include <doctest.h>

#include "zonelab/rational.hpp"

using namespace zonelab;

TEST_CASE("parsing and printing round-trips in lowest terms") {
  CHECK(rat_to_string(rat_from_string("-3/7")) == "-3/7");
  CHECK(rat_to_string(rat_from_string("5")) == "5");
  CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
  CHECK(rat_to_string(rat_from_string("-4/2")) == "-2");
  CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("bad literals are rejected") {
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact regardless of construction order") {
  Rat a = rat_from_string("1/3");
  Rat b = rat_from_string("1/6");
  CHECK(Rat(a + b) == rat_from_string("1/2"));

  // Sum a large alternating series two different ways.
  Rat forward = 0, backward = 0;
  for (int k = 1; k <= 40; ++k) forward += Rat(k % 2 ? 1 : -1, k);
  for (int k = 40; k >= 1; --k) backward += Rat(k % 2 ? 1 : -1, k);
  CHECK(forward == backward);
}

TEST_CASE("vector serialization") {
  RatVec v = {rat_from_string("1/2"), Rat(-3), Rat(0)};
  CHECK(vec_to_string(v) == "1/2,-3,0");
  CHECK(vec_from_string("1/2,-3,0") == v);
}
