#include <doctest.h>

#include <sslab/sslab.hpp>

#include "test_util.hpp"

using namespace sslab;

TEST_CASE("slope normalization") {
  CHECK(Slope(-1, 3) == Slope(1, -3));
  CHECK(Slope(0, -1) == Slope(0, 1));
  CHECK(Slope(3, -4).p() == 3);
  CHECK_THROWS_AS(Slope(2, 4), NonPrimitiveError);
  CHECK_THROWS_AS(Slope(0, 0), ZeroSlopeError);
  CHECK_THROWS_AS(Slope(0, 2), NonPrimitiveError);

  // idempotent and sign-identifying
  Slope s(7, -3);
  CHECK(normalize(s.p(), s.q()) == s);
  CHECK(Slope(-7, 3) == s);
}

TEST_CASE("slope distance") {
  CHECK(distance(Slope(1, 0), Slope(0, 1)) == 1);
  CHECK(distance(Slope(3, 5), Slope(3, 5)) == 0);
  CHECK(distance(Slope(2, 1), Slope(0, 1)) == 2);
  // symmetric
  CHECK(distance(Slope(5, 3), Slope(7, 2)) == distance(Slope(7, 2), Slope(5, 3)));
}

TEST_CASE("distance zero iff equal") {
  auto gen = testutil::rng(11);
  for (int i = 0; i < 200; ++i) {
    Slope a = testutil::random_slope(gen, 12);
    Slope b = testutil::random_slope(gen, 12);
    if (distance(a, b) == 0) CHECK(a == b);
    CHECK(distance(a, a) == 0);
  }
}

TEST_CASE("change of basis") {
  BasisChange id;
  id << Int(1), Int(0), Int(0), Int(1);
  CHECK(change_basis(Slope(1, 0), id) == Slope(1, 0));
  BasisChange swap;
  swap << Int(0), Int(1), Int(1), Int(0);
  CHECK(change_basis(Slope(1, 0), swap) == Slope(0, 1));
  BasisChange bad;
  bad << Int(2), Int(0), Int(0), Int(1);
  CHECK_THROWS_AS(change_basis(Slope(1, 0), bad), NotUnimodularError);
}

TEST_CASE("distance is invariant under simultaneous change of basis") {
  auto gen = testutil::rng(7);
  // the pinned example from the contract
  {
    BasisChange m = testutil::random_unimodular2(gen);
    CHECK(distance(change_basis(Slope(1, 2), m), change_basis(Slope(1, 3), m)) ==
          distance(Slope(1, 2), Slope(1, 3)));
    CHECK(distance(Slope(1, 2), Slope(1, 3)) == 1);
  }
  for (int i = 0; i < 300; ++i) {
    BasisChange m = testutil::random_unimodular2(gen);
    Slope a = testutil::random_slope(gen, 10);
    Slope b = testutil::random_slope(gen, 10);
    CHECK(distance(change_basis(a, m), change_basis(b, m)) == distance(a, b));
  }
}

TEST_CASE("slope parsing and JSON") {
  CHECK(parse_slope("2/1") == Slope(2, 1));
  CHECK(parse_slope("-1/3") == Slope(1, -3));
  CHECK_THROWS_AS(parse_slope("21"), ParseError);
  CHECK_THROWS_AS(parse_slope("a/b"), ParseError);
  Slope s(5, -4);
  CHECK(slope_from_json(to_json(s)) == s);
  CHECK(to_json(s).dump() == "[5,-4]");
}
