#include <doctest.h>

#include <sslab/sslab.hpp>

#include "test_util.hpp"

using namespace sslab;

TEST_CASE("continued fractions") {
  CHECK(continued_fraction(7, 3) == std::vector<Int>{2, 3});
  CHECK(continued_fraction(1, 0).empty());
  CHECK(continued_fraction(0, 1) == std::vector<Int>{0});
  auto gen = testutil::rng(808);
  for (int i = 0; i < 1000; ++i) {
    long p, q;
    do {
      p = testutil::rand_in(gen, -60, 60);
      q = testutil::rand_in(gen, -60, 60);
    } while (q == 0 || gcd(Int(p), Int(q)) != 1);
    std::vector<Int> cf = continued_fraction(p, q);
    Rat v = evaluate_continued_fraction(cf);
    Rat expected = Rat(Int(p), Int(q));
    expected.canonicalize();
    CHECK(Rat(v) == expected);
    for (size_t k = 1; k < cf.size(); ++k) CHECK(cf[k] >= 1);
  }
}

TEST_CASE("tangles from slopes") {
  RationalTangle inf = tangle_from_slope(Slope(1, 0));
  CHECK(inf.den == 0);
  CHECK(two_bridge(inf).is_unknot());  // the filling recovering the I-bundle

  RationalTangle fiber = tangle_from_slope(Slope(0, 1));
  CHECK(two_bridge(fiber).is_unlink());  // the reducible filling

  RationalTangle t = tangle_from_slope(Slope(7, 3));
  CHECK(t.cf == std::vector<Int>{2, 3});
}

TEST_CASE("two-bridge normalization") {
  CHECK(two_bridge(RationalTangle{3, 1, {}}).str() == "b(3,1)");  // trefoil
  CHECK(two_bridge(RationalTangle{1, 1, {}}).is_unknot());
  CHECK(two_bridge(RationalTangle{0, 1, {}}).is_unlink());
  TwoBridgeLink l = two_bridge(RationalTangle{5, -2, {}});
  CHECK(l.p == 5);
  CHECK(l.q == 3);  // reduced into (0, p)
}

TEST_CASE("double branched covers") {
  CHECK(double_branched_cover(TwoBridgeLink{3, 1}).str() == "L(3,1)");
  CHECK(double_branched_cover(TwoBridgeLink{1, 0}).str() == "S^3");
  CHECK(double_branched_cover(TwoBridgeLink{0, 1}).str() == "S^2 x S^1");
}

TEST_CASE("lens homeomorphism relation") {
  CHECK(lens_homeo_equal(LensSpace{7, 2}, LensSpace{7, 4}));   // 2*4 = 1 mod 7
  CHECK_FALSE(lens_homeo_equal(LensSpace{5, 1}, LensSpace{5, 2}));
  CHECK(lens_homeo_equal(LensSpace{9, 2}, LensSpace{9, 7}));   // -2 mod 9
  CHECK(lens_homeo_equal(LensSpace{12, 5}, LensSpace{12, 5}));
  CHECK_FALSE(lens_homeo_equal(LensSpace{5, 1}, LensSpace{7, 1}));
  CHECK(lens_homeo_equal(LensSpace{0, 1}, LensSpace{0, 1}));
  // section shifts never change the class
  auto gen = testutil::rng(31);
  for (int i = 0; i < 200; ++i) {
    long p = testutil::rand_in(gen, 2, 30);
    long q;
    do {
      q = testutil::rand_in(gen, 1, p - 1);
    } while (gcd(Int(p), Int(q)) != 1);
    long k = testutil::rand_in(gen, -4, 4);
    CHECK(lens_homeo_equal(LensSpace{p, q}, LensSpace{p, q + k * p}));
  }
}

TEST_CASE("tangle route depends only on the slope normal form") {
  auto gen = testutil::rng(77);
  for (int i = 0; i < 200; ++i) {
    Slope s = testutil::random_slope(gen, 40);
    TwoBridgeLink a = two_bridge(tangle_from_slope(s));
    TwoBridgeLink b = two_bridge(tangle_from_slope(Slope(-s.p(), -s.q())));
    CHECK(a.p == b.p);
    CHECK(a.q == b.q);
  }
}

TEST_CASE("covers match the homology orders of the corresponding fillings") {
  StandardObjects obj = standard_objects();
  Presentation fibered = fill_quotient(obj.m_group, 0, Slope(0, 1));
  for (long p = 2; p <= 25; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      LensSpace cover = double_branched_cover(two_bridge(tangle_from_slope(Slope(p, q))));
      AbelianGroup h = abelianization(fill_quotient(fibered, 0, Slope(p, q)));
      CHECK(h == AbelianGroup(1, {Int(p)}));
      CHECK(cover.p == p);
    }
}
