#include <doctest.h>

#include <sslab/sslab.hpp>

#include "test_util.hpp"

using namespace sslab;

namespace {

SeifertClosed closed_s2(long b0, std::vector<SeifertPair> fibers) {
  return SeifertClosed(BaseOrbifold(0, true, 0), Int(b0), std::move(fibers));
}

SeifertClosed random_closed(std::mt19937_64& gen) {
  bool orientable = testutil::rand_in(gen, 0, 1) == 0;
  long genus = orientable ? testutil::rand_in(gen, 0, 2) : testutil::rand_in(gen, 1, 3);
  long pairs = testutil::rand_in(gen, 0, 4);
  std::vector<SeifertPair> fibers;
  for (long i = 0; i < pairs; ++i) {
    long a = testutil::rand_in(gen, 1, 9);
    long b;
    do {
      b = testutil::rand_in(gen, -9, 9);
    } while (gcd(Int(a), Int(b)) != 1);
    fibers.push_back({a, b});
  }
  return SeifertClosed(BaseOrbifold(genus, orientable, 0), Int(testutil::rand_in(gen, -4, 4)),
                       std::move(fibers));
}

}  // namespace

TEST_CASE("base orbifold validation") {
  CHECK_THROWS_AS(BaseOrbifold(0, false, 0), ValidationError);
  BaseOrbifold b(0, true, 0, {Int(3), Int(1), Int(2)});
  CHECK(b.cone_points == std::vector<Int>{2, 3});  // multiplicity 1 dropped, sorted
  CHECK_THROWS_AS(BaseOrbifold(0, true, 0, {Int(0)}), ValidationError);
}

TEST_CASE("fill: the fiber-complement family") {
  StandardObjects obj = standard_objects();

  // mu-filling on T2 recovers the Mobius-base structure on the nose
  FillOutcome back = fill(obj.m_seifert, 1, Slope(1, 0));
  REQUIRE(std::holds_alternative<SeifertBounded>(back));
  CHECK(std::get<SeifertBounded>(back) == obj.n_mobius);

  // distance >= 2 adds a single cone of that order
  for (long n = 2; n <= 6; ++n) {
    FillOutcome out = fill(obj.m_seifert, 1, Slope(n, 1));
    REQUIRE(std::holds_alternative<SeifertBounded>(out));
    const SeifertBounded& m = std::get<SeifertBounded>(out);
    CHECK_FALSE(m.base.orientable);
    CHECK(m.base.genus == 1);
    CHECK(m.base.boundary_count == 1);
    CHECK(m.base.cone_points == std::vector<Int>{Int(n)});

    // second filling closes with the predicted cones
    FillOutcome closed = fill(m, 0, Slope(3, 2));
    REQUIRE(std::holds_alternative<SeifertClosed>(closed));
    std::vector<Int> expected_cones{Int(n), Int(3)};
    std::sort(expected_cones.begin(), expected_cones.end());
    CHECK(std::get<SeifertClosed>(closed).base.cone_points == expected_cones);
    FillOutcome closed1 = fill(m, 0, Slope(1, 2));  // distance-1: no new cone
    REQUIRE(std::holds_alternative<SeifertClosed>(closed1));
    CHECK(std::get<SeifertClosed>(closed1).base.cone_points == std::vector<Int>{Int(n)});
  }

  // fiber-slope filling leaves the calculus
  FillOutcome fiber = fill(obj.m_seifert, 0, Slope(0, 1));
  REQUIRE(std::holds_alternative<FiberFilling>(fiber));
  CHECK(std::get<FiberFilling>(fiber).boundary == 0);
  CHECK(std::get<FiberFilling>(fiber).unfilled == obj.m_seifert);

  CHECK_THROWS_AS(fill(obj.m_seifert, 2, Slope(1, 0)), BadBoundaryIndexError);

  // filling order does not matter after normalization
  FillOutcome ab = fill(std::get<SeifertBounded>(fill(obj.m_seifert, 1, Slope(2, 1))), 0, Slope(3, 1));
  FillOutcome ba = fill(std::get<SeifertBounded>(fill(obj.m_seifert, 0, Slope(3, 1))), 0, Slope(2, 1));
  CHECK(normalize_invariants(std::get<SeifertClosed>(ab)) ==
        normalize_invariants(std::get<SeifertClosed>(ba)));
}

TEST_CASE("normalize_invariants") {
  SeifertClosed a = closed_s2(0, {{2, 3}});
  SeifertClosed na = normalize_invariants(a);
  CHECK(na.b0 == 1);
  CHECK(na.fibers == std::vector<SeifertPair>{{2, 1}});

  SeifertClosed b = closed_s2(-1, {{2, 1}, {2, 1}});
  CHECK(normalize_invariants(b) == b);

  auto gen = testutil::rng(314);
  for (int i = 0; i < 100; ++i) {
    SeifertClosed m = random_closed(gen);
    SeifertClosed n = normalize_invariants(m);
    CHECK(is_normalized(n));
    CHECK(euler_number(n) == euler_number(m));  // exact rational oracle
    CHECK(h1(n) == h1(m));
    CHECK(normalize_invariants(n) == n);
  }
}

TEST_CASE("h1 of closed Seifert data") {
  // prism-type S^2(2,2,n): order 4 regardless of n
  for (long n = 2; n <= 8; ++n) {
    AbelianGroup h = h1(closed_s2(-1, {{2, 1}, {2, 1}, {n, 1}}));
    CHECK(h.free_rank == 0);
    CHECK(h.torsion_order() == 4);
  }
  // lens-type: single pair (p,q) with b0 = 0 has |H_1| = |q|
  CHECK(h1(closed_s2(0, {{3, 5}})) == AbelianGroup(0, {5}));
  CHECK(h1(closed_s2(0, {{5, 3}})) == AbelianGroup(0, {3}));
  // S^2 x S^1 datum
  CHECK(h1(closed_s2(0, {})) == AbelianGroup::free(1));
  // non-orientable bases are always rational homology spheres
  auto gen = testutil::rng(2718);
  for (int i = 0; i < 60; ++i) {
    SeifertClosed m = random_closed(gen);
    if (!m.base.orientable && m.base.genus == 1) CHECK(h1(m).free_rank == 0);
  }
}

TEST_CASE("h1 equals the abelianized standard presentation") {
  auto gen = testutil::rng(161803);
  for (int i = 0; i < 120; ++i) {
    SeifertClosed m = random_closed(gen);
    CHECK(h1(m) == abelianization(seifert_presentation(m)));
  }
}

TEST_CASE("recognize") {
  CHECK(recognize(closed_s2(-1, {{2, 1}, {2, 1}, {3, 1}})).kind == RecognitionKind::Elliptic);
  {
    Recognition r = recognize(normalize_invariants(closed_s2(0, {{5, 3}})));
    CHECK(r.kind == RecognitionKind::Lens);
    CHECK(r.irreducible());
  }
  {
    // RP2 base with two cones: Other, and irreducible
    SeifertClosed m(BaseOrbifold(1, false, 0), 0, {{2, 1}, {3, 1}});
    Recognition r = recognize(m);
    CHECK(r.kind == RecognitionKind::Other);
    CHECK(r.irreducible());
  }
  {
    // S^2 x S^1 in Seifert form: e = 0 with two (2,·) fibers
    Recognition r = recognize(normalize_invariants(closed_s2(-1, {{2, 1}, {2, 1}})));
    CHECK(r.kind == RecognitionKind::Reducible);
    CHECK_FALSE(r.irreducible());
    CHECK(r.lens->p == 0);
  }
  {
    // RP3 # RP3: RP2 base, no cones, euler number zero
    SeifertClosed m(BaseOrbifold(1, false, 0), 0, {});
    Recognition r = recognize(m);
    CHECK(r.kind == RecognitionKind::Reducible);
    CHECK(h1(m) == AbelianGroup(0, {2, 2}));
  }
  CHECK_THROWS_AS(recognize(closed_s2(0, {{2, 3}})), NotNormalizedError);
  // hyperbolic-base example stays Other
  CHECK(recognize(closed_s2(-1, {{3, 1}, {3, 1}, {4, 1}})).kind == RecognitionKind::Other);
}

TEST_CASE("lens recognition against the covering route") {
  for (long p = 2; p <= 25; ++p)
    for (long q = 1; q < p; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      SeifertClosed datum = normalize_invariants(closed_s2(0, {{q, p}}));
      Recognition r = recognize(datum);
      REQUIRE(r.kind == RecognitionKind::Lens);
      CHECK(r.lens->p == p);
      CHECK(lens_homeo_equal(*r.lens, LensSpace{Int(p), Int(q)}));
    }
}

TEST_CASE("declared section changes are homeomorphism-invisible") {
  // Re-declaring the section of the solid-torus boundary shifts slope
  // coordinates (p,q) -> (p, q + kp) and deposits a compensating twist pair;
  // the recognized lens spaces must agree.
  SeifertBounded solid(BaseOrbifold(0, true, 1), {}, {{"T1"}});
  auto gen = testutil::rng(55);
  for (int i = 0; i < 60; ++i) {
    long p = testutil::rand_in(gen, 1, 9);
    long q;
    do {
      q = testutil::rand_in(gen, -9, 9);
    } while (gcd(Int(p), Int(q)) != 1);
    long k = testutil::rand_in(gen, -3, 3);
    SeifertBounded reframed(BaseOrbifold(0, true, 1), {{1, -k}}, {{"T1"}});
    FillOutcome a = fill(solid, 0, Slope(p, q));
    FillOutcome b = fill(reframed, 0, Slope(p, q + k * p));
    REQUIRE(std::holds_alternative<SeifertClosed>(a));
    REQUIRE(std::holds_alternative<SeifertClosed>(b));
    SeifertClosed ca = normalize_invariants(std::get<SeifertClosed>(a));
    SeifertClosed cb = normalize_invariants(std::get<SeifertClosed>(b));
    CHECK(h1(ca) == h1(cb));
    Recognition ra = recognize(ca), rb = recognize(cb);
    CHECK(ra.kind == rb.kind);
    if (ra.lens && rb.lens) CHECK(lens_homeo_equal(*ra.lens, *rb.lens));
  }
}

TEST_CASE("seifert JSON round trips") {
  StandardObjects obj = standard_objects();
  json jb = to_json(obj.n_disk);
  CHECK(bounded_from_json(jb) == obj.n_disk);
  SeifertClosed m = closed_s2(-1, {{2, 1}, {2, 1}, {7, 3}});
  CHECK(closed_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(closed_from_json(json::parse(
                      R"({"base":{"genus":0,"orientable":true,"boundaries":0,"cones":[5]},
                          "b0":0,"fibers":[[2,1]]})")),
                  ValidationError);
}
