#include <doctest.h>

#include <sslab/sslab.hpp>

#include "test_util.hpp"

using namespace sslab;

namespace {

Presentation pres(std::vector<std::string> names, std::vector<std::string> relators,
                  std::vector<std::pair<std::string, std::string>> peripherals = {}) {
  std::vector<Word> rel;
  for (const auto& r : relators) rel.push_back(parse_word(r, names));
  std::vector<PeripheralPair> per;
  for (const auto& [mu, lambda] : peripherals)
    per.push_back({parse_word(mu, names), parse_word(lambda, names), ""});
  return Presentation(std::move(names), std::move(rel), std::move(per));
}

}  // namespace

TEST_CASE("word reduction and parsing") {
  std::vector<std::string> names{"a", "b", "t"};
  CHECK(parse_word("aA", names).empty());
  CHECK(parse_word("1", names).empty());
  CHECK(parse_word("[t,ab]", names) ==
        Word::commutator(Word({3}), Word({1, 2})));
  CHECK(format_word(parse_word("aabb", names), names) == "aabb");
  CHECK(format_word(Word({-3, 2, 2}), names) == "Tbb");
  CHECK(parse_word("ab", names).pow(-2L) == parse_word("BABA", names));
  CHECK_THROWS_AS(parse_word("x", names), ParseError);
  // cyclic reduction happens on relators
  Presentation p = pres({"a", "b"}, {"Baab"});
  CHECK(p.relators()[0] == parse_word("aa", {"a", "b"}));
}

TEST_CASE("abelianization examples") {
  CHECK(abelianization(pres({"a", "b"}, {"aabb"})) == AbelianGroup(1, {2}));
  CHECK(abelianization(pres({"a", "b", "t"}, {"aabb", "[t,ab]"})) == AbelianGroup(2, {2}));
  // <a,b,t | ab, t^p (ab)^q> abelianizes to Z + Z/p
  std::vector<std::string> names{"a", "b", "t"};
  for (long p = 2; p <= 9; ++p) {
    Word tp = Word({3}).pow(p) * parse_word("ab", names).pow(3L);
    Presentation gp(names, {parse_word("ab", names), tp});
    CHECK(abelianization(gp) == AbelianGroup(1, {Int(p)}));
  }
}

TEST_CASE("fill_quotient matches the surgery presentations") {
  StandardObjects obj = standard_objects();
  // filling T1 along the fiber slope kills ab
  Presentation fibered = fill_quotient(obj.m_group, 0, Slope(0, 1));
  CHECK(abelianization(fibered) == AbelianGroup::free(2));
  // then T2 along (2,1): Z + Z/4
  CHECK(abelianization(fill_quotient(obj.m_group, 1, Slope(2, 1))) == AbelianGroup(1, {4}));
  // mu-filling on T2 gives back H_1(N)
  CHECK(abelianization(fill_quotient(obj.m_group, 1, Slope(1, 0))) ==
        abelianization(obj.n_group));
  CHECK_THROWS_AS(fill_quotient(obj.m_group, 5, Slope(1, 0)), BadBoundaryIndexError);
}

TEST_CASE("rational longitude") {
  StandardObjects obj = standard_objects();
  CHECK(rational_longitude(obj.n_group, 0) == Slope(0, 1));
  CHECK(rational_longitude(obj.m_group, 0) == Slope(0, 1));
  CHECK(rational_longitude(obj.m_group, 1) == Slope(0, 1));

  // unknot exterior: <t>, mu = t, lambda = 1
  Presentation unknot({"t"}, {}, {{Word({1}), Word(), ""}});
  CHECK(rational_longitude(unknot, 0) == Slope(0, 1));

  // torus knot-like framing where mu itself is torsion
  Presentation torsion_mu({"a", "t"}, {parse_word("aa", {"a", "t"})},
                          {{Word({1}), Word({2}), ""}});
  CHECK(rational_longitude(torsion_mu, 0) == Slope(1, 0));

  // independent peripheral classes: no torsion combination
  Presentation indep({"a", "b"}, {}, {{Word({1}), Word({2}), ""}});
  CHECK_THROWS_AS(rational_longitude(indep, 0), NoTorsionSlopeError);

  // both torsion: not unique
  Presentation both({"a", "b"}, {parse_word("aa", {"a", "b"}), parse_word("bb", {"a", "b"})},
                    {{Word({1}), Word({2}), ""}});
  CHECK_THROWS_AS(rational_longitude(both, 0), NotUniqueError);
}

TEST_CASE("abelianization invariant under Tietze moves") {
  auto gen = testutil::rng(99);
  StandardObjects obj = standard_objects();
  std::vector<Presentation> bases{
      obj.n_group, obj.m_group, pres({"x", "y"}, {"xyxYXY"}),
      pres({"a", "b", "t"}, {"ab", "ttabb"})};
  for (const auto& base : bases) {
    AbelianGroup expected = abelianization(base);
    for (int seq = 0; seq < 25; ++seq) {
      Presentation p = base;
      int moves = static_cast<int>(testutil::rand_in(gen, 1, 10));
      for (int i = 0; i < moves; ++i) p = testutil::tietze_move(gen, p);
      CHECK(abelianization(p) == expected);
    }
  }
}

TEST_CASE("hom_count examples") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.order == 6);
  CHECK(hom_count(pres({"a", "b", "t"}, {"ab", "tt"}), s3) == 24);
  CHECK(hom_count(pres({"x", "y"}, {"[x,y]", "yy"}), s3) == 12);
  CHECK(hom_count(pres({"a", "b", "t"}, {"ab", "tt"}), FiniteGroup::trivial()) == 1);
  CHECK_THROWS_AS(hom_count(pres({"a", "b", "t"}, {"ab"}), s3, Int(10)), TooLargeError);
}

TEST_CASE("hom_count into abelian targets factors through abelianization") {
  // <x,y | xyxY> abelianizes to Z/2 x Z-ish:  2x = 0 with y free? rows (2,0):
  Presentation p({"x", "y"}, {parse_word("xyxY", {"x", "y"})});
  Presentation ab_model({"x", "y"}, {parse_word("xx", {"x", "y"}),
                                     parse_word("[x,y]", {"x", "y"})});
  CHECK(abelianization(p) == abelianization(ab_model));
  for (int n = 2; n <= 6; ++n) {
    FiniteGroup g = FiniteGroup::cyclic(n);
    CHECK(hom_count(p, g) == hom_count(ab_model, g));
  }
}

TEST_CASE("free product formula |G| * #{g : g^p = e}") {
  std::vector<FiniteGroup> targets{FiniteGroup::cyclic(4), FiniteGroup::cyclic(5),
                                   FiniteGroup::symmetric3(), FiniteGroup::dihedral(4),
                                   FiniteGroup::klein_four()};
  for (const auto& g : targets) {
    for (long p = 1; p <= 6; ++p) {
      Presentation fp({"t", "s"}, {Word({2}).pow(p)});
      long roots = 0;
      for (int x = 0; x < g.order; ++x) {
        int y = g.identity;
        for (long i = 0; i < p; ++i) y = g.mul(y, x);
        if (y == g.identity) ++roots;
      }
      CHECK(hom_count(fp, g) == Int(g.order) * roots);
    }
  }
}

TEST_CASE("presentation JSON round trip") {
  StandardObjects obj = standard_objects();
  json j = to_json(obj.m_group);
  Presentation back = presentation_from_json(j);
  CHECK(back.names() == obj.m_group.names());
  CHECK(back.relators() == obj.m_group.relators());
  CHECK(back.peripherals().size() == 2);
  CHECK(back.peripherals()[0].mu == obj.m_group.peripherals()[0].mu);
  CHECK(to_json(back) == j);
  // the documented schema parses
  json doc = json::parse(R"({"generators": ["a","b","t"],
                             "relators": ["aabb", "[t,ab]"],
                             "peripherals": [{"mu":"Tbb","lambda":"ab"},
                                             {"mu":"t","lambda":"ab"}]})");
  Presentation parsed = presentation_from_json(doc);
  CHECK(abelianization(parsed) == AbelianGroup(2, {2}));
}
