#include <doctest.h>

#include <sslab/sslab.hpp>

#include "test_util.hpp"

using namespace sslab;

namespace {

IMat make(std::initializer_list<std::initializer_list<long>> rows) {
  IMat m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
  long i = 0;
  for (const auto& r : rows) {
    long j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

void check_snf_contract(const IMat& a) {
  SmithNormalForm s = smith_normal_form(a);
  CHECK(is_unimodular(s.U));
  CHECK(is_unimodular(s.V));
  CHECK(IMat(s.U * a * s.V) == s.D);
  const long r = std::min(a.rows(), a.cols());
  for (long i = 0; i < r; ++i) {
    CHECK(s.D(i, i) >= 0);
    if (i + 1 < r && s.D(i + 1, i + 1) != 0) {
      if (s.D(i, i) == 0) CHECK(s.D(i + 1, i + 1) == 0);
      else CHECK(s.D(i + 1, i + 1) % s.D(i, i) == 0);
    }
  }
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  if (a.rows() == a.cols()) {
    Int prod = 1;
    for (long i = 0; i < r; ++i) prod *= s.D(i, i);
    CHECK(prod == abs(determinant(a)));
  }
}

}  // namespace

TEST_CASE("hand-reduced Smith forms") {
  {
    SmithNormalForm s = smith_normal_form(make({{2, 2}}));
    CHECK(s.D(0, 0) == 2);
    CHECK(s.D(0, 1) == 0);
    CHECK(IMat(s.U * make({{2, 2}}) * s.V) == s.D);
  }
  {
    IMat id = IMat::Identity(4, 4);
    CHECK(smith_normal_form(id).D == id);
  }
  {
    SmithNormalForm s = smith_normal_form(make({{2, 0}, {1, 2}}));
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 4);
  }
}

TEST_CASE("empty and degenerate shapes") {
  IMat none(0, 3);
  CokernelDecomposition c = cokernel(none);
  CHECK(c.group == AbelianGroup::free(3));
  IMat zero = IMat::Zero(2, 2);
  CHECK(abelian_group_of(zero) == AbelianGroup::free(2));
}

TEST_CASE("random SNF contract and minor-gcd oracle") {
  auto gen = testutil::rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    long rows = testutil::rand_in(gen, 1, 5), cols = testutil::rand_in(gen, 1, 5);
    IMat a = testutil::random_matrix(gen, rows, cols, 12);
    check_snf_contract(a);
    if (rows <= 4 && cols <= 4) {
      SmithNormalForm s = smith_normal_form(a);
      std::vector<Int> oracle = testutil::minor_gcd_invariant_factors(a);
      for (size_t i = 0; i < oracle.size(); ++i) CHECK(s.D(static_cast<long>(i), static_cast<long>(i)) == oracle[i]);
    }
  }
}

TEST_CASE("cokernel free and torsion coordinates") {
  // <a, b | 2a + 2b> = Z + Z/2
  IMat rel = make({{2, 2}});
  CokernelDecomposition c = cokernel(rel);
  CHECK(c.group == AbelianGroup(1, {2}));
  IVec a = IVec::Zero(2), b = IVec::Zero(2), ab = IVec::Zero(2);
  a(0) = 1;
  b(1) = 1;
  ab(0) = 1;
  ab(1) = 1;
  CHECK_FALSE(c.is_torsion(a));
  CHECK_FALSE(c.is_torsion(b));
  CHECK(c.is_torsion(ab));
}

TEST_CASE("determinant by Bareiss") {
  CHECK(determinant(make({{2, 0}, {1, 2}})) == 4);
  CHECK(determinant(make({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(IMat::Zero(3, 3)) == 0);
  auto gen = testutil::rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    IMat a = testutil::random_matrix(gen, 3, 3, 8);
    // expansion by minors as an independent check
    Int d = 0;
    for (int j = 0; j < 3; ++j) {
      IMat sub(2, 2);
      int cc = 0;
      for (int c = 0; c < 3; ++c) {
        if (c == j) continue;
        sub(0, cc) = a(1, c);
        sub(1, cc) = a(2, c);
        ++cc;
      }
      Int cof = a(0, j) * (sub(0, 0) * sub(1, 1) - sub(0, 1) * sub(1, 0));
      d += (j % 2 == 0) ? cof : Int(-cof);
    }
    CHECK(determinant(a) == d);
  }
}
