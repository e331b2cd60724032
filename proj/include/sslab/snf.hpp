// Smith normal form over Z, with the unimodular transforms recorded, and the
// cokernel machinery built on it (invariant factors, images of classes).
//
// The reduction is the classical one: pull the smallest nonzero entry of the
// working submatrix into the pivot, clear its row and column by division with
// remainder, and when the pivot is lone but fails to divide some remaining
// entry, fold that row in and repeat.  Pivots strictly shrink, so the loop
// terminates with a diagonal satisfying the divisibility chain.
#pragma once

#include <algorithm>
#include <vector>

#include "sslab/abelian.hpp"
#include "sslab/numeric.hpp"

namespace sslab {

struct SmithNormalForm {
  IMat U, D, V;  // U * A * V = D, U and V unimodular, D diagonal, d_i | d_{i+1}
};

inline SmithNormalForm smith_normal_form(const IMat& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithNormalForm s{IMat::Identity(m, m), a, IMat::Identity(n, n)};
  IMat& U = s.U;
  IMat& D = s.D;
  IMat& V = s.V;
  const Eigen::Index kmax = std::min(m, n);

  for (Eigen::Index k = 0; k < kmax; ++k) {
    bool tail_is_zero = false;
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = k; i < m; ++i)
        for (Eigen::Index j = k; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        tail_is_zero = true;
        break;
      }
      if (pi != k) {
        D.row(pi).swap(D.row(k));
        U.row(pi).swap(U.row(k));
      }
      if (pj != k) {
        D.col(pj).swap(D.col(k));
        V.col(pj).swap(V.col(k));
      }

      bool clean = true;
      for (Eigen::Index i = k + 1; i < m; ++i) {
        if (D(i, k) == 0) continue;
        Int q = D(i, k) / D(k, k);  // truncated quotient
        if (q != 0) {
          D.row(i) -= D.row(k) * q;
          U.row(i) -= U.row(k) * q;
        }
        if (D(i, k) != 0) clean = false;
      }
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (D(k, j) == 0) continue;
        Int q = D(k, j) / D(k, k);
        if (q != 0) {
          D.col(j) -= D.col(k) * q;
          V.col(j) -= V.col(k) * q;
        }
        if (D(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      Eigen::Index bi = -1;
      for (Eigen::Index i = k + 1; i < m && bi < 0; ++i)
        for (Eigen::Index j = k + 1; j < n; ++j)
          if (D(i, j) % D(k, k) != 0) {
            bi = i;
            break;
          }
      if (bi >= 0) {
        D.row(k) += D.row(bi);
        U.row(k) += U.row(bi);
        continue;
      }
      break;
    }
    if (tail_is_zero) break;
  }

  for (Eigen::Index k = 0; k < kmax; ++k)
    if (D(k, k) < 0) {
      D.row(k) *= Int(-1);
      U.row(k) *= Int(-1);
    }
  return s;
}

/// The cokernel Z^g / rowspace(R) of a relation matrix (rows are relations on
/// g generators), with enough of the transform kept to map classes of
/// generators into the free and torsion coordinates.
struct CokernelDecomposition {
  AbelianGroup group;
  long gens = 0;
  long rank = 0;              // number of nonzero diagonal entries
  IMat transform;             // class coordinates of x are transform * x
  std::vector<Int> diagonal;  // d_0..d_{rank-1}

  /// Image of a class in the free part Z^{gens-rank}.
  IVec free_image(const IVec& x) const {
    IVec y = transform * x;
    return y.segment(rank, gens - rank);
  }

  bool is_torsion(const IVec& x) const {
    IVec f = free_image(x);
    for (Eigen::Index i = 0; i < f.size(); ++i)
      if (f(i) != 0) return false;
    return true;
  }
};

inline CokernelDecomposition cokernel(const IMat& relations) {
  const Eigen::Index g = relations.cols();
  IMat m = relations.transpose();  // g x r, relations as columns
  SmithNormalForm s = smith_normal_form(m);
  CokernelDecomposition c;
  c.gens = g;
  const Eigen::Index dmax = std::min(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < dmax; ++i) {
    if (s.D(i, i) == 0) break;
    c.diagonal.push_back(s.D(i, i));
  }
  c.rank = static_cast<long>(c.diagonal.size());
  c.transform = s.U;
  std::vector<Int> torsion;
  for (const auto& d : c.diagonal)
    if (d >= 2) torsion.push_back(d);
  c.group = AbelianGroup(g - c.rank, std::move(torsion));
  return c;
}

inline AbelianGroup abelian_group_of(const IMat& relations) {
  return cokernel(relations).group;
}

}  // namespace sslab
