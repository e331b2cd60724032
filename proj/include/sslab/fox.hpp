// Fox free differential calculus and the one-variable Alexander polynomial.
//
// The derivative of a relator is evaluated directly under the augmentation
// H_1 -> H_1/torsion = Z: walking the word left to right, a positive letter
// x_j at prefix u contributes t^phi(u) to column j, a negative letter
// contributes -t^(phi(u)-phi(x_j)).
#pragma once

#include <vector>

#include "sslab/errors.hpp"
#include "sslab/laurent.hpp"
#include "sslab/presentation.hpp"

namespace sslab {

/// The augmentation phi: generators -> Z through H_1 modulo torsion.
/// Requires free rank exactly 1.
inline std::vector<long> augmentation(const Presentation& p) {
  CokernelDecomposition h1 = cokernel(p.relation_matrix());
  if (h1.group.free_rank != 1)
    throw RankNotOneError("alexander polynomial needs H_1 of free rank 1, got " +
                          h1.group.str());
  std::vector<long> phi(static_cast<size_t>(p.gens()));
  for (long j = 0; j < p.gens(); ++j)
    phi[static_cast<size_t>(j)] = to_long(h1.transform(h1.rank, j));
  return phi;
}

inline Mat<LaurentPolynomial> alexander_matrix(const Presentation& p,
                                               const std::vector<long>& phi) {
  Mat<LaurentPolynomial> m(static_cast<Eigen::Index>(p.relators().size()), p.gens());
  m.setZero();
  for (size_t r = 0; r < p.relators().size(); ++r) {
    long prefix = 0;
    for (int l : p.relators()[r].letters()) {
      size_t j = static_cast<size_t>((l > 0 ? l : -l) - 1);
      if (l > 0) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) +=
            LaurentPolynomial::t(prefix);
        prefix += phi[j];
      } else {
        prefix -= phi[j];
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) -=
            LaurentPolynomial::t(prefix);
      }
    }
  }
  return m;
}

namespace detail {

inline LaurentPolynomial laurent_minor(const Mat<LaurentPolynomial>& m,
                                       const std::vector<Eigen::Index>& rows,
                                       const std::vector<Eigen::Index>& cols) {
  if (rows.empty()) return LaurentPolynomial(1);
  if (rows.size() == 1) return m(rows[0], cols[0]);
  LaurentPolynomial det;
  std::vector<Eigen::Index> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    const LaurentPolynomial& pivot = m(rows[0], cols[c]);
    if (pivot.is_zero()) continue;
    std::vector<Eigen::Index> sub_cols;
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != c) sub_cols.push_back(cols[j]);
    LaurentPolynomial term = pivot * laurent_minor(m, sub_rows, sub_cols);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

}  // namespace detail

/// gcd of the maximal minors of the Alexander matrix with one column
/// deleted (the first column whose generator has nonzero augmentation),
/// in Laurent normal form.
inline LaurentPolynomial alexander_polynomial(const Presentation& p) {
  std::vector<long> phi = augmentation(p);
  long drop = -1;
  for (size_t j = 0; j < phi.size(); ++j)
    if (phi[j] != 0) { drop = static_cast<long>(j); break; }
  // phi is surjective onto Z, so some generator has nonzero image.
  Mat<LaurentPolynomial> m = alexander_matrix(p, phi);
  std::vector<Eigen::Index> cols;
  for (long j = 0; j < p.gens(); ++j)
    if (j != drop) cols.push_back(j);
  const size_t size = cols.size();
  const size_t nrows = static_cast<size_t>(m.rows());
  if (size == 0) return LaurentPolynomial(1);
  if (nrows < size) return {};

  LaurentPolynomial g;
  std::vector<Eigen::Index> rows(size);
  std::vector<size_t> pick(size);
  for (size_t i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    for (size_t i = 0; i < size; ++i) rows[i] = static_cast<Eigen::Index>(pick[i]);
    g = laurent_gcd(g, detail::laurent_minor(m, rows, cols));
    // next combination of row indices
    long i = static_cast<long>(size) - 1;
    while (i >= 0 && pick[static_cast<size_t>(i)] == nrows - size + static_cast<size_t>(i)) --i;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
    for (size_t j = static_cast<size_t>(i) + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return g.normal_form();
}

}  // namespace sslab
