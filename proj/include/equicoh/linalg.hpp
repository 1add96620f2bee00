#pragma once

#include <utility>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/poly.hpp"
#include "equicoh/uni.hpp"

namespace equicoh {

// Additive Jordan decomposition m = s + n over the rationals.  Requires the
// eigenvalues of m to be rational ("split"); throws NotSplitError otherwise.
// The semisimple part is found by Newton iteration on the squarefree part of
// the characteristic polynomial, so s and n are polynomials in m and commute.
inline std::pair<Matrix<Scalar>, Matrix<Scalar>> jordan_additive(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw Error("jordan decomposition of non-square matrix");
  const int n = m.rows();
  UniPoly p = char_poly(m);
  uni_trim(p);
  UniPoly q = uni_squarefree_part(p);
  auto roots = rational_roots(q);
  if (!roots)
    throw NotSplitError("matrix has irrational eigenvalues; semisimple part not split over Q");
  Matrix<Scalar> z = m;
  UniPoly dq = uni_derivative(q);
  for (int iter = 0; iter <= n + 1; ++iter) {
    Matrix<Scalar> qat = uni_eval_matrix(q, z);
    if (qat.is_zero()) break;
    Matrix<Scalar> dqat = uni_eval_matrix(dq, z);
    auto inv = invert_matrix(dqat);
    if (!inv) throw Error("jordan decomposition: derivative not invertible");
    z = z - qat * *inv;
  }
  if (!uni_eval_matrix(q, z).is_zero())
    throw Error("jordan decomposition: Newton iteration failed to converge");
  Matrix<Scalar> nil = m - z;
  Matrix<Scalar> pw = nil;
  for (int i = 1; i < n; ++i) pw = pw * nil;
  if (!pw.is_zero()) throw Error("jordan decomposition: residual part is not nilpotent");
  if (z * nil != nil * z) throw Error("jordan decomposition: parts do not commute");
  return {z, nil};
}

// Solves A x = b exactly over the fraction field of the polynomial ring, by
// Cramer's rule with fraction-free (Bareiss) determinants.  Entries of the
// solution come back as reduced numerator/denominator pairs.  An identically
// singular system raises SingularSystemError carrying the determinant.
inline std::vector<Fraction> solve_linear_over_fraction_field(const Matrix<MultiPoly>& a,
                                                              const std::vector<MultiPoly>& b) {
  if (a.rows() != a.cols()) throw Error("fraction-field solve requires a square system");
  if (static_cast<int>(b.size()) != a.rows()) throw Error("fraction-field solve: shape mismatch");
  MultiPoly det = bareiss_det(a);
  if (det.is_zero()) throw SingularSystemError(render_poly(det));
  const int n = a.rows();
  std::vector<Fraction> x;
  x.reserve(n);
  for (int col = 0; col < n; ++col) {
    Matrix<MultiPoly> ai = a;
    for (int r = 0; r < n; ++r) ai.at(r, col) = b[r];
    x.emplace_back(bareiss_det(ai), det);
  }
  return x;
}

}  // namespace equicoh
