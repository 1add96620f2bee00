#pragma once

#include <utility>
#include <vector>

#include "equicoh/linalg.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/poly.hpp"
#include "equicoh/scalar.hpp"

namespace equicoh {

// Principal sl_2 triple inside sl_n, plus torus data.
struct SlContext {
  int n = 0;
  Matrix<Scalar> e, f, h;
  // torus_basis[i] pairs with coordinate v_{i+1}: diag unit at slot i+1,
  // trace-normalized (the Borel-case coordinate convention).
  std::vector<Matrix<Scalar>> torus_basis;
  // roots as ordered index pairs (i, j), i != j: the functional w -> w_i - w_j.
  std::vector<std::pair<int, int>> roots;
};

// Basis of the centralizer of f, with section coordinate degrees.
struct KostantSection {
  std::vector<Matrix<Scalar>> basis;  // b_1..b_{n-1}, ad_h-eigenvalue -2k
  std::vector<int> coordinate_degrees;  // 4, 6, ..., 2n for c_2..c_n
};

template <class R>
Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b - b * a;
}

SlContext principal_triple(int n);

// ad_m as an n^2 x n^2 operator on gl_n (row-major matrix flattening).
Matrix<Scalar> ad_matrix(const Matrix<Scalar>& m);

// True iff the centralizer of m inside sl_n has the minimal dimension n-1.
bool is_regular(const Matrix<Scalar>& m);

KostantSection centralizer_basis(const SlContext& ctx);

// e + c_2 b_1 + ... + c_n b_{n-1} with symbolic (or constant) coefficients.
Matrix<MultiPoly> kostant_point(const SlContext& ctx, const std::vector<MultiPoly>& c);

// Kostant coordinates of a diagonal traceless w: the unique c with
// char_poly(kostant_point(c)) = char_poly(e + w), solved by triangular
// back-substitution on characteristic-polynomial coefficients.
std::vector<MultiPoly> chi(const SlContext& ctx, const std::vector<MultiPoly>& diag);

// Unipotent upper-triangular M_w with M_w w M_w^{-1} = e + w (equivalently
// M w = (e+w) M, which is the linear system actually solved).  Entries are
// reduced fractions in the diagonal entries of w.
Matrix<Fraction> uniform_diagonalizer(const std::vector<MultiPoly>& diag);

// Rational fast path used when sampling: same defining equations, solved by
// the triangular back-substitution they induce.
Matrix<Scalar> uniform_diagonalizer_values(const std::vector<Scalar>& diag);

// Irreducible sl_2 representation on binary forms of degree n: the image of
// [[c, a], [b, -c]], namely a*unit-shift + b*subdiag(k(n+1-k)) + c*diag(n, n-2, ..., -n).
template <class R>
Matrix<R> sym_power_rep(int n, const R& a, const R& b, const R& c) {
  Matrix<R> out(n + 1, n + 1);
  for (int k = 0; k < n; ++k) {
    out.at(k, k + 1) = out.at(k, k + 1) + a;
    out.at(k + 1, k) = out.at(k + 1, k) + b * R((k + 1) * (n - k));
  }
  for (int k = 0; k <= n; ++k) out.at(k, k) = out.at(k, k) + c * R(n - 2 * k);
  return out;
}

// Orbit partition of {0..label_count-1} under the given generator images
// (generator_images[g][x] = image of x).  Each orbit sorted; orbits ordered
// by smallest element.
std::vector<std::vector<int>> weyl_orbits(int label_count,
                                          const std::vector<std::vector<int>>& generator_images);

}  // namespace equicoh
