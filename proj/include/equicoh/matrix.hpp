#pragma once

#include <optional>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/poly.hpp"
#include "equicoh/scalar.hpp"

namespace equicoh {

inline bool is_zero_elem(const Scalar& x) { return x == 0; }
inline bool is_zero_elem(const MultiPoly& x) { return x.is_zero(); }
inline bool is_zero_elem(const Fraction& x) { return x.is_zero(); }

inline Scalar exact_div(const Scalar& a, const Scalar& b) { return a / b; }
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = poly_divide_exact(a, b);
  if (!q) throw Error("inexact polynomial division in fraction-free elimination");
  return *q;
}

// Dense matrix over an exact ring (Scalar, MultiPoly or Fraction).
template <class R>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, R(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  R& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const R& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] + b.e_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k) out.e_[k] = a.e_[k] - b.e_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (is_zero_elem(a.at(i, k))) continue;
        for (int j = 0; j < b.cols_; ++j) out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    return out;
  }
  Matrix scaled(const R& c) const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * c;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  R trace() const {
    R t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!is_zero_elem(x)) return false;
    return true;
  }

  std::vector<R> apply(const std::vector<R>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
    std::vector<R> out(rows_, R(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i] = out[i] + at(i, j) * v[j];
    return out;
  }

  Matrix submatrix(int r0, int c0, int nr, int nc) const {
    Matrix out(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
    return out;
  }

  template <class F>
  Matrix<std::invoke_result_t<F, const R&>> map(F f) const {
    Matrix<std::invoke_result_t<F, const R&>> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<R> e_;
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }
};

// Characteristic polynomial det(xI - m), ascending coefficients, monic.
// Division-free (Berkowitz), so it works verbatim over polynomial rings.
template <class R>
std::vector<R> char_poly(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw Error("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  std::vector<R> p{R(1)};  // descending coefficients, p[0] on the highest power
  for (int r = 1; r <= n; ++r) {
    std::vector<R> t(r + 1, R(0));
    t[0] = R(1);
    t[1] = R(0) - m.at(r - 1, r - 1);
    std::vector<R> w(r - 1);
    for (int i = 0; i < r - 1; ++i) w[i] = m.at(i, r - 1);
    for (int i = 2; i <= r; ++i) {
      R dot(0);
      for (int k = 0; k < r - 1; ++k) dot = dot + m.at(r - 1, k) * w[k];
      t[i] = R(0) - dot;
      if (i < r) {
        std::vector<R> w2(r - 1, R(0));
        for (int a = 0; a < r - 1; ++a)
          for (int b = 0; b < r - 1; ++b) w2[a] = w2[a] + m.at(a, b) * w[b];
        w = std::move(w2);
      }
    }
    std::vector<R> q(r + 1, R(0));
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < std::min<int>(r, i + 1); ++j)
        if (i - j <= r) q[i] = q[i] + t[i - j] * p[j];
    p = std::move(q);
  }
  std::vector<R> asc(n + 1, R(0));
  for (int i = 0; i <= n; ++i) asc[i] = p[n - i];
  return asc;
}

// Fraction-free determinant (Bareiss).  Requires exact division in R.
template <class R>
R bareiss_det(Matrix<R> a) {
  if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return R(1);
  R prev(1);
  bool negate = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero_elem(a.at(k, k))) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (!is_zero_elem(a.at(r, k))) {
          pivot = r;
          break;
        }
      if (pivot < 0) return R(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = R(0);
    }
    prev = a.at(k, k);
  }
  R det = a.at(n - 1, n - 1);
  return negate ? R(0) - det : det;
}

// Row echelon data over a field, with deterministic pivoting: columns are
// processed left to right and the pivot is the first row (top to bottom)
// holding a nonzero entry.
template <class F>
struct Echelon {
  Matrix<F> reduced;        // fully reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

template <class F>
Echelon<F> reduced_row_echelon(Matrix<F> m) {
  const int rows = m.rows(), cols = m.cols();
  Echelon<F> out;
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < rows; ++r)
      if (!is_zero_elem(m.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    F inv = F(1) / m.at(lead, col);
    for (int j = 0; j < cols; ++j) m.at(lead, j) = m.at(lead, j) * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == lead || is_zero_elem(m.at(r, col))) continue;
      F factor = m.at(r, col);
      for (int j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) - factor * m.at(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = static_cast<int>(out.pivots.size());
  out.reduced = std::move(m);
  return out;
}

template <class F>
int rank_of(const Matrix<F>& m) {
  return reduced_row_echelon(m).rank;
}

// Basis of the right kernel; one vector per free column, in increasing
// column order, with a 1 in the free position.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  Echelon<F> ech = reduced_row_echelon(m);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (size_t r = 0; r < ech.pivots.size(); ++r) pivot_of_col[ech.pivots[r]] = static_cast<int>(r);
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<F> v(cols, F(0));
    v[free] = F(1);
    for (int col = 0; col < cols; ++col) {
      int pr = pivot_of_col[col];
      if (pr >= 0) v[col] = F(0) - ech.reduced.at(pr, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solves A x = b over a field; nullopt when inconsistent.  When the solution
// space is positive-dimensional, returns the representative with all free
// coordinates set to zero.
template <class F>
std::optional<std::vector<F>> solve_field(const Matrix<F>& a, const std::vector<F>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon<F> ech = reduced_row_echelon(std::move(aug));
  for (int p : ech.pivots)
    if (p == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
  std::vector<F> x(a.cols(), F(0));
  for (size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced.at(static_cast<int>(r), a.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> invert_matrix(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw Error("inverse of non-square matrix");
  const int n = a.rows();
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = F(1);
  }
  Echelon<F> ech = reduced_row_echelon(std::move(aug));
  if (ech.rank < n || ech.pivots.back() >= n) return std::nullopt;
  for (int r = 0; r < n; ++r)
    if (ech.pivots[r] != r) return std::nullopt;
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = ech.reduced.at(i, n + j);
  return inv;
}

}  // namespace equicoh
