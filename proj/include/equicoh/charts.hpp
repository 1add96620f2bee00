#pragma once

#include <string>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/poly.hpp"

namespace equicoh {

enum class ChartKind { Projective, Grassmannian, Flag, BottSamelson };

enum class Bundle { TautologicalSub, TautologicalQuotient };

// Combinatorial fixed-point label.  data: projective -> {i} (0-based
// coordinate line); grassmannian -> ascending k-subset of 1..m; flag ->
// one-line permutation pi(1)..pi(m); bott_samelson -> binary word.
struct FixedPointLabel {
  std::string text;
  std::vector<int> data;
};

// Affine chart around the distinguished fixed point of a built-in variety.
// Coordinate weights are provisional (2) until coordinate_weights fills them
// from a chosen torus element.  labels[0] is always the chart center.
struct Chart {
  ChartKind kind = ChartKind::Projective;
  int ambient = 0;   // size of the matrices the vector field consumes
  int sub_rank = 0;  // tautological sub-bundle rank (projective: 1)
  std::vector<int> word;  // bott_samelson simple-root word, 1-based indices
  std::vector<VarSpec> coordinates;
  std::vector<FixedPointLabel> labels;

  int dim() const { return static_cast<int>(coordinates.size()); }
};

Chart projective_chart(int n);
Chart grassmannian_chart(int k, int m);
Chart flag_chart(int m);
Chart bott_samelson_chart(int ambient, std::vector<int> word);

// Ring holding exactly the chart's coordinates with their current weights.
Ring chart_ring(const Chart& chart);

// Polynomial vector field induced by m on the chart.  One component per
// coordinate, in coordinate order.  `ring` must contain every chart
// coordinate by name (it may contain further variables; m's entries live in
// it or are ring-free constants).
std::vector<MultiPoly> vector_field(const Chart& chart, const Ring& ring,
                                    const Matrix<MultiPoly>& m);
std::vector<MultiPoly> vector_field(const Chart& chart, const Ring& ring,
                                    const Matrix<Scalar>& m);

// Weights a_j read off the field of h (V_j = -a_j x_j); fills them into the
// chart's VarSpecs and returns them.
std::vector<int> coordinate_weights(Chart& chart, const Matrix<Scalar>& h);

// k-th elementary symmetric function of the fiber action A + BX on the
// tautological sub-bundle (projective charts are the rank-1 case).
MultiPoly chern_trace(const Chart& chart, Bundle bundle, int k, const Ring& ring,
                      const Matrix<MultiPoly>& m);

// Chart coordinates of g applied to the fixed point of `label`; exact, over
// Scalar or Fraction entries.  Throws ChartError naming the vanishing minor
// when the moved point leaves the chart.
template <class F>
std::vector<F> fixed_point_coordinates(const Chart& chart, const FixedPointLabel& label,
                                       const Matrix<F>& g) {
  if (g.rows() != chart.ambient || g.cols() != chart.ambient)
    throw Error("fixed-point coordinates: matrix size mismatch");
  switch (chart.kind) {
    case ChartKind::Projective: {
      const int col = label.data.at(0);
      const F& denom = g.at(0, col);
      if (is_zero_elem(denom))
        throw ChartError("homogeneous coordinate 0",
                         "point " + label.text +
                             " moved outside the chart: homogeneous coordinate 0 vanishes");
      std::vector<F> out;
      for (int i = 1; i < chart.ambient; ++i) out.push_back(g.at(i, col) / denom);
      return out;
    }
    case ChartKind::Grassmannian: {
      const int k = chart.sub_rank, m = chart.ambient;
      Matrix<F> top(k, k), bottom(m - k, k);
      for (int j = 0; j < k; ++j) {
        const int src = label.data.at(j) - 1;
        for (int i = 0; i < k; ++i) top.at(i, j) = g.at(i, src);
        for (int i = 0; i < m - k; ++i) bottom.at(i, j) = g.at(k + i, src);
      }
      auto inv = invert_matrix(top);
      if (!inv)
        throw ChartError("top " + std::to_string(k) + "x" + std::to_string(k) + " minor",
                         "point " + label.text +
                             " moved outside the chart: the top minor of the frame vanishes");
      Matrix<F> x = bottom * *inv;
      std::vector<F> out;
      for (int i = 0; i < m - k; ++i)
        for (int j = 0; j < k; ++j) out.push_back(x.at(i, j));
      return out;
    }
    case ChartKind::Flag: {
      const int m = chart.ambient;
      Matrix<F> q(m, m);
      for (int j = 0; j < m; ++j) {
        const int src = label.data.at(j) - 1;
        for (int i = 0; i < m; ++i) q.at(i, j) = g.at(i, src);
      }
      Matrix<F> low = Matrix<F>::identity(m);
      for (int col = 0; col < m; ++col) {
        if (is_zero_elem(q.at(col, col)))
          throw ChartError("leading principal minor " + std::to_string(col + 1),
                           "point " + label.text + " moved outside the chart: leading principal minor " +
                               std::to_string(col + 1) + " vanishes");
        for (int row = col + 1; row < m; ++row) {
          F factor = q.at(row, col) / q.at(col, col);
          low.at(row, col) = factor;
          for (int j2 = col; j2 < m; ++j2) q.at(row, j2) = q.at(row, j2) - factor * q.at(col, j2);
        }
      }
      std::vector<F> out;
      for (int j = 0; j + 1 < m; ++j)
        for (int i = j + 1; i < m; ++i) out.push_back(low.at(i, j));
      return out;
    }
    case ChartKind::BottSamelson:
      throw Error("bott-samelson charts do not support the matrix action");
  }
  throw Error("unreachable chart kind");
}

}  // namespace equicoh
