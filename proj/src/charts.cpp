#include "equicoh/charts.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace equicoh {

namespace {

std::vector<std::string> grassmannian_names(int k, int m) {
  static const char* letters[] = {"x", "y", "z"};
  if (k > 3) throw Error("grassmannian charts support sub-bundle rank at most 3");
  std::vector<std::string> names;
  for (int i = 1; i <= m - k; ++i)
    for (int j = 0; j < k; ++j) names.push_back(std::string(letters[j]) + std::to_string(i));
  return names;
}

std::string subset_text(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string digits_text(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += std::to_string(v);
  return out;
}

MultiPoly var(const Ring& ring, const std::string& name) { return MultiPoly::variable(ring, name); }

// Type A Cartan pairing alpha_p(h_q).
int cartan_a(int p, int q) {
  if (p == q) return 2;
  if (p - q == 1 || q - p == 1) return -1;
  return 0;
}

}  // namespace

Chart projective_chart(int n) {
  if (n < 1) throw Error("projective chart needs n >= 1");
  Chart c;
  c.kind = ChartKind::Projective;
  c.ambient = n + 1;
  c.sub_rank = 1;
  for (int i = 1; i <= n; ++i) c.coordinates.push_back({"x" + std::to_string(i), 2});
  for (int i = 0; i <= n; ++i) c.labels.push_back({std::to_string(i), {i}});
  return c;
}

Chart grassmannian_chart(int k, int m) {
  if (k < 1 || k >= m) throw Error("grassmannian chart needs 1 <= k < m");
  Chart c;
  c.kind = ChartKind::Grassmannian;
  c.ambient = m;
  c.sub_rank = k;
  for (const auto& name : grassmannian_names(k, m)) c.coordinates.push_back({name, 2});
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    c.labels.push_back({subset_text(subset), subset});
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == m - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  return c;
}

Chart flag_chart(int m) {
  if (m < 2) throw Error("flag chart needs m >= 2");
  Chart c;
  c.kind = ChartKind::Flag;
  c.ambient = m;
  for (int j = 1; j < m; ++j)
    for (int i = j + 1; i <= m; ++i) {
      if (m == 3) {
        static const char* abc[] = {"a", "b", "c"};
        c.coordinates.push_back({abc[c.coordinates.size()], 2});
      } else {
        c.coordinates.push_back({"l" + std::to_string(i) + std::to_string(j), 2});
      }
    }
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    c.labels.push_back({digits_text(perm), perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

Chart bott_samelson_chart(int ambient, std::vector<int> word) {
  if (ambient < 2) throw Error("bott-samelson chart needs ambient rank >= 2");
  for (int w : word)
    if (w < 1 || w >= ambient) throw Error("bott-samelson word entry outside simple-root range");
  Chart c;
  c.kind = ChartKind::BottSamelson;
  c.ambient = ambient;
  c.word = std::move(word);
  const int l = static_cast<int>(c.word.size());
  for (int i = 1; i <= l; ++i) c.coordinates.push_back({"x" + std::to_string(i), 2});
  for (long mask = 0; mask < (1L << l); ++mask) {
    std::vector<int> bits(l);
    for (int pos = 0; pos < l; ++pos) bits[pos] = static_cast<int>((mask >> (l - 1 - pos)) & 1);
    c.labels.push_back({digits_text(bits), bits});
  }
  return c;
}

Ring chart_ring(const Chart& chart) { return make_ring(chart.coordinates); }

std::vector<MultiPoly> vector_field(const Chart& chart, const Ring& ring,
                                    const Matrix<MultiPoly>& m) {
  if (m.rows() != chart.ambient || m.cols() != chart.ambient)
    throw Error("vector field: matrix size does not match the chart");
  if (!m.trace().is_zero()) throw Error("vector field requires a traceless matrix");

  switch (chart.kind) {
    case ChartKind::Projective: {
      const int n = chart.ambient - 1;
      std::vector<MultiPoly> z(chart.ambient);
      z[0] = MultiPoly(1);
      for (int i = 1; i <= n; ++i) z[i] = var(ring, chart.coordinates[i - 1].name);
      std::vector<MultiPoly> mz = m.apply(z);
      std::vector<MultiPoly> out;
      for (int i = 1; i <= n; ++i) out.push_back(mz[i] - z[i] * mz[0]);
      return out;
    }
    case ChartKind::Grassmannian: {
      const int k = chart.sub_rank, n = chart.ambient;
      Matrix<MultiPoly> a = m.submatrix(0, 0, k, k);
      Matrix<MultiPoly> b = m.submatrix(0, k, k, n - k);
      Matrix<MultiPoly> cc = m.submatrix(k, 0, n - k, k);
      Matrix<MultiPoly> d = m.submatrix(k, k, n - k, n - k);
      Matrix<MultiPoly> x(n - k, k);
      for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < k; ++j) x.at(i, j) = var(ring, chart.coordinates[i * k + j].name);
      Matrix<MultiPoly> v = cc + d * x - x * a - x * (b * x);
      std::vector<MultiPoly> out;
      for (int i = 0; i < n - k; ++i)
        for (int j = 0; j < k; ++j) out.push_back(v.at(i, j));
      return out;
    }
    case ChartKind::Flag: {
      const int n = chart.ambient;
      Matrix<MultiPoly> low = Matrix<MultiPoly>::identity(n);
      {
        int idx = 0;
        for (int j = 0; j + 1 < n; ++j)
          for (int i = j + 1; i < n; ++i) low.at(i, j) = var(ring, chart.coordinates[idx++].name);
      }
      // inverse of a unipotent lower-triangular matrix: I - N + N^2 - ...
      Matrix<MultiPoly> nil = low - Matrix<MultiPoly>::identity(n);
      Matrix<MultiPoly> inv = Matrix<MultiPoly>::identity(n);
      Matrix<MultiPoly> power = nil;
      int sign = -1;
      for (int p = 1; p < n; ++p) {
        inv = sign < 0 ? inv - power : inv + power;
        power = power * nil;
        sign = -sign;
      }
      Matrix<MultiPoly> k = inv * (m * low);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) k.at(i, j) = MultiPoly(0);  // keep the strictly lower part
      Matrix<MultiPoly> w = low * k;
      std::vector<MultiPoly> out;
      for (int j = 0; j + 1 < n; ++j)
        for (int i = j + 1; i < n; ++i) out.push_back(w.at(i, j));
      return out;
    }
    case ChartKind::BottSamelson: {
      const int n = chart.ambient;
      const MultiPoly eps = n >= 2 ? m.at(0, 1) : MultiPoly(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const bool superdiag = (j == i + 1);
          if (superdiag ? m.at(i, j) != eps : !m.at(i, j).is_zero())
            throw Error("bott-samelson chart supports only matrices of the form eps*(regular nilpotent) + torus");
        }
      std::vector<MultiPoly> diag(n);
      for (int i = 0; i < n; ++i) diag[i] = m.at(i, i);
      auto alpha = [&](int root) { return diag[root - 1] - diag[root]; };
      const int l = static_cast<int>(chart.word.size());
      std::vector<MultiPoly> xs(l);
      for (int j = 0; j < l; ++j) xs[j] = var(ring, chart.coordinates[j].name);
      std::vector<MultiPoly> out;
      for (int j = 0; j < l; ++j) {
        MultiPoly vj = -(alpha(chart.word[j]) * xs[j]) - eps * xs[j] * xs[j];
        for (int k = 0; k < j; ++k) {
          const int b = cartan_a(chart.word[j], chart.word[k]);
          if (b != 0) vj -= MultiPoly(b) * eps * xs[k] * xs[j];
        }
        out.push_back(vj);
      }
      return out;
    }
  }
  throw Error("unreachable chart kind");
}

std::vector<MultiPoly> vector_field(const Chart& chart, const Ring& ring,
                                    const Matrix<Scalar>& m) {
  return vector_field(chart, ring, m.map([](const Scalar& s) { return MultiPoly(s); }));
}

std::vector<int> coordinate_weights(Chart& chart, const Matrix<Scalar>& h) {
  std::vector<VarSpec> provisional;
  for (const auto& v : chart.coordinates) provisional.push_back({v.name, 2});
  Ring ring = make_ring(provisional);
  std::vector<MultiPoly> field = vector_field(chart, ring, h);
  std::vector<int> weights;
  for (size_t j = 0; j < field.size(); ++j) {
    bool ok = field[j].terms().size() == 1;
    Scalar a = 0;
    if (ok) {
      const auto& [expo, coeff] = *field[j].terms().begin();
      Expo unit(provisional.size(), 0);
      unit[j] = 1;
      ok = expo == unit;
      a = -coeff;
    }
    if (ok) ok = scalar_den(a) == 1 && a > 0;
    if (!ok)
      throw Error("coordinate weights: the field of h is not -a*" + chart.coordinates[j].name +
                  " (coordinates must be positive-weight vectors)");
    weights.push_back(static_cast<int>(scalar_num(a).convert_to<long long>()));
    chart.coordinates[j].weight = weights.back();
  }
  return weights;
}

MultiPoly chern_trace(const Chart& chart, Bundle bundle, int k, const Ring& ring,
                      const Matrix<MultiPoly>& m) {
  if (bundle == Bundle::TautologicalQuotient)
    throw Error("chern trace: only the tautological sub-bundle is supported");
  if (chart.kind != ChartKind::Projective && chart.kind != ChartKind::Grassmannian)
    throw Error("chern trace: supported on projective and grassmannian charts only");
  if (m.rows() != chart.ambient || m.cols() != chart.ambient)
    throw Error("chern trace: matrix size does not match the chart");
  const int rank = chart.sub_rank;
  if (k < 0 || k > rank) throw Error("chern trace: k exceeds the bundle rank");
  if (k == 0) return MultiPoly(1);
  Matrix<MultiPoly> a = m.submatrix(0, 0, rank, rank);
  Matrix<MultiPoly> b = m.submatrix(0, rank, rank, chart.ambient - rank);
  Matrix<MultiPoly> x(chart.ambient - rank, rank);
  for (int i = 0; i < chart.ambient - rank; ++i)
    for (int j = 0; j < rank; ++j) x.at(i, j) = var(ring, chart.coordinates[i * rank + j].name);
  Matrix<MultiPoly> fiber = a + b * x;
  std::vector<MultiPoly> cp = char_poly(fiber);
  MultiPoly ek = cp[rank - k];
  if (k % 2 == 1) ek = -ek;
  return coerce_to(ek, ring);
}

}  // namespace equicoh
