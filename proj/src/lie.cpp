#include "equicoh/lie.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace equicoh {

SlContext principal_triple(int n) {
  if (n < 2) throw Error("principal triple requires n >= 2");
  SlContext ctx;
  ctx.n = n;
  ctx.e = Matrix<Scalar>(n, n);
  ctx.f = Matrix<Scalar>(n, n);
  ctx.h = Matrix<Scalar>(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    ctx.e.at(k, k + 1) = 1;
    ctx.f.at(k + 1, k) = Scalar((k + 1) * (n - k - 1));
  }
  for (int k = 0; k < n; ++k) ctx.h.at(k, k) = Scalar(n - 1 - 2 * k);
  if (commutator(ctx.h, ctx.e) != ctx.e.scaled(2) || commutator(ctx.h, ctx.f) != ctx.f.scaled(-2) ||
      commutator(ctx.e, ctx.f) != ctx.h)
    throw Error("principal triple bracket identities failed");
  for (int i = 1; i < n; ++i) {
    Matrix<Scalar> t(n, n);
    for (int k = 0; k < n; ++k) t.at(k, k) = Scalar(-1) / n;
    t.at(i, i) += 1;
    ctx.torus_basis.push_back(std::move(t));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) ctx.roots.emplace_back(i, j);
  return ctx;
}

Matrix<Scalar> ad_matrix(const Matrix<Scalar>& m) {
  const int n = m.rows();
  Matrix<Scalar> ad(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Scalar val = 0;
          if (l == j) val += m.at(i, k);
          if (i == k) val -= m.at(l, j);
          if (val != 0) ad.at(i * n + j, k * n + l) = val;
        }
  return ad;
}

bool is_regular(const Matrix<Scalar>& m) {
  const int n = m.rows();
  if (m.trace() != 0) throw Error("is_regular expects a traceless matrix");
  // Stack ad_m with the trace functional to cut gl_n down to sl_n.
  Matrix<Scalar> sys(n * n + 1, n * n);
  Matrix<Scalar> ad = ad_matrix(m);
  for (int r = 0; r < n * n; ++r)
    for (int c = 0; c < n * n; ++c) sys.at(r, c) = ad.at(r, c);
  for (int d = 0; d < n; ++d) sys.at(n * n, d * n + d) = 1;
  int null_dim = n * n - rank_of(sys);
  return null_dim == n - 1;
}

KostantSection centralizer_basis(const SlContext& ctx) {
  const int n = ctx.n;
  KostantSection out;
  Matrix<Scalar> ad_f = ad_matrix(ctx.f);
  Matrix<Scalar> ad_h = ad_matrix(ctx.h);
  for (int k = 1; k < n; ++k) {
    // [f, X] = 0, [h, X] = -2k X, trace X = 0.
    Matrix<Scalar> sys(2 * n * n + 1, n * n);
    for (int r = 0; r < n * n; ++r)
      for (int c = 0; c < n * n; ++c) {
        sys.at(r, c) = ad_f.at(r, c);
        sys.at(n * n + r, c) = ad_h.at(r, c);
      }
    for (int d = 0; d < n * n; ++d) sys.at(n * n + d, d) += Scalar(2 * k);
    for (int d = 0; d < n; ++d) sys.at(2 * n * n, d * n + d) = 1;
    auto kernel = kernel_basis(sys);
    if (kernel.size() != 1)
      throw Error("centralizer weight space has unexpected dimension");
    Matrix<Scalar> b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b.at(i, j) = kernel[0][i * n + j];
    Scalar pivot = b.at(k, 0);
    if (pivot == 0) throw Error("centralizer basis element vanishes at its pivot entry");
    b = b.scaled(Scalar(1) / pivot);
    if (commutator(ctx.f, b) != Matrix<Scalar>(n, n))
      throw Error("centralizer basis element does not commute with f");
    out.basis.push_back(std::move(b));
    out.coordinate_degrees.push_back(2 * (k + 1));
  }
  return out;
}

Matrix<MultiPoly> kostant_point(const SlContext& ctx, const std::vector<MultiPoly>& c) {
  const int n = ctx.n;
  if (static_cast<int>(c.size()) != n - 1)
    throw Error("kostant_point expects n-1 coordinates");
  KostantSection sec = centralizer_basis(ctx);
  Matrix<MultiPoly> out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly entry = MultiPoly(ctx.e.at(i, j));
      for (int k = 0; k < n - 1; ++k)
        if (sec.basis[k].at(i, j) != 0) entry += c[k] * MultiPoly(sec.basis[k].at(i, j));
      out.at(i, j) = entry;
    }
  return out;
}

std::vector<MultiPoly> chi(const SlContext& ctx, const std::vector<MultiPoly>& diag) {
  const int n = ctx.n;
  if (static_cast<int>(diag.size()) != n) throw Error("chi expects n diagonal entries");
  MultiPoly trace = MultiPoly(0);
  for (const auto& d : diag) trace += d;
  if (!trace.is_zero()) throw Error("chi expects a traceless diagonal");

  // Characteristic polynomial of e + w over the caller's ring.
  Ring wring;
  for (const auto& d : diag)
    if (d.ring()) wring = d.ring();
  Matrix<MultiPoly> ew(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ew.at(i, j) = MultiPoly(ctx.e.at(i, j));
    ew.at(i, i) += diag[i];
  }
  std::vector<MultiPoly> target = char_poly(ew);

  // Characteristic polynomial of the section point over gamma coordinates.
  std::vector<VarSpec> gvars;
  for (int k = 2; k <= n; ++k) gvars.push_back({"g" + std::to_string(k), 2 * k});
  Ring gring = make_ring(gvars);
  std::vector<MultiPoly> gammas;
  for (int k = 0; k < n - 1; ++k) gammas.push_back(MultiPoly::variable(gring, k));
  std::vector<MultiPoly> section_cp = char_poly(kostant_point(ctx, gammas));
  for (auto& coeff : section_cp) coeff = coerce_to(coeff, gring);

  // Solve coefficient by coefficient: the x^{n-k} coefficient is
  // lambda_k * g_k + (terms in g_2..g_{k-1}) with constant lambda_k != 0.
  std::vector<MultiPoly> solved(n - 1);  // images for g_2..g_n in the w-ring
  for (int k = 2; k <= n; ++k) {
    MultiPoly pi = section_cp[n - k];
    MultiPoly lambda = pi.derivative(k - 2);
    if (!lambda.is_constant() || lambda.is_zero())
      throw Error("chi: section characteristic coefficient is not triangular");
    // Substitute already-solved coordinates; unknowns beyond k-1 cannot occur.
    std::vector<MultiPoly> images;
    for (int j = 2; j <= n; ++j) {
      if (j < k)
        images.push_back(solved[j - 2]);
      else
        images.push_back(MultiPoly::constant(wring, 0));
    }
    MultiPoly q = pi;
    {
      // Remove the g_k term before substituting.
      q -= MultiPoly::variable(gring, k - 2) * lambda;
      for (int j = k + 1; j <= n; ++j)
        if (q.depends_on(j - 2)) throw Error("chi: coefficient depends on later coordinates");
    }
    MultiPoly rest = q.substitute(images);
    MultiPoly tk = coerce_to(target[n - k], wring);
    solved[k - 2] = (tk - rest) * MultiPoly(Scalar(1) / lambda.constant_value());
  }
  // Verify the match exactly.
  std::vector<MultiPoly> images(solved.begin(), solved.end());
  for (int k = 0; k <= n; ++k) {
    MultiPoly lhs = section_cp[k].substitute(images);
    if (!(lhs == coerce_to(target[k], wring)))
      throw Error("chi: characteristic polynomials do not match after solving");
  }
  return solved;
}

Matrix<Fraction> uniform_diagonalizer(const std::vector<MultiPoly>& diag) {
  const int n = static_cast<int>(diag.size());
  // Regularity: all pairwise differences must be nonzero.
  std::vector<std::string> vanishing;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((diag[i] - diag[j]).is_zero())
        vanishing.push_back("w" + std::to_string(i + 1) + " - w" + std::to_string(j + 1));
  if (!vanishing.empty()) throw RegularityError(vanishing);

  // Unknowns m_{ij} for i < j, ordered by (i, j); equations
  // (w_j - w_i) m_{ij} - M_{i+1,j} = 0 where M_{jj} = 1.
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) unknowns.emplace_back(i, j);
  auto index_of = [&](int i, int j) {
    for (size_t k = 0; k < unknowns.size(); ++k)
      if (unknowns[k].first == i && unknowns[k].second == j) return static_cast<int>(k);
    throw Error("internal: unknown index");
  };
  const int m = static_cast<int>(unknowns.size());
  Matrix<MultiPoly> a(m, m);
  std::vector<MultiPoly> rhs(m, MultiPoly(0));
  for (int k = 0; k < m; ++k) {
    auto [i, j] = unknowns[k];
    a.at(k, k) = diag[j] - diag[i];
    if (i + 1 == j)
      rhs[k] = MultiPoly(1);
    else
      a.at(k, index_of(i + 1, j)) = MultiPoly(-1);
  }
  std::vector<Fraction> sol = solve_linear_over_fraction_field(a, rhs);
  Matrix<Fraction> mw(n, n);
  for (int i = 0; i < n; ++i) mw.at(i, i) = Fraction(1);
  for (int k = 0; k < m; ++k) mw.at(unknowns[k].first, unknowns[k].second) = sol[k];

  // Verify M w = (e + w) M exactly over the fraction field.
  Matrix<Fraction> w(n, n), ew(n, n);
  for (int i = 0; i < n; ++i) {
    w.at(i, i) = Fraction(diag[i]);
    ew.at(i, i) = Fraction(diag[i]);
    if (i + 1 < n) ew.at(i, i + 1) = Fraction(1);
  }
  if (mw * w != ew * mw) throw Error("uniform diagonalizer verification failed");
  return mw;
}

Matrix<Scalar> uniform_diagonalizer_values(const std::vector<Scalar>& diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<std::string> vanishing;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (diag[i] == diag[j])
        vanishing.push_back("w" + std::to_string(i + 1) + " - w" + std::to_string(j + 1));
  if (!vanishing.empty()) throw RegularityError(vanishing);
  Matrix<Scalar> mw = Matrix<Scalar>::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j - 1; i >= 0; --i) mw.at(i, j) = mw.at(i + 1, j) / (diag[j] - diag[i]);
  return mw;
}

std::vector<std::vector<int>> weyl_orbits(int label_count,
                                          const std::vector<std::vector<int>>& generator_images) {
  std::vector<int> parent(label_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& img : generator_images) {
    if (static_cast<int>(img.size()) != label_count)
      throw Error("weyl_orbits: generator image has wrong size");
    for (int x = 0; x < label_count; ++x) {
      int a = find(x), b = find(img[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> where(label_count, -1);
  for (int x = 0; x < label_count; ++x) {
    int root = find(x);
    if (where[root] < 0) {
      where[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[where[root]].push_back(x);
  }
  return orbits;
}

}  // namespace equicoh
