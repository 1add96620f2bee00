#include "equicoh/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/lie.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/uni.hpp"

namespace equicoh {

namespace {

std::vector<VarSpec> base_var_specs(GroupForm form, int group_n) {
  switch (form) {
    case GroupForm::Borel:
      if (group_n == 2) return {{"v", 2}};
      else {
        std::vector<VarSpec> out;
        for (int i = 1; i < group_n; ++i) out.push_back({"v" + std::to_string(i), 2});
        return out;
      }
    case GroupForm::EmbeddedSl2Borel:
      return {{"v", 2}};
    case GroupForm::Kostant: {
      std::vector<VarSpec> out;
      for (int k = 2; k <= group_n; ++k) out.push_back({"c" + std::to_string(k), 2 * k});
      return out;
    }
    case GroupForm::EmbeddedSl2Kostant:
      return {{"t", 4}};
  }
  throw Error("unknown group form");
}

Matrix<MultiPoly> acting_matrix(GroupForm form, int group_n, int ambient, const Ring& ring,
                                int chart_dim) {
  auto bvar = [&](int i) { return MultiPoly::variable(ring, chart_dim + i); };
  switch (form) {
    case GroupForm::Borel: {
      // sl_2 acts through the symmetric power with torus coordinate +v*h;
      // bigger groups act on their defining space with the standard torus.
      if (group_n == 2)
        return sym_power_rep<MultiPoly>(ambient - 1, MultiPoly(1), MultiPoly(0), bvar(0));
      SlContext ctx = principal_triple(group_n);
      Matrix<MultiPoly> m(ambient, ambient);
      for (int k = 0; k + 1 < ambient; ++k) m.at(k, k + 1) = MultiPoly(1);
      for (int i = 1; i < group_n; ++i)
        for (int r = 0; r < ambient; ++r) {
          const Scalar& c = ctx.torus_basis[i - 1].at(r, r);
          if (c != 0) m.at(r, r) += bvar(i - 1) * MultiPoly(c);
        }
      return m;
    }
    case GroupForm::EmbeddedSl2Borel:
      return sym_power_rep<MultiPoly>(ambient - 1, MultiPoly(1), MultiPoly(0), -bvar(0));
    case GroupForm::Kostant: {
      SlContext ctx = principal_triple(group_n);
      std::vector<MultiPoly> c;
      for (int k = 2; k <= group_n; ++k) c.push_back(bvar(k - 2));
      return kostant_point(ctx, c);
    }
    case GroupForm::EmbeddedSl2Kostant:
      return sym_power_rep<MultiPoly>(ambient - 1, MultiPoly(1), bvar(0), MultiPoly(0));
  }
  throw Error("unknown group form");
}

// All exponent vectors of the given weighted degree, lexicographically.
void weighted_monomials_rec(const std::vector<int>& weights, int var, int remaining, Expo& cur,
                            std::vector<Expo>& out) {
  if (var == static_cast<int>(weights.size())) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * weights[var] <= remaining; ++e) {
    cur[var] = e;
    weighted_monomials_rec(weights, var + 1, remaining - e * weights[var], cur, out);
  }
  cur[var] = 0;
}

std::vector<Expo> weighted_monomials(const Ring& ring, int degree) {
  std::vector<int> weights;
  for (const auto& v : ring->vars) weights.push_back(v.weight);
  Expo cur(weights.size(), 0);
  std::vector<Expo> out;
  weighted_monomials_rec(weights, 0, degree, cur, out);
  return out;
}

// ---- exact rank with a modular full-rank fast path ----

constexpr uint64_t kRankPrimes[] = {2147483647ull, 2147483629ull, 2147483587ull};

uint64_t mulmod_p(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod_p(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod_p(r, a, p);
    a = mulmod_p(a, a, p);
    e >>= 1;
  }
  return r;
}

std::optional<uint64_t> scalar_mod_p(const Scalar& s, uint64_t p) {
  Int ip(p);
  Int num = scalar_num(s) % ip;
  if (num < 0) num += ip;
  Int den = scalar_den(s) % ip;
  if (den == 0) return std::nullopt;
  uint64_t n = num.convert_to<uint64_t>();
  uint64_t d = den.convert_to<uint64_t>();
  return mulmod_p(n, powmod_p(d, p - 2, p), p);
}

std::optional<long long> rank_mod_p(const std::vector<std::vector<Scalar>>& rows, uint64_t p) {
  const int nr = static_cast<int>(rows.size());
  if (nr == 0) return 0;
  const int nc = static_cast<int>(rows[0].size());
  std::vector<std::vector<uint64_t>> m(nr, std::vector<uint64_t>(nc, 0));
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) {
      if (rows[r][c] == 0) continue;
      auto red = scalar_mod_p(rows[r][c], p);
      if (!red) return std::nullopt;
      m[r][c] = *red;
    }
  int rank = 0;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (m[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = powmod_p(m[rank][col], p - 2, p);
    for (int r = rank + 1; r < nr; ++r) {
      if (!m[r][col]) continue;
      uint64_t f = mulmod_p(m[r][col], inv, p);
      for (int c = col; c < nc; ++c) m[r][c] = (m[r][c] + p - mulmod_p(f, m[rank][c], p)) % p;
    }
    ++rank;
  }
  return rank;
}

long long rank_exact(const std::vector<std::vector<Scalar>>& rows) {
  // Incremental echelon; basis rows kept sorted by pivot column, each with a
  // leading 1, so one ascending reduction pass per row suffices.
  std::vector<std::vector<Scalar>> basis;
  std::vector<int> pivots;
  for (const auto& in : rows) {
    std::vector<Scalar> r = in;
    const int nc = static_cast<int>(r.size());
    for (size_t k = 0; k < basis.size(); ++k) {
      const int c = pivots[k];
      if (r[c] == 0) continue;
      Scalar f = r[c];
      for (int j = c; j < nc; ++j) r[j] -= f * basis[k][j];
    }
    int lead = -1;
    for (int j = 0; j < nc; ++j)
      if (r[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) continue;
    Scalar inv = Scalar(1) / r[lead];
    for (int j = lead; j < nc; ++j) r[j] *= inv;
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < lead) ++at;
    basis.insert(basis.begin() + at, std::move(r));
    pivots.insert(pivots.begin() + at, lead);
  }
  return static_cast<long long>(basis.size());
}

long long exact_rank(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const long long full = std::min(rows.size(), rows[0].size());
  for (uint64_t p : kRankPrimes) {
    auto r = rank_mod_p(rows, p);
    if (r && *r == full) return full;  // mod-p rank is a lower bound
  }
  return rank_exact(rows);
}

// ---- tuple-algebra evaluation over chosen components ----

struct TupleEval {
  // images of every ambient ring variable restricted to each chosen component
  std::vector<std::vector<MultiPoly>> var_images;  // [component][ring var]
};

TupleEval tuple_eval(const ZeroScheme& z, const ComponentAtlas& atlas,
                     const std::vector<int>& labels) {
  const int d = z.chart.dim(), r = z.base_dim();
  for (size_t a = 0; a < labels.size(); ++a) {
    if (labels[a] < 0 || labels[a] >= static_cast<int>(atlas.labels.size()))
      throw Error("component label index out of range");
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b]) throw Error("repeated component label");
  }
  TupleEval te;
  for (int lab : labels) {
    std::vector<MultiPoly> images;
    for (int j = 0; j < d; ++j) images.push_back(atlas.params[lab][j]);
    for (int b = 0; b < r; ++b) images.push_back(MultiPoly::variable(z.base_ring, b));
    te.var_images.push_back(std::move(images));
  }
  return te;
}

// Rows: standard monomials of the zero-scheme ideal at `degree` (they span
// the degree part of the quotient, through which the evaluation factors);
// columns: (component, base monomial of the degree).
std::vector<std::vector<Scalar>> evaluation_rows(const ZeroScheme& z, const TupleEval& te,
                                                 int degree, const std::vector<Expo>& base_mons) {
  std::vector<Expo> mons = standard_monomials(z.gb, degree);
  std::sort(mons.begin(), mons.end());
  const int nv = static_cast<int>(z.ring->vars.size());
  const int nb = static_cast<int>(base_mons.size());
  const int nc = static_cast<int>(te.var_images.size());
  std::map<Expo, int> col_of;
  for (int b = 0; b < nb; ++b) col_of[base_mons[b]] = b;
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(mons.size());
  // prefix-product cache per component, rebuilt from the first differing var
  std::vector<std::vector<MultiPoly>> partial(
      nc, std::vector<MultiPoly>(nv + 1, MultiPoly::constant(z.base_ring, 1)));
  Expo prev(nv, -1);
  for (const Expo& e : mons) {
    int first = 0;
    while (first < nv && e[first] == prev[first]) ++first;
    for (int ci = 0; ci < nc; ++ci)
      for (int v = first; v < nv; ++v)
        partial[ci][v + 1] =
            e[v] == 0 ? partial[ci][v] : partial[ci][v] * te.var_images[ci][v].pow(e[v]);
    prev = e;
    std::vector<Scalar> row(static_cast<size_t>(nc) * nb, Scalar(0));
    for (int ci = 0; ci < nc; ++ci)
      for (const auto& [be, coeff] : partial[ci][nv].terms()) {
        auto it = col_of.find(be);
        if (it == col_of.end()) throw VerificationError("component image left its graded piece");
        row[static_cast<size_t>(ci) * nb + it->second] = coeff;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

int label_index(const std::vector<FixedPointLabel>& labels, const std::vector<int>& data) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i].data == data) return static_cast<int>(i);
  throw Error("permuted fixed-point label not found");
}

MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vals, int k, const Ring& ring) {
  std::vector<MultiPoly> e(k + 1, MultiPoly::constant(ring, 0));
  e[0] = MultiPoly::constant(ring, 1);
  for (size_t i = 0; i < vals.size(); ++i)
    for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
      e[j] += e[j - 1] * vals[i];
  return e[k];
}

}  // namespace

std::string form_name(GroupForm f) {
  switch (f) {
    case GroupForm::Borel: return "borel";
    case GroupForm::Kostant: return "kostant";
    case GroupForm::EmbeddedSl2Borel: return "embedded_sl2_borel";
    case GroupForm::EmbeddedSl2Kostant: return "embedded_sl2_kostant";
  }
  return "unknown";
}

ZeroScheme build_zero_scheme(GroupForm form, int group_n, Chart chart,
                             const GroebnerOptions& opts) {
  const int m = chart.ambient;
  if (group_n < 2) throw Error("group rank too small: sl_n needs n >= 2");
  switch (form) {
    case GroupForm::Borel:
      if (group_n != 2 && group_n != m)
        throw Error("borel form needs the group acting on its defining space (sl_" +
                    std::to_string(m) + ") or sl_2 through the symmetric power");
      break;
    case GroupForm::Kostant:
      if (group_n != m)
        throw Error("kostant form needs the group acting on its defining space (sl_" +
                    std::to_string(m) + ")");
      break;
    case GroupForm::EmbeddedSl2Borel:
    case GroupForm::EmbeddedSl2Kostant:
      if (group_n != 2) throw Error("embedded forms act through sl_2 symmetric powers");
      break;
  }
  if (chart.kind == ChartKind::BottSamelson && !solvable_form(form))
    throw Error("bott-samelson charts carry only solvable (borel-type) bases");

  ZeroScheme z;
  z.form = form;
  z.group_n = group_n;
  SlContext ambient = principal_triple(m);
  coordinate_weights(chart, ambient.h);
  z.chart = std::move(chart);

  std::vector<VarSpec> vars = z.chart.coordinates;
  std::vector<VarSpec> base = base_var_specs(form, group_n);
  for (const auto& b : base) vars.push_back(b);
  z.ring = make_ring(std::move(vars));
  z.base_ring = make_ring(std::move(base));
  z.matrix = acting_matrix(form, group_n, m, z.ring, z.chart.dim());
  z.generators = vector_field(z.chart, z.ring, z.matrix);
  for (int j = 0; j < z.chart.dim(); ++j) {
    auto deg = z.generators[j].homogeneous_degree();
    if (z.generators[j].is_zero() || !deg || *deg != z.chart.coordinates[j].weight + 2)
      throw HomogeneityError(render_poly(z.generators[j]));
  }
  z.gb = buchberger(z.ring, z.generators, MonomialOrder::wdegrevlex(), opts);
  const int krull = krull_dimension(z.gb);
  if (krull != z.base_dim())
    throw VerificationError("zero scheme is not a complete intersection over its base: krull " +
                            std::to_string(krull) + " != " + std::to_string(z.base_dim()));
  z.group = principal_triple(group_n);
  return z;
}

Presentation presentation(const ZeroScheme& z) {
  std::vector<int> chart_vars(z.chart.dim());
  for (int j = 0; j < z.chart.dim(); ++j) chart_vars[j] = j;
  SubstitutionResult sub = triangular_substitution(z.ring, z.generators, chart_vars);

  std::vector<bool> dropped(z.ring->vars.size(), false);
  for (const auto& [var, image] : sub.substitutions) dropped[var] = true;
  std::vector<VarSpec> kept;
  for (size_t i = 0; i < z.ring->vars.size(); ++i)
    if (!dropped[i]) kept.push_back(z.ring->vars[i]);

  Presentation p;
  p.ring = make_ring(std::move(kept));
  for (const auto& g : sub.remaining) {
    if (g.is_zero()) continue;
    p.relations.push_back(normalize_primitive(g.map_to(p.ring)));
  }
  for (const auto& [var, image] : sub.substitutions)
    p.eliminated.emplace_back(z.ring->vars[var].name, render_poly(image));

  // ideal-equality certificate: the reduced basis is unique, so rebuilding it
  // from relations + substituted definitions must reproduce the original
  std::vector<MultiPoly> regen;
  for (const auto& r : p.relations) regen.push_back(r.map_to(z.ring));
  for (const auto& [var, image] : sub.substitutions)
    regen.push_back(MultiPoly::variable(z.ring, var) - image);
  GroebnerBasis check = buchberger(z.ring, regen, MonomialOrder::wdegrevlex());
  if (check.gens != z.gb.gens)
    throw VerificationError("presentation does not generate the zero-scheme ideal");
  return p;
}

HilbertSeries equivariant_hilbert_series(const ZeroScheme& z, int cutoff) {
  std::vector<int> weights, rels;
  for (const auto& v : z.ring->vars) weights.push_back(v.weight);
  for (const auto& c : z.chart.coordinates) rels.push_back(c.weight + 2);
  HilbertSeries hs = hilbert_series_ci(weights, rels);
  if (series_expand(hs, cutoff) != standard_monomial_counts(z.gb, cutoff))
    throw VerificationError(
        "complete-intersection series disagrees with standard-monomial counts");
  return hs;
}

FiberReport fiber_check(const ZeroScheme& z, const std::vector<Scalar>& base_point) {
  if (static_cast<int>(base_point.size()) != z.base_dim())
    throw Error("fiber point has wrong base dimension");
  const int d = z.chart.dim(), m = z.chart.ambient;
  std::vector<Scalar> full(z.ring->vars.size(), Scalar(0));
  for (int b = 0; b < z.base_dim(); ++b) full[d + b] = base_point[b];
  Matrix<Scalar> mval(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) mval.at(r, c) = coerce_to(z.matrix.at(r, c), z.ring).eval(full);
  if (!is_regular(mval)) {
    std::vector<std::string> vanishing;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (mval.at(i, i) == mval.at(j, j) && z.matrix.at(i, i) != z.matrix.at(j, j))
          vanishing.push_back("d" + std::to_string(i) + " - d" + std::to_string(j));
    if (vanishing.empty()) vanishing.push_back("centralizer dimension exceeds the rank");
    throw RegularityError(std::move(vanishing));
  }

  Ring fiber_ring = make_ring(z.chart.coordinates);
  std::vector<MultiPoly> images;
  for (int j = 0; j < d; ++j) images.push_back(MultiPoly::variable(fiber_ring, j));
  for (int b = 0; b < z.base_dim(); ++b)
    images.push_back(MultiPoly::constant(fiber_ring, base_point[b]));
  std::vector<MultiPoly> specialized;
  for (const auto& g : z.generators) specialized.push_back(g.substitute(images));
  GroebnerBasis gb = buchberger(fiber_ring, specialized, MonomialOrder::wdegrevlex());
  if (krull_dimension(gb) != 0)
    throw VerificationError("fiber over a regular point is not zero-dimensional");
  SolutionCount sc = count_solutions_zero_dim(gb);
  return FiberReport{base_point, sc.multiplicity, sc.distinct, sc.radical_certified};
}

ComponentAtlas components(const ZeroScheme& z, int seed) {
  if (!z.solvable()) throw Error("component atlas needs a solvable (borel-type) base");
  ComponentAtlas atlas;
  atlas.base_ring = z.base_ring;
  atlas.labels = z.chart.labels;
  const int d = z.chart.dim(), r = z.base_dim(), m = z.chart.ambient;

  if (z.chart.kind == ChartKind::BottSamelson) {
    // forward branching: each generator factors as -x_j * q_j with q_j linear
    const MultiPoly& sup = z.matrix.at(0, 1);
    if (!sup.is_constant() || sup.constant_value() == 0)
      throw Error("bott-samelson base needs a constant superdiagonal");
    const Scalar eps = sup.constant_value();
    for (const auto& label : atlas.labels) {
      std::vector<MultiPoly> par(d);
      std::vector<MultiPoly> images(z.ring->vars.size(), MultiPoly::constant(z.base_ring, 0));
      for (int b = 0; b < r; ++b) images[d + b] = MultiPoly::variable(z.base_ring, b);
      for (int j = 0; j < d; ++j) {
        if (label.data[j] == 0) {
          par[j] = MultiPoly::constant(z.base_ring, 0);
        } else {
          auto q = poly_divide_exact(z.generators[j], MultiPoly::variable(z.ring, j));
          if (!q) throw VerificationError("generator is not divisible by its coordinate");
          MultiPoly rest = q->coeff_of(j, 0);  // -(eps*sum b_{jk} x_k + alpha_j)
          par[j] = rest.substitute(images) * MultiPoly(Scalar(1) / eps);
        }
        images[j] = par[j];
      }
      atlas.params.push_back(std::move(par));
    }
  } else {
    int cap = 1;
    for (const auto& c : z.chart.coordinates) cap = std::max(cap, c.weight / 2);
    const int grid = cap + 1;
    long long npoints = 1;
    for (int s = 0; s < r; ++s) npoints *= grid;
    // disjoint positive value sets per variable keep every tuple regular
    auto value = [&](int step, int var) {
      return Scalar(1 + var + r * (step + (seed - 1) * grid));
    };
    std::vector<std::vector<Scalar>> points;
    std::vector<int> odo(r, 0);
    for (long long n = 0; n < npoints; ++n) {
      std::vector<Scalar> pt(r);
      for (int s = 0; s < r; ++s) pt[s] = value(odo[s], s);
      points.push_back(std::move(pt));
      for (int s = r - 1; s >= 0; --s) {
        if (++odo[s] < grid) break;
        odo[s] = 0;
      }
    }
    // coordinates of every fixed point moved by M_w, per sample
    std::vector<std::vector<std::vector<Scalar>>> moved(atlas.labels.size());
    for (const auto& pt : points) {
      std::vector<Scalar> full(z.ring->vars.size(), Scalar(0));
      for (int b = 0; b < r; ++b) full[d + b] = pt[b];
      std::vector<Scalar> diag(m);
      for (int s = 0; s < m; ++s) diag[s] = coerce_to(z.matrix.at(s, s), z.ring).eval(full);
      Matrix<Scalar> mw = uniform_diagonalizer_values(diag);
      for (size_t i = 0; i < atlas.labels.size(); ++i)
        moved[i].push_back(fixed_point_coordinates(z.chart, atlas.labels[i], mw));
    }
    for (size_t i = 0; i < atlas.labels.size(); ++i) {
      std::vector<MultiPoly> par(d);
      for (int j = 0; j < d; ++j) {
        std::vector<Expo> mons = weighted_monomials(z.base_ring, z.chart.coordinates[j].weight);
        Matrix<Scalar> a(static_cast<int>(points.size()), static_cast<int>(mons.size()));
        std::vector<Scalar> b(points.size());
        for (size_t row = 0; row < points.size(); ++row) {
          for (size_t col = 0; col < mons.size(); ++col) {
            Scalar prod(1);
            for (int s = 0; s < r; ++s)
              for (int e = 0; e < mons[col][s]; ++e) prod *= points[row][s];
            a.at(static_cast<int>(row), static_cast<int>(col)) = prod;
          }
          b[row] = moved[i][row][j];
        }
        auto sol = solve_field(a, b);
        if (!sol)
          throw VerificationError("component coordinate " + z.ring->vars[j].name + " at " +
                                  atlas.labels[i].text +
                                  " is not a polynomial of its expected degree");
        MultiPoly poly = MultiPoly::constant(z.base_ring, 0);
        for (size_t col = 0; col < mons.size(); ++col) poly.add_term(mons[col], (*sol)[col]);
        par[j] = poly;
      }
      atlas.params.push_back(std::move(par));
    }
  }

  // certificate: every parametrization kills every generator identically
  for (size_t i = 0; i < atlas.labels.size(); ++i) {
    std::vector<MultiPoly> images;
    for (int j = 0; j < d; ++j) images.push_back(atlas.params[i][j]);
    for (int b = 0; b < r; ++b) images.push_back(MultiPoly::variable(z.base_ring, b));
    for (const auto& g : z.generators)
      if (!g.substitute(images).is_zero())
        throw VerificationError("component " + atlas.labels[i].text +
                                " does not satisfy the zero-scheme ideal");
  }
  return atlas;
}

std::vector<long long> subalgebra_dims(const ZeroScheme& z, const ComponentAtlas& atlas,
                                       const std::vector<int>& labels, int cutoff) {
  std::vector<long long> dims(cutoff + 1, 0);
  if (labels.empty()) return dims;
  TupleEval te = tuple_eval(z, atlas, labels);
  for (int deg = 0; deg <= cutoff; ++deg) {
    std::vector<Expo> base_mons = weighted_monomials(z.base_ring, deg);
    if (base_mons.empty()) continue;
    dims[deg] = exact_rank(evaluation_rows(z, te, deg, base_mons));
  }
  return dims;
}

WeylAction weyl_action(const ZeroScheme& z) {
  if (!z.solvable()) throw Error("the weyl action is realized on the solvable-base atlas");
  if (z.chart.kind == ChartKind::BottSamelson)
    throw Error("bott-samelson fixed points carry no natural weyl action");
  const auto& labels = z.chart.labels;
  const int m = z.chart.ambient;
  WeylAction act;

  // data image of one label under the slot transposition (a b), 0-based slots
  auto permute_label = [&](const std::vector<int>& data, int a, int b) {
    std::vector<int> out = data;
    switch (z.chart.kind) {
      case ChartKind::Projective:
        if (out[0] == a) out[0] = b;
        else if (out[0] == b) out[0] = a;
        break;
      case ChartKind::Grassmannian:
        for (int& s : out) {
          if (s == a + 1) s = b + 1;
          else if (s == b + 1) s = a + 1;
        }
        std::sort(out.begin(), out.end());
        break;
      case ChartKind::Flag:
        for (int& s : out) {
          if (s == a + 1) s = b + 1;
          else if (s == b + 1) s = a + 1;
        }
        break;
      default: break;
    }
    return out;
  };

  if (z.group_n == 2) {
    // one generator: v -> -v, fixed points reversed through the long element
    std::vector<int> img(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      std::vector<int> data = labels[i].data;
      switch (z.chart.kind) {
        case ChartKind::Projective: data[0] = (m - 1) - data[0]; break;
        case ChartKind::Grassmannian:
        case ChartKind::Flag:
          for (int& s : data) s = m + 1 - s;
          if (z.chart.kind == ChartKind::Grassmannian) std::sort(data.begin(), data.end());
          break;
        default: break;
      }
      img[i] = label_index(labels, data);
    }
    act.label_images.push_back(std::move(img));
    act.base_images.push_back({-MultiPoly::variable(z.base_ring, 0)});
    return act;
  }

  for (int k = 1; k < z.group_n; ++k) {
    std::vector<int> img(labels.size());
    for (size_t i = 0; i < labels.size(); ++i)
      img[i] = label_index(labels, permute_label(labels[i].data, k - 1, k));
    act.label_images.push_back(std::move(img));
    std::vector<MultiPoly> base;
    for (int j = 1; j < z.group_n; ++j) {
      auto vj = MultiPoly::variable(z.base_ring, j - 1);
      if (k == 1)
        base.push_back(j == 1 ? -vj : vj - MultiPoly::variable(z.base_ring, 0));
      else if (j == k - 1)
        base.push_back(MultiPoly::variable(z.base_ring, k - 1));
      else if (j == k)
        base.push_back(MultiPoly::variable(z.base_ring, k - 2));
      else
        base.push_back(vj);
    }
    act.base_images.push_back(std::move(base));
  }
  return act;
}

std::vector<long long> weyl_invariant_dims(const ZeroScheme& z, const ComponentAtlas& atlas,
                                           const std::vector<int>& labels, int cutoff) {
  std::vector<long long> dims(cutoff + 1, 0);
  if (labels.empty()) return dims;
  WeylAction act = weyl_action(z);
  std::vector<int> pos(atlas.labels.size(), -1);
  for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;  // generator action within the subset
  for (const auto& gi : act.label_images) {
    std::vector<int> perm(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      const int image = gi[labels[i]];
      if (pos[image] < 0) throw Error("label subset is not stable under the weyl action");
      perm[i] = pos[image];
    }
    perms.push_back(std::move(perm));
  }

  TupleEval te = tuple_eval(z, atlas, labels);
  const int nlab = static_cast<int>(labels.size());
  for (int deg = 0; deg <= cutoff; ++deg) {
    std::vector<Expo> base_mons = weighted_monomials(z.base_ring, deg);
    if (base_mons.empty()) continue;
    const int nb = static_cast<int>(base_mons.size());
    auto rows = evaluation_rows(z, te, deg, base_mons);
    if (rows.empty()) continue;
    Matrix<Scalar> mat(static_cast<int>(rows.size()), nlab * nb);
    for (size_t r = 0; r < rows.size(); ++r)
      for (int c = 0; c < nlab * nb; ++c) mat.at(static_cast<int>(r), c) = rows[r][c];
    Echelon<Scalar> ech = reduced_row_echelon(std::move(mat));
    const int rank = ech.rank;
    if (rank == 0) continue;

    // generator action on the echelon basis; pivot columns read coordinates
    std::vector<std::vector<Scalar>> stacked;
    for (size_t g = 0; g < perms.size(); ++g) {
      for (int bi = 0; bi < rank; ++bi) {
        // tuple of polynomials for basis row bi
        std::vector<Scalar> image(static_cast<size_t>(nlab) * nb, Scalar(0));
        for (int ci = 0; ci < nlab; ++ci) {
          MultiPoly f = MultiPoly::constant(z.base_ring, 0);
          for (int bm = 0; bm < nb; ++bm) {
            const Scalar& c = ech.reduced.at(bi, perms[g][ci] * nb + bm);
            if (c != 0) f.add_term(base_mons[bm], c);
          }
          MultiPoly h = f.substitute(act.base_images[g]);
          for (const auto& [be, coeff] : h.terms()) {
            auto it = std::find(base_mons.begin(), base_mons.end(), be);
            if (it == base_mons.end()) throw VerificationError("weyl image left its graded piece");
            image[static_cast<size_t>(ci) * nb + (it - base_mons.begin())] = coeff;
          }
        }
        // coordinates in the basis, then the residual must vanish
        std::vector<Scalar> coords(rank);
        for (int j = 0; j < rank; ++j) coords[j] = image[ech.pivots[j]];
        for (int c = 0; c < nlab * nb; ++c) {
          Scalar resid = image[c];
          for (int j = 0; j < rank; ++j) resid -= coords[j] * ech.reduced.at(j, c);
          if (resid != 0)
            throw VerificationError("weyl action does not preserve the tuple subalgebra");
        }
        coords[bi] -= Scalar(1);  // row of (T_g - I) in basis coordinates
        stacked.push_back(std::move(coords));
      }
    }
    dims[deg] = rank - exact_rank(stacked);
  }
  return dims;
}

GKMGraph gkm_graph(const ZeroScheme& z) {
  if (z.form != GroupForm::Borel || z.group_n != z.chart.ambient)
    throw Error("moment graphs need the full borel torus of the ambient group");
  if (z.chart.kind == ChartKind::BottSamelson)
    throw Error("moment graphs cover projective, grassmannian, and flag families");
  GKMGraph graph;
  graph.base_ring = z.base_ring;
  graph.vertices = z.chart.labels;
  auto wdiag = [&](int slot) {
    return coerce_to(z.matrix.at(slot, slot), z.ring).map_to(z.base_ring);
  };
  const auto& labels = z.chart.labels;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      MultiPoly character;
      switch (z.chart.kind) {
        case ChartKind::Projective:
          character = wdiag(labels[i].data[0]) - wdiag(labels[j].data[0]);
          break;
        case ChartKind::Grassmannian: {
          std::vector<int> only_i, only_j;
          for (int s : labels[i].data)
            if (std::find(labels[j].data.begin(), labels[j].data.end(), s) ==
                labels[j].data.end())
              only_i.push_back(s);
          for (int s : labels[j].data)
            if (std::find(labels[i].data.begin(), labels[i].data.end(), s) ==
                labels[i].data.end())
              only_j.push_back(s);
          if (only_i.size() != 1) continue;  // not a single exchange
          character = wdiag(only_i[0] - 1) - wdiag(only_j[0] - 1);
          break;
        }
        case ChartKind::Flag: {
          std::vector<int> moved;
          for (size_t s = 0; s < labels[i].data.size(); ++s)
            if (labels[i].data[s] != labels[j].data[s]) moved.push_back(static_cast<int>(s));
          if (moved.size() != 2) continue;
          const int a = labels[i].data[moved[0]], b = labels[i].data[moved[1]];
          if (labels[j].data[moved[0]] != b || labels[j].data[moved[1]] != a) continue;
          character = wdiag(a - 1) - wdiag(b - 1);
          break;
        }
        default: continue;
      }
      if (character.is_zero()) throw VerificationError("vanishing moment-graph character");
      graph.edges.push_back({static_cast<int>(i), static_cast<int>(j), std::move(character)});
    }
  return graph;
}

std::vector<long long> gkm_ring_dims(const GKMGraph& graph, int cutoff) {
  const int nv = static_cast<int>(graph.vertices.size());
  const int nvar = static_cast<int>(graph.base_ring->vars.size());
  std::vector<long long> dims(cutoff + 1, 0);

  // per edge: substitution sending the pivot variable onto the character's
  // kernel hyperplane, so divisibility becomes literal vanishing
  struct EdgeSub {
    int a, b;
    std::vector<MultiPoly> images;
    int pivot;
  };
  std::vector<EdgeSub> subs;
  for (const auto& e : graph.edges) {
    int pivot = -1;
    Scalar c;
    for (int v = 0; v < nvar; ++v) {
      Expo unit(nvar, 0);
      unit[v] = 1;
      auto it = e.character.terms().find(unit);
      if (it != e.character.terms().end() && it->second != 0) {
        pivot = v;
        c = it->second;
        break;
      }
    }
    if (pivot < 0) throw Error("moment-graph character is not linear in the base");
    std::vector<MultiPoly> images;
    for (int v = 0; v < nvar; ++v) images.push_back(MultiPoly::variable(graph.base_ring, v));
    images[pivot] = images[pivot] - e.character * MultiPoly(Scalar(1) / c);
    subs.push_back({e.a, e.b, std::move(images), pivot});
  }

  for (int deg = 0; deg <= cutoff; ++deg) {
    std::vector<Expo> mons = weighted_monomials(graph.base_ring, deg);
    if (mons.empty()) continue;
    const int nm = static_cast<int>(mons.size());
    std::map<Expo, int> col_of;
    for (int i = 0; i < nm; ++i) col_of[mons[i]] = i;
    std::vector<std::vector<Scalar>> constraints;
    for (const auto& s : subs) {
      // restricted monomial images, expanded over the degree's monomials
      std::vector<std::vector<Scalar>> restricted(nm, std::vector<Scalar>(nm, Scalar(0)));
      for (int i = 0; i < nm; ++i) {
        MultiPoly mono = MultiPoly::constant(graph.base_ring, 1);
        for (int v = 0; v < nvar; ++v)
          if (mons[i][v]) mono *= s.images[v].pow(mons[i][v]);
        for (const auto& [be, coeff] : mono.terms()) restricted[i][col_of.at(be)] = coeff;
      }
      // one row per residual monomial free of the pivot variable
      for (int row = 0; row < nm; ++row) {
        if (mons[row][s.pivot] != 0) continue;
        std::vector<Scalar> r(static_cast<size_t>(nv) * nm, Scalar(0));
        bool nonzero = false;
        for (int i = 0; i < nm; ++i) {
          const Scalar& c = restricted[i][row];
          if (c == 0) continue;
          r[static_cast<size_t>(s.a) * nm + i] = c;
          r[static_cast<size_t>(s.b) * nm + i] = -c;
          nonzero = true;
        }
        if (nonzero) constraints.push_back(std::move(r));
      }
    }
    dims[deg] = static_cast<long long>(nv) * nm - exact_rank(constraints);
  }
  return dims;
}

std::vector<MultiPoly> slot_weights(const ZeroScheme& z) {
  std::vector<MultiPoly> out;
  for (int s = 0; s < z.chart.ambient; ++s)
    out.push_back(coerce_to(z.matrix.at(s, s), z.ring).map_to(z.base_ring));
  return out;
}

LocalizationReport localization_check(const ZeroScheme& z, const ComponentAtlas& atlas) {
  if (z.chart.kind != ChartKind::Projective && z.chart.kind != ChartKind::Grassmannian)
    throw Error("localization checks cover projective and grassmannian charts");
  LocalizationReport rep;
  auto weights = slot_weights(z);
  std::vector<int> ks = {1};
  if (z.chart.sub_rank > 1) ks.push_back(z.chart.sub_rank);
  for (int k : ks) {
    MultiPoly trace = chern_trace(z.chart, Bundle::TautologicalSub, k, z.ring, z.matrix);
    for (size_t i = 0; i < atlas.labels.size(); ++i) {
      std::vector<MultiPoly> images;
      for (int j = 0; j < z.chart.dim(); ++j) images.push_back(atlas.params[i][j]);
      for (int b = 0; b < z.base_dim(); ++b)
        images.push_back(MultiPoly::variable(z.base_ring, b));
      MultiPoly lhs = trace.substitute(images);
      std::vector<MultiPoly> fixed;
      for (int s : atlas.labels[i].data)
        fixed.push_back(weights[z.chart.kind == ChartKind::Projective ? s : s - 1]);
      MultiPoly rhs = elementary_symmetric(fixed, k, z.base_ring);
      const bool ok = lhs == rhs;
      rep.entries.push_back(
          {atlas.labels[i].text, k, ok, render_poly(lhs), render_poly(rhs)});
      if (!ok) rep.pass = false;
    }
  }
  return rep;
}

MultiPoly kostant_sign_involution(const ZeroScheme& z, const MultiPoly& p) {
  if (z.solvable()) throw Error("the sign involution acts on kostant-section coordinates");
  if (!p.ring()) return p;
  const Ring& ring = p.ring();
  std::vector<int> flip(ring->vars.size(), 0);
  for (size_t i = 0; i < ring->vars.size(); ++i) {
    const auto& name = ring->vars[i].name;
    for (const auto& b : z.base_ring->vars)
      if (b.name == name) flip[i] = (b.weight / 2) % 2;  // c_k -> (-1)^k c_k
  }
  MultiPoly out = MultiPoly::constant(ring, 0);
  for (const auto& [e, c] : p.terms()) {
    int sign = 0;
    for (size_t i = 0; i < e.size(); ++i) sign += flip[i] * e[i];
    out.add_term(e, sign % 2 ? -c : c);
  }
  return out;
}

std::vector<std::vector<Scalar>> sample_regular_points(const ZeroScheme& z, int count,
                                                       int seed) {
  if (count <= 0) throw Error("regular-point sampling needs a positive count");
  const int r = z.base_dim();
  const int nchart = z.chart.dim();
  const int nvars = static_cast<int>(z.ring->vars.size());

  // The chart coordinates never appear in the acting matrix, so padding them
  // with zeros makes a full evaluation point.
  auto squarefree_at = [&](const std::vector<Scalar>& pt) {
    std::vector<Scalar> full(nvars, Scalar(0));
    for (int b = 0; b < r; ++b) full[nchart + b] = pt[b];
    const int n = z.matrix.rows();
    Matrix<Scalar> m(n, n);
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        m.at(row, col) = coerce_to(z.matrix.at(row, col), z.ring).eval(full);
    return uni_is_squarefree(char_poly(m));
  };

  std::vector<std::vector<Scalar>> points;
  points.reserve(count);
  if (z.solvable()) {
    // Disjoint value sets per variable keep the diagonal entries distinct.
    for (int i = 0; i < count; ++i) {
      std::vector<Scalar> pt(r);
      for (int b = 0; b < r; ++b) pt[b] = Scalar(1 + b + r * (i + (seed - 1) * count));
      if (!squarefree_at(pt))
        throw VerificationError("sampled torus point is not regular semisimple");
      points.push_back(std::move(pt));
    }
    return points;
  }
  // Kostant-section bases: walk a fixed congruential stream and keep the
  // points with squarefree characteristic polynomial.
  std::uint64_t state = static_cast<std::uint64_t>(seed);
  auto draw = [&]() {
    state = (state * 1103515245ull + 12345ull) % 2147483648ull;
    return Scalar(static_cast<long long>(state % 19) - 9);
  };
  int attempts = 0;
  while (static_cast<int>(points.size()) < count) {
    if (++attempts > 200 * count)
      throw Error("regular-point sampling did not find enough regular semisimple points");
    std::vector<Scalar> pt(r);
    for (int b = 0; b < r; ++b) pt[b] = draw();
    if (squarefree_at(pt)) points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace equicoh
