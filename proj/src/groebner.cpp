#include "equicoh/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "equicoh/matrix.hpp"
#include "equicoh/uni.hpp"

namespace equicoh {

namespace {

bool divides(const Expo& a, const Expo& b) {  // monomial a | monomial b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo expo_lcm(const Expo& a, const Expo& b) {
  Expo e(a.size());
  for (size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

MultiPoly monomial(const Ring& ring, const Expo& e, const Scalar& c) {
  MultiPoly m = MultiPoly::constant(ring, 0);
  m.add_term(e, c);
  return m;
}

void charge(long long* budget, const char* what) {
  if (budget && --*budget < 0) throw ResourceError(std::string(what) + ": step budget exceeded");
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order, long long* budget) {
  if (p.is_zero()) return p;
  const Ring& ring = p.ring();
  const RingDesc desc = ring ? *ring : RingDesc{};
  MultiPoly work = p;
  MultiPoly result = MultiPoly::constant(ring, 0);
  while (!work.is_zero()) {
    const Expo& le = leading_expo(work, order);
    Scalar lc = work.terms().at(le);
    bool reduced = false;
    for (const MultiPoly& g : gens) {
      if (g.is_zero()) continue;
      const Expo& lg = leading_expo(g, order);
      if (!divides(lg, le)) continue;
      charge(budget, "normal_form");
      Expo q(le.size());
      for (size_t i = 0; i < le.size(); ++i) q[i] = le[i] - lg[i];
      Scalar c = lc / g.terms().at(lg);
      work -= monomial(ring, q, c) * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      charge(budget, "normal_form");
      result.add_term(le, lc);
      work.add_term(le, -lc);
    }
  }
  return result;
}

namespace {

struct PairKey {
  Expo lcm;
  int i, j;
};

struct PairCompare {
  const RingDesc* desc;
  const MonomialOrder* order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    int c = cmp_expo(*desc, *order, a.lcm, b.lcm);
    if (c != 0) return c < 0;  // smallest lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& order, const GroebnerOptions& opts) {
  const RingDesc desc = ring ? *ring : RingDesc{};
  long long budget = opts.step_budget;
  std::vector<MultiPoly> basis;
  for (const MultiPoly& g : gens) {
    MultiPoly h = coerce_to(g, ring);
    if (!h.is_zero()) basis.push_back(normalize_primitive(h, order));
  }
  PairCompare cmp{&desc, &order};
  auto key = [&](int i, int j) {
    return PairKey{expo_lcm(leading_expo(basis[i], order), leading_expo(basis[j], order)), i, j};
  };
  std::set<PairKey, PairCompare> pending(cmp);
  std::set<std::pair<int, int>> pending_idx;
  auto enqueue = [&](int i, int j) {
    pending.insert(key(i, j));
    pending_idx.emplace(i, j);
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) enqueue(static_cast<int>(i), static_cast<int>(j));

  auto is_pending = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return pending_idx.count({a, b}) > 0;
  };

  while (!pending.empty()) {
    charge(&budget, "buchberger");
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    pending_idx.erase({pk.i, pk.j});
    const MultiPoly& f = basis[pk.i];
    const MultiPoly& g = basis[pk.j];
    const Expo& lf = leading_expo(f, order);
    const Expo& lg = leading_expo(g, order);
    // Coprimality criterion.
    bool coprime = true;
    for (size_t v = 0; v < lf.size(); ++v)
      if (lf[v] > 0 && lg[v] > 0) {
        coprime = false;
        break;
      }
    if (coprime) continue;
    // Chain criterion: some k with LT(k) | lcm and both (i,k), (j,k) done.
    bool chained = false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == pk.i || static_cast<int>(k) == pk.j) continue;
      if (!divides(leading_expo(basis[k], order), pk.lcm)) continue;
      if (!is_pending(pk.i, static_cast<int>(k)) && !is_pending(pk.j, static_cast<int>(k))) {
        chained = true;
        break;
      }
    }
    if (chained) continue;
    // S-polynomial.
    Expo qf(pk.lcm.size()), qg(pk.lcm.size());
    for (size_t v = 0; v < pk.lcm.size(); ++v) {
      qf[v] = pk.lcm[v] - lf[v];
      qg[v] = pk.lcm[v] - lg[v];
    }
    MultiPoly s = monomial(ring, qf, Scalar(1) / f.terms().at(lf)) * f -
                  monomial(ring, qg, Scalar(1) / g.terms().at(lg)) * g;
    MultiPoly r = normal_form(s, basis, order, &budget);
    if (r.is_zero()) continue;
    basis.push_back(normalize_primitive(r, order));
    int ni = static_cast<int>(basis.size()) - 1;
    for (int i = 0; i < ni; ++i) enqueue(i, ni);
  }

  // Minimalize: drop generators whose leading term is divisible by another's
  // (on equal leading terms, the earlier one survives).
  std::vector<char> keep(basis.size(), 1);
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Expo& li = leading_expo(basis[i], order);
      const Expo& lj = leading_expo(basis[j], order);
      if (divides(lj, li) && (!(lj == li) || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<MultiPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Inter-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<MultiPoly> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      MultiPoly r = normal_form(minimal[i], others, order, &budget);
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      r = normalize_primitive(r, order);
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    return cmp_expo(desc, order, leading_expo(a, order), leading_expo(b, order)) < 0;
  });
  GroebnerBasis out;
  out.ring = ring;
  out.order = order;
  out.gens = std::move(minimal);
  return out;
}

SubstitutionResult triangular_substitution(const Ring& ring, const std::vector<MultiPoly>& gens,
                                           const std::vector<int>& candidate_vars) {
  SubstitutionResult out;
  for (const auto& g : gens) out.remaining.push_back(coerce_to(g, ring));
  std::set<int> candidates(candidate_vars.begin(), candidate_vars.end());
  bool progress = true;
  while (progress) {
    progress = false;
    // highest candidate first: mirrors the hand eliminations, which solve for
    // the top coordinate of each triangular step
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
      const int v = *it;
      int chosen = -1;
      for (size_t gi = 0; gi < out.remaining.size(); ++gi) {
        const MultiPoly& g = out.remaining[gi];
        if (g.degree_in(v) != 1) continue;
        MultiPoly lin = g.coeff_of(v, 1);
        if (!lin.is_constant() || lin.is_zero()) continue;
        chosen = static_cast<int>(gi);
        break;
      }
      if (chosen < 0) continue;
      MultiPoly g = out.remaining[chosen];
      Scalar c = g.coeff_of(v, 1).constant_value();
      MultiPoly rest = g.coeff_of(v, 0);
      MultiPoly image = rest * MultiPoly::constant(Scalar(-1) / c);
      // Substitute into every other generator and the stored definitions.
      size_t nv = ring->vars.size();
      std::vector<MultiPoly> images;
      images.reserve(nv);
      for (size_t i = 0; i < nv; ++i)
        images.push_back(static_cast<int>(i) == v ? image : MultiPoly::variable(ring, static_cast<int>(i)));
      std::vector<MultiPoly> next;
      for (size_t gi = 0; gi < out.remaining.size(); ++gi) {
        if (static_cast<int>(gi) == chosen) continue;
        MultiPoly h = out.remaining[gi].substitute(images);
        if (!h.is_zero()) next.push_back(h);
      }
      out.remaining = std::move(next);
      for (auto& [w, def] : out.substitutions) def = def.substitute(images);
      out.substitutions.emplace_back(v, image);
      candidates.erase(v);
      progress = true;
      break;
    }
  }
  std::sort(out.substitutions.begin(), out.substitutions.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

EliminationResult eliminate(const Ring& ring, const std::vector<MultiPoly>& gens,
                            const std::vector<int>& drop_vars, const GroebnerOptions& opts) {
  EliminationResult out;
  SubstitutionResult sub = triangular_substitution(ring, gens, drop_vars);
  out.substitutions = sub.substitutions;

  std::set<int> dropped(drop_vars.begin(), drop_vars.end());
  std::vector<int> leftover;
  {
    std::set<int> substituted;
    for (const auto& [v, def] : sub.substitutions) substituted.insert(v);
    for (int v : drop_vars)
      if (!substituted.count(v)) leftover.push_back(v);
  }

  std::vector<VarSpec> kept;
  for (size_t i = 0; i < ring->vars.size(); ++i)
    if (!dropped.count(static_cast<int>(i))) kept.push_back(ring->vars[i]);
  out.subring = make_ring(kept);

  std::vector<MultiPoly> survivors = sub.remaining;
  if (!leftover.empty()) {
    bool needs_gb = false;
    for (const MultiPoly& g : survivors)
      for (int v : leftover)
        if (g.depends_on(v)) needs_gb = true;
    if (needs_gb) {
      out.used_groebner = true;
      MonomialOrder block = MonomialOrder::block(leftover);
      GroebnerBasis gb = buchberger(ring, survivors, block, opts);
      survivors.clear();
      for (const MultiPoly& g : gb.gens) {
        bool free_of_drop = true;
        for (int v : leftover)
          if (g.depends_on(v)) free_of_drop = false;
        if (free_of_drop) survivors.push_back(g);
      }
    }
  }
  for (const MultiPoly& g : survivors) {
    for (int v : drop_vars)
      if (g.depends_on(v))
        throw Error("elimination left a relation involving a dropped variable");
    if (!g.is_zero()) out.relations.push_back(normalize_primitive(g.map_to(out.subring)));
  }
  return out;
}

int krull_dimension(const GroebnerBasis& gb) {
  const int n = gb.ring ? static_cast<int>(gb.ring->vars.size()) : 0;
  std::vector<Expo> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(leading_expo(g, gb.order));
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Expo& lt : lts) {
      bool supported = true;  // support of lt contained in the subset?
      for (int v = 0; v < n; ++v)
        if (lt[v] > 0 && !(mask & (1u << v))) supported = false;
      if (supported) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

namespace {

void enumerate_standard(const RingDesc& desc, const std::vector<Expo>& lts, int cutoff,
                        Expo& current, int var, int degree_so_far,
                        const std::function<void(const Expo&, int)>& emit) {
  if (var == static_cast<int>(desc.vars.size())) {
    for (const Expo& lt : lts)
      if (divides(lt, current)) return;
    emit(current, degree_so_far);
    return;
  }
  int w = desc.vars[var].weight;
  for (int e = 0; degree_so_far + e * w <= cutoff; ++e) {
    current[var] = e;
    enumerate_standard(desc, lts, cutoff, current, var + 1, degree_so_far + e * w, emit);
  }
  current[var] = 0;
}

}  // namespace

std::vector<long long> standard_monomial_counts(const GroebnerBasis& gb, int cutoff) {
  const RingDesc& desc = *gb.ring;
  for (const auto& g : gb.gens)
    if (!g.homogeneous_degree()) throw HomogeneityError(render_poly(g, gb.order));
  std::vector<Expo> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(leading_expo(g, gb.order));
  std::vector<long long> counts(cutoff + 1, 0);
  Expo current(desc.vars.size(), 0);
  enumerate_standard(desc, lts, cutoff, current, 0, 0,
                     [&](const Expo&, int deg) { counts[deg] += 1; });
  return counts;
}

std::vector<Expo> standard_monomials(const GroebnerBasis& gb, int degree) {
  std::vector<Expo> lts;
  for (const auto& g : gb.gens)
    if (!g.is_zero()) lts.push_back(leading_expo(g, gb.order));
  std::vector<Expo> out;
  Expo current(gb.ring->vars.size(), 0);
  enumerate_standard(*gb.ring, lts, degree, current, 0, 0, [&](const Expo& e, int deg) {
    if (deg == degree) out.push_back(e);
  });
  return out;
}

SolutionCount count_solutions_zero_dim(const GroebnerBasis& gb) {
  if (krull_dimension(gb) != 0) throw Error("ideal is not zero-dimensional");
  const RingDesc& desc = *gb.ring;
  const int n = static_cast<int>(desc.vars.size());
  std::vector<Expo> lts;
  for (const auto& g : gb.gens) lts.push_back(leading_expo(g, gb.order));
  // Zero-dimensionality gives a pure power of each variable in the LT ideal.
  std::vector<int> bound(n, -1);
  for (const Expo& lt : lts) {
    int var = -1;
    bool pure = true;
    for (int v = 0; v < n; ++v)
      if (lt[v] > 0) {
        if (var >= 0) pure = false;
        var = v;
      }
    if (pure && var >= 0)
      bound[var] = bound[var] < 0 ? lt[var] : std::min(bound[var], lt[var]);
  }
  for (int v = 0; v < n; ++v)
    if (bound[v] < 0) throw Error("internal: zero-dimensional ideal lacks pure power");

  // Standard monomial basis of the quotient.
  std::vector<Expo> basis;
  Expo cur(n, 0);
  std::function<void(int)> rec = [&](int var) {
    if (var == n) {
      for (const Expo& lt : lts)
        if (divides(lt, cur)) return;
      basis.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      cur[var] = e;
      rec(var + 1);
    }
    cur[var] = 0;
  };
  rec(0);
  std::map<Expo, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  const int dim = static_cast<int>(basis.size());

  SolutionCount out;
  out.multiplicity = dim;
  out.radical_certified = true;
  bool single_point = true;
  long long budget = 50'000'000;
  for (int v = 0; v < n; ++v) {
    Matrix<Scalar> mult(dim, dim);
    for (int b = 0; b < dim; ++b) {
      Expo e = basis[b];
      e[v] += 1;
      MultiPoly xm = MultiPoly::constant(gb.ring, 0);
      xm.add_term(e, Scalar(1));
      MultiPoly nf = normal_form(xm, gb.gens, gb.order, &budget);
      for (const auto& [me, mc] : nf.terms()) {
        auto it = index.find(me);
        if (it == index.end()) throw Error("internal: normal form left the standard basis");
        mult.at(it->second, b) = mc;
      }
    }
    UniPoly cp = char_poly(mult);
    UniPoly elim = uni_squarefree_part(cp);
    if (!uni_eval_matrix(elim, mult).is_zero()) out.radical_certified = false;
    if (uni_deg(elim) > 1) single_point = false;
  }
  if (out.radical_certified)
    out.distinct = out.multiplicity;
  else if (single_point)
    out.distinct = Int(1);
  return out;
}

}  // namespace equicoh
