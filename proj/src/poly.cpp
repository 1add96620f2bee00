#include "equicoh/poly.hpp"

#include <algorithm>
#include <cassert>

namespace equicoh {

int RingDesc::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return static_cast<int>(i);
  return -1;
}

Ring make_ring(std::vector<VarSpec> vars) {
  for (const auto& v : vars)
    if (v.weight <= 0) throw Error("variable " + v.name + " must have positive weight");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name) throw Error("duplicate variable name " + vars[i].name);
  auto desc = std::make_shared<RingDesc>();
  desc->vars = std::move(vars);
  return desc;
}

int weighted_degree_of(const RingDesc& ring, const Expo& e) {
  int d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += e[i] * ring.vars[i].weight;
  return d;
}

MonomialOrder MonomialOrder::block(std::vector<int> front_vars) {
  MonomialOrder o;
  o.kind = Kind::Block;
  o.front = std::move(front_vars);
  return o;
}

namespace {

// Weighted degrevlex restricted to the variable index sequence `seq`.
int cmp_on_subset(const RingDesc& ring, const std::vector<int>& seq, const Expo& a, const Expo& b) {
  long long da = 0, db = 0;
  for (int v : seq) {
    da += static_cast<long long>(a[v]) * ring.vars[v].weight;
    db += static_cast<long long>(b[v]) * ring.vars[v].weight;
  }
  if (da != db) return da < db ? -1 : 1;
  for (int p = static_cast<int>(seq.size()) - 1; p >= 0; --p) {
    int v = seq[p];
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;  // smaller exponent at the right wins
  }
  return 0;
}

}  // namespace

int cmp_expo(const RingDesc& ring, const MonomialOrder& order, const Expo& a, const Expo& b) {
  const int n = static_cast<int>(ring.vars.size());
  if (order.kind == MonomialOrder::Kind::WDegRevLex) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    return cmp_on_subset(ring, all, a, b);
  }
  std::vector<char> in_front(n, 0);
  for (int v : order.front) {
    if (v < 0 || v >= n) throw Error("block order references variable out of range");
    in_front[v] = 1;
  }
  int c = cmp_on_subset(ring, order.front, a, b);
  if (c != 0) return c;
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!in_front[i]) rest.push_back(i);
  return cmp_on_subset(ring, rest, a, b);
}

MultiPoly MultiPoly::constant(const Scalar& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(Expo{}, c);
  return p;
}

MultiPoly MultiPoly::constant(const Ring& ring, const Scalar& c) {
  MultiPoly p;
  p.ring_ = ring;
  if (c != 0) p.terms_.emplace(Expo(ring ? ring->vars.size() : 0, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, int index) {
  if (!ring || index < 0 || index >= static_cast<int>(ring->vars.size()))
    throw Error("variable index out of range");
  MultiPoly p;
  p.ring_ = ring;
  Expo e(ring->vars.size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Scalar(1));
  return p;
}

MultiPoly MultiPoly::variable(const Ring& ring, const std::string& name) {
  if (!ring) throw Error("variable lookup in null ring");
  int idx = ring->index_of(name);
  if (idx < 0) throw Error("no variable named " + name);
  return variable(ring, idx);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const Expo& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Scalar MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

Ring unify_rings(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ring()) return b.ring();
  if (!b.ring()) return a.ring();
  if (a.ring() == b.ring() || *a.ring() == *b.ring()) return a.ring();
  throw RingMismatchError("operands live in different polynomial rings");
}

MultiPoly coerce_to(const MultiPoly& p, const Ring& ring) {
  if (p.ring() == ring) return p;
  if (p.ring() && ring && *p.ring() == *ring) {
    MultiPoly out = MultiPoly::constant(ring, 0);
    for (const auto& [e, c] : p.terms()) out.add_term(e, c);
    return out;
  }
  if (!p.ring()) {
    MultiPoly out = MultiPoly::constant(ring, 0);
    size_t n = ring ? ring->vars.size() : 0;
    for (const auto& [e, c] : p.terms()) out.add_term(Expo(n, 0), c);
    return out;
  }
  throw RingMismatchError("cannot coerce polynomial into unrelated ring");
}

void MultiPoly::add_term(Expo e, const Scalar& c) {
  if (c == 0) return;
  size_t want = ring_ ? ring_->vars.size() : 0;
  if (e.size() != want) throw Error("exponent vector has wrong length");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  Ring target = unify_rings(*this, o);
  if (ring_ != target) *this = coerce_to(*this, target);
  MultiPoly rhs = (o.ring() == target) ? o : coerce_to(o, target);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  Ring target = unify_rings(a, b);
  MultiPoly x = coerce_to(a, target);
  MultiPoly y = coerce_to(b, target);
  MultiPoly out = MultiPoly::constant(target, 0);
  for (const auto& [ea, ca] : x.terms()) {
    for (const auto& [eb, cb] : y.terms()) {
      Expo e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw Error("negative power of polynomial");
  MultiPoly out = MultiPoly::constant(ring_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
  Ring target;
  try {
    target = unify_rings(a, b);
  } catch (const RingMismatchError&) {
    return false;
  }
  return coerce_to(a, target).terms() == coerce_to(b, target).terms();
}

int MultiPoly::weighted_degree() const {
  if (terms_.empty()) return -1;
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, ring_ ? weighted_degree_of(*ring_, e) : 0);
  return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return -1;  // zero: homogeneous of every degree
  std::optional<int> deg;
  for (const auto& [e, c] : terms_) {
    int d = ring_ ? weighted_degree_of(*ring_, e) : 0;
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg;
}

int MultiPoly::degree_in(int var) const {
  if (!ring_ || var < 0 || var >= static_cast<int>(ring_->vars.size())) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out = MultiPoly::constant(ring_, 0);
  if (!ring_) return out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d = e;
    d[var] -= 1;
    out.add_term(std::move(d), c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  size_t nv = ring_ ? ring_->vars.size() : 0;
  if (images.size() != nv) throw Error("substitute: wrong number of images");
  Ring target;
  for (const auto& img : images) {
    if (!img.ring()) continue;
    if (!target)
      target = img.ring();
    else if (target != img.ring() && !(*target == *img.ring()))
      throw RingMismatchError("substitution images live in different rings");
  }
  MultiPoly out = MultiPoly::constant(target, 0);
  for (const auto& [e, c] : terms_) {
    MultiPoly acc = MultiPoly::constant(target, c);
    for (size_t i = 0; i < nv; ++i)
      if (e[i] > 0) acc = acc * coerce_to(images[i], target).pow(e[i]);
    out += acc;
  }
  return out;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  size_t nv = ring_ ? ring_->vars.size() : 0;
  if (point.size() != nv) throw Error("eval: wrong number of values");
  Scalar out = 0;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < nv; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::map_to(const Ring& target) const {
  if (!ring_) return coerce_to(*this, target);
  if (!target) {
    if (!is_constant()) throw RingMismatchError("cannot map non-constant into null ring");
    return MultiPoly::constant(constant_value());
  }
  std::vector<int> where(ring_->vars.size(), -1);
  for (size_t i = 0; i < ring_->vars.size(); ++i)
    where[i] = target->index_of(ring_->vars[i].name);
  MultiPoly out = MultiPoly::constant(target, 0);
  for (const auto& [e, c] : terms_) {
    Expo f(target->vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw RingMismatchError("variable " + ring_->vars[i].name + " missing from target ring");
      f[where[i]] = e[i];
    }
    out.add_term(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::coeff_of(int var, int k) const {
  MultiPoly out = MultiPoly::constant(ring_, 0);
  if (!ring_) return (k == 0) ? *this : out;
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Expo f = e;
    f[var] = 0;
    out.add_term(std::move(f), c);
  }
  return out;
}

const Expo& leading_expo(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error("leading term of zero polynomial");
  const RingDesc desc = p.ring() ? *p.ring() : RingDesc{};
  const Expo* best = nullptr;
  for (const auto& [e, c] : p.terms()) {
    if (!best || cmp_expo(desc, order, e, *best) > 0) best = &e;
  }
  return *best;
}

Scalar leading_coeff(const MultiPoly& p, const MonomialOrder& order) {
  return p.terms().at(leading_expo(p, order));
}

std::string render_poly(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  const RingDesc desc = p.ring() ? *p.ring() : RingDesc{};
  std::vector<const std::pair<const Expo, Scalar>*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
    return cmp_expo(desc, order, a->first, b->first) > 0;
  });
  std::string out;
  bool first = true;
  for (auto* t : ts) {
    Scalar c = t->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    Scalar a = neg ? Scalar(-c) : c;
    std::string mono;
    for (size_t i = 0; i < t->first.size(); ++i) {
      int k = t->first[i];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += desc.vars[i].name;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += render_scalar(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += render_scalar(a) + "*" + mono;
    }
  }
  return out;
}

MultiPoly normalize_primitive(const MultiPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    num_gcd = int_gcd(num_gcd, scalar_num(c));
    den_lcm = int_lcm(den_lcm, scalar_den(c));
  }
  Scalar scale = Scalar(den_lcm) / Scalar(num_gcd);
  MultiPoly out = p * scale;
  if (leading_coeff(out, order) < 0) out = -out;
  return out;
}

std::optional<MultiPoly> poly_divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  Ring target = unify_rings(a, b);
  MultiPoly rem = coerce_to(a, target);
  MultiPoly div = coerce_to(b, target);
  MultiPoly quot = MultiPoly::constant(target, 0);
  MonomialOrder order = MonomialOrder::wdegrevlex();
  const RingDesc desc = target ? *target : RingDesc{};
  const Expo& lb = leading_expo(div, order);
  Scalar cb = leading_coeff(div, order);
  while (!rem.is_zero()) {
    const Expo& lr = leading_expo(rem, order);
    Expo q(lr.size(), 0);
    bool ok = true;
    for (size_t i = 0; i < lr.size(); ++i) {
      q[i] = lr[i] - lb[i];
      if (q[i] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) return std::nullopt;
    MultiPoly mono = MultiPoly::constant(target, rem.terms().at(lr) / cb);
    MultiPoly qm = MultiPoly::constant(target, 0);
    qm.add_term(q, Scalar(1));
    mono = mono * qm;
    quot += mono;
    rem -= mono * div;
  }
  return quot;
}

namespace {

MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly g = MultiPoly::constant(p.ring(), 0);
  for (int k = 0; k <= p.degree_in(var); ++k) {
    MultiPoly c = p.coeff_of(var, k);
    if (!c.is_zero()) g = poly_gcd(g, c);
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, int var) {
  if (p.is_zero()) return p;
  MultiPoly c = content_in(p, var);
  auto q = poly_divide_exact(p, c);
  if (!q) throw Error("internal: content does not divide polynomial");
  return *q;
}

// Pseudo-remainder of f by g with respect to var.
MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, int var) {
  int dg = g.degree_in(var);
  MultiPoly lcg = g.coeff_of(var, dg);
  Ring ring = f.ring();
  while (!f.is_zero() && f.degree_in(var) >= dg) {
    int df = f.degree_in(var);
    MultiPoly lcf = f.coeff_of(var, df);
    MultiPoly shift = MultiPoly::constant(ring, 0);
    Expo e(ring->vars.size(), 0);
    e[var] = df - dg;
    shift.add_term(std::move(e), Scalar(1));
    f = f * lcg - lcf * shift * g;
  }
  return f;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  Ring target = unify_rings(a, b);
  MultiPoly f = normalize_primitive(coerce_to(a, target));
  MultiPoly g = normalize_primitive(coerce_to(b, target));
  if (f.is_constant() || g.is_constant()) return MultiPoly::constant(target, 1);
  int var = -1;
  int nv = target ? static_cast<int>(target->vars.size()) : 0;
  for (int v = nv - 1; v >= 0; --v) {
    if (f.depends_on(v) || g.depends_on(v)) {
      var = v;
      break;
    }
  }
  if (var < 0) return MultiPoly::constant(target, 1);
  MultiPoly cf = content_in(f, var);
  MultiPoly cg = content_in(g, var);
  MultiPoly gc = poly_gcd(cf, cg);
  MultiPoly pf = primitive_in(f, var);
  MultiPoly pg = primitive_in(g, var);
  if (pf.degree_in(var) < pg.degree_in(var)) std::swap(pf, pg);
  while (true) {
    MultiPoly r = pseudo_rem(pf, pg, var);
    if (r.is_zero()) break;
    pf = pg;
    pg = primitive_in(r, var);
    if (!pg.depends_on(var)) {
      // Nonzero remainder free of var: the var-primitive parts are coprime.
      pg = MultiPoly::constant(target, 1);
      break;
    }
  }
  return normalize_primitive(gc * primitive_in(pg, var));
}

Fraction::Fraction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("fraction with zero denominator");
  reduce();
}

void Fraction::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(num_.ring(), 1);
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *poly_divide_exact(num_, g);
    den_ = *poly_divide_exact(den_, g);
  }
  // Make the denominator primitive-integral with positive leading coefficient
  // and fold the rational scale into the numerator.
  MonomialOrder order = MonomialOrder::wdegrevlex();
  MultiPoly dnorm = normalize_primitive(den_, order);
  // den_ = s * dnorm for a rational s: read s off matching leading terms.
  const Expo& le = leading_expo(den_, order);
  Scalar s = den_.terms().at(le) / dnorm.terms().at(le);
  den_ = dnorm;
  num_ = num_ * (Scalar(1) / s);
}

Fraction Fraction::operator-() const {
  Fraction out = *this;
  out.num_ = -out.num_;
  return out;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num() * b.num(), a.den() * b.den());
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.is_zero()) throw Error("division by zero fraction");
  return Fraction(a.num() * b.den(), a.den() * b.num());
}

bool operator==(const Fraction& a, const Fraction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

std::string render_fraction(const Fraction& f) {
  if (f.den().is_constant() && f.den().constant_value() == 1) return render_poly(f.num());
  std::string n = render_poly(f.num());
  std::string d = render_poly(f.den());
  auto is_atom = [](const MultiPoly& p) {
    if (p.terms().size() != 1) return false;
    const auto& [e, c] = *p.terms().begin();
    int total = 0;
    for (int k : e) total += k;
    return total == 0 || (c == 1 && total == 1);
  };
  bool n_atom = is_atom(f.num());
  bool d_atom = is_atom(f.den());
  std::string out = n_atom ? n : "(" + n + ")";
  out += "/";
  out += d_atom ? d : "(" + d + ")";
  return out;
}

}  // namespace equicoh
