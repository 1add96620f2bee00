#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/scalar.hpp"

namespace equicoh {

// A polynomial variable: name plus positive integer weight (cohomological
// degree of the corresponding generator).
struct VarSpec {
  std::string name;
  int weight = 2;
  friend bool operator==(const VarSpec& a, const VarSpec& b) {
    return a.name == b.name && a.weight == b.weight;
  }
};

struct RingDesc {
  std::vector<VarSpec> vars;
  int index_of(const std::string& name) const;
  friend bool operator==(const RingDesc& a, const RingDesc& b) { return a.vars == b.vars; }
};

using Ring = std::shared_ptr<const RingDesc>;

Ring make_ring(std::vector<VarSpec> vars);

// Exponent vector; size equals the ring's variable count.
using Expo = std::vector<int>;

int weighted_degree_of(const RingDesc& ring, const Expo& e);

// Monomial order: weighted degrevlex, or a block (elimination) order whose
// front block is compared first (each block internally weighted degrevlex).
struct MonomialOrder {
  enum class Kind { WDegRevLex, Block };
  Kind kind = Kind::WDegRevLex;
  std::vector<int> front;  // variable indices forming the front block

  static MonomialOrder wdegrevlex() { return {}; }
  static MonomialOrder block(std::vector<int> front_vars);
};

// Three-way comparison in the given order: negative, zero, positive as a<b,
// a==b, a>b.
int cmp_expo(const RingDesc& ring, const MonomialOrder& order, const Expo& a, const Expo& b);

// Multivariate polynomial with rational coefficients over a shared ring.
// A default-constructed polynomial is the zero constant of the "null ring";
// constants of the null ring coerce into any ring on combination, which makes
// Matrix<MultiPoly> and generic algorithms work without threading a ring
// descriptor everywhere.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(constant(Scalar(c))) {}
  MultiPoly(const Scalar& c) : MultiPoly(constant(c)) {}

  static MultiPoly constant(const Scalar& c);
  static MultiPoly constant(const Ring& ring, const Scalar& c);
  static MultiPoly variable(const Ring& ring, int index);
  static MultiPoly variable(const Ring& ring, const std::string& name);

  const Ring& ring() const { return ring_; }
  const std::map<Expo, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // requires is_constant()

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(int k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Weighted degree of the highest term; -1 for the zero polynomial.
  int weighted_degree() const;
  // Degree if every term has the same weighted degree (zero counts as any).
  std::optional<int> homogeneous_degree() const;

  int degree_in(int var) const;
  bool depends_on(int var) const { return degree_in(var) > 0; }

  MultiPoly derivative(int var) const;
  // Replace each variable by its image; all images must live in (or coerce
  // to) one common ring, which becomes the result's ring.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  Scalar eval(const std::vector<Scalar>& point) const;
  // Re-express in `target`, matching variables by name; fails if a variable
  // actually used here is missing from the target.
  MultiPoly map_to(const Ring& target) const;

  // Coefficient of var^k, as a polynomial in the same ring (var removed from
  // the support of the result).
  MultiPoly coeff_of(int var, int k) const;

  void add_term(Expo e, const Scalar& c);  // accumulate, dropping zeros

 private:
  Ring ring_;                   // null => constant-only polynomial
  std::map<Expo, Scalar> terms_;

  friend struct PolyAccess;
};

// Unifies the rings of two polynomials (null coerces); throws RingMismatchError.
Ring unify_rings(const MultiPoly& a, const MultiPoly& b);
MultiPoly coerce_to(const MultiPoly& p, const Ring& ring);

// Leading exponent in the given order; polynomial must be nonzero.
const Expo& leading_expo(const MultiPoly& p, const MonomialOrder& order);
Scalar leading_coeff(const MultiPoly& p, const MonomialOrder& order);

// Canonical text rendering: terms in decreasing order, explicit * and ^,
// with the exact coefficients of the polynomial.
std::string render_poly(const MultiPoly& p, const MonomialOrder& order = MonomialOrder::wdegrevlex());

// Scale to primitive integer coefficients with positive leading coefficient.
MultiPoly normalize_primitive(const MultiPoly& p, const MonomialOrder& order = MonomialOrder::wdegrevlex());

// Exact polynomial division: a/b when b divides a, nullopt otherwise.
std::optional<MultiPoly> poly_divide_exact(const MultiPoly& a, const MultiPoly& b);

// Multivariate gcd (primitive pseudo-remainder sequences), normalized to
// primitive integer coefficients with positive leading coefficient.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Reduced fraction of polynomials.  The denominator is kept primitive with
// positive leading coefficient; rational content lives in the numerator.
class Fraction {
 public:
  Fraction() : num_(MultiPoly::constant(0)), den_(MultiPoly::constant(1)) {}
  Fraction(int v) : Fraction(Scalar(v)) {}
  Fraction(const Scalar& c) : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
  Fraction(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(1)) {}
  Fraction(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Fraction operator-() const;
  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
  Fraction& operator/=(const Fraction& o) { return *this = *this / o; }
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

 private:
  MultiPoly num_;
  MultiPoly den_;
  void reduce();
};

std::string render_fraction(const Fraction& f);

}  // namespace equicoh
