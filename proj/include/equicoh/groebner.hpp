#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicoh/poly.hpp"
#include "equicoh/scalar.hpp"

namespace equicoh {

struct GroebnerOptions {
  // Total reduction-step budget for one basis computation; exceeding it
  // raises ResourceError (deterministically, since the algorithm is).
  long long step_budget = 20'000'000;
};

struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  std::vector<MultiPoly> gens;  // reduced basis, canonical form and order
};

// Fully reduces p modulo gens (every term, not just the leading one).
// Reducers are tried in list order; the result is deterministic.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& gens,
                      const MonomialOrder& order, long long* budget = nullptr);

// Buchberger's algorithm with the coprimality and chain criteria, normal
// selection strategy (smallest lcm first).  Returns the unique reduced basis:
// primitive integer coefficients, positive leading coefficients, generators
// sorted by increasing leading monomial.
GroebnerBasis buchberger(const Ring& ring, const std::vector<MultiPoly>& gens,
                         const MonomialOrder& order, const GroebnerOptions& opts = {});

struct EliminationResult {
  // Relations among the kept variables, expressed in the subring.
  std::vector<MultiPoly> relations;
  // Substituted definitions: (dropped var index in the original ring, image).
  // Images are composed, i.e. free of every substituted variable.
  std::vector<std::pair<int, MultiPoly>> substitutions;
  Ring subring;
  bool used_groebner = false;  // block-order elimination was needed
};

// Eliminates the given variables from the ideal.  Variables admitting a
// triangular generator (constant * var + terms free of that var) are removed
// by substitution first; any that remain go through a block-order Groebner
// basis, keeping only relations free of the dropped variables.
EliminationResult eliminate(const Ring& ring, const std::vector<MultiPoly>& gens,
                            const std::vector<int>& drop_vars, const GroebnerOptions& opts = {});

// Substitution-only pass of `eliminate`: never runs Buchberger.  Returns the
// surviving generators still expressed in the full ring plus the composed
// substitutions actually performed (a subset of candidate_vars).
struct SubstitutionResult {
  std::vector<MultiPoly> remaining;
  std::vector<std::pair<int, MultiPoly>> substitutions;
};
SubstitutionResult triangular_substitution(const Ring& ring, const std::vector<MultiPoly>& gens,
                                           const std::vector<int>& candidate_vars);

// Krull dimension of ring/ideal from the leading-term ideal of a basis.
int krull_dimension(const GroebnerBasis& gb);

// Number of standard monomials (monomials outside the leading-term ideal)
// in each weighted degree 0..cutoff.  Every generator must be
// weighted-homogeneous; otherwise HomogeneityError names the offender.
std::vector<long long> standard_monomial_counts(const GroebnerBasis& gb, int cutoff);

// The standard monomials themselves, at one exact weighted degree.
std::vector<Expo> standard_monomials(const GroebnerBasis& gb, int degree);

struct SolutionCount {
  Int multiplicity;               // dim of the quotient algebra
  std::optional<Int> distinct;    // number of distinct points, when certified
  bool radical_certified = false; // all coordinate eliminants squarefree
};

// Point count of a zero-dimensional ideal.  The eliminant of each coordinate
// is the squarefree part of the characteristic polynomial of its
// multiplication operator on the quotient; if every eliminant certifies
// squarefree membership in the ideal, the ideal is radical and distinct
// equals multiplicity.  If every eliminant is linear, the variety is a
// single point.
SolutionCount count_solutions_zero_dim(const GroebnerBasis& gb);

}  // namespace equicoh
