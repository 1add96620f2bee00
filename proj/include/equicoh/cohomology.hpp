#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicoh/charts.hpp"
#include "equicoh/groebner.hpp"
#include "equicoh/lie.hpp"
#include "equicoh/series.hpp"

namespace equicoh {

// How the group acts and which base the zero scheme lives over.
//   Borel              e + sum v_i t_i; for an sl_2 group on a larger chart,
//                      pushed through the symmetric power with torus +v*h
//   Kostant            e + sum c_k b_k over the Kostant section (c_k weight 2k)
//   EmbeddedSl2Borel   symmetric power of e with torus -v*h (the Grassmannian
//                      example's sign convention)
//   EmbeddedSl2Kostant symmetric power of e + t*f (t weight 4)
enum class GroupForm { Borel, Kostant, EmbeddedSl2Borel, EmbeddedSl2Kostant };

inline bool solvable_form(GroupForm f) {
  return f == GroupForm::Borel || f == GroupForm::EmbeddedSl2Borel;
}

std::string form_name(GroupForm f);

// The zero scheme of the total vector field over the chosen base, with its
// complete-intersection certificate already verified.
struct ZeroScheme {
  GroupForm form = GroupForm::Borel;
  int group_n = 0;  // the group is sl_{group_n}
  Chart chart;      // coordinate weights filled
  Ring ring;        // chart coordinates first, then base variables
  Ring base_ring;   // base variables only
  std::vector<MultiPoly> generators;  // vector-field components, in `ring`
  Matrix<MultiPoly> matrix;           // the acting matrix e + w, over `ring`
  GroebnerBasis gb;                   // wdegrevlex basis of the ideal
  SlContext group;                    // principal triple of sl_{group_n}

  int base_dim() const { return static_cast<int>(base_ring->vars.size()); }
  bool solvable() const { return solvable_form(form); }
};

ZeroScheme build_zero_scheme(GroupForm form, int group_n, Chart chart,
                             const GroebnerOptions& opts = {});

// Presentation after triangular substitution of chart coordinates; verified
// to generate the same ideal as the raw vector-field components.
struct Presentation {
  Ring ring;                         // kept chart coordinates, then base
  std::vector<MultiPoly> relations;  // primitive, positive leading, component order
  std::vector<std::pair<std::string, std::string>> eliminated;  // name -> image
};
Presentation presentation(const ZeroScheme& z);

// Complete-intersection closed form, cross-checked against standard-monomial
// counts through the cutoff (VerificationError on mismatch).
HilbertSeries equivariant_hilbert_series(const ZeroScheme& z, int cutoff = 20);

// Point count of the fiber over one rational base point (which must give a
// regular matrix).
struct FiberReport {
  std::vector<Scalar> point;
  Int multiplicity = 0;
  std::optional<Int> distinct;
  bool radical_certified = false;
};
FiberReport fiber_check(const ZeroScheme& z, const std::vector<Scalar>& base_point);

// One irreducible component per fixed-point label: every chart coordinate as
// a homogeneous polynomial in the base variables.
struct ComponentAtlas {
  Ring base_ring;
  std::vector<FixedPointLabel> labels;
  std::vector<std::vector<MultiPoly>> params;  // [label][chart coordinate]
};
ComponentAtlas components(const ZeroScheme& z, int seed = 1);

// Per-degree dimensions (0..cutoff) of the image of the coordinate ring in
// the tuple algebra over the chosen components.
std::vector<long long> subalgebra_dims(const ZeroScheme& z, const ComponentAtlas& atlas,
                                       const std::vector<int>& labels, int cutoff);

// Weyl group action on (base, labels): one involutive generator per row.
struct WeylAction {
  std::vector<std::vector<int>> label_images;       // [generator][label] -> label
  std::vector<std::vector<MultiPoly>> base_images;  // [generator][base var] -> linear form
};
WeylAction weyl_action(const ZeroScheme& z);

// Per-degree dimensions of the Weyl-invariant part of the tuple subalgebra
// over the chosen components (the label subset must be Weyl-stable).
std::vector<long long> weyl_invariant_dims(const ZeroScheme& z, const ComponentAtlas& atlas,
                                           const std::vector<int>& labels, int cutoff);

// Moment graph of the fixed points: edges carry the character of the
// connecting one-dimensional orbit, as a linear form in the base variables.
struct GKMGraph {
  Ring base_ring;
  std::vector<FixedPointLabel> vertices;
  struct Edge {
    int a = 0, b = 0;
    MultiPoly character;
  };
  std::vector<Edge> edges;
};
GKMGraph gkm_graph(const ZeroScheme& z);

// Per-degree dimensions of tuples (f_v) of homogeneous polynomials with
// f_a - f_b divisible by the edge character.
std::vector<long long> gkm_ring_dims(const GKMGraph& graph, int cutoff);

// Chern-class localization: on every component, the fiber trace of the
// tautological sub-bundle equals the elementary symmetric polynomial of the
// fixed point's torus weights.  k runs over {1, rank}.
struct LocalizationEntry {
  std::string label;
  int k = 0;
  bool pass = false;
  std::string lhs, rhs;  // rendered, in the base variables
};
struct LocalizationReport {
  bool pass = true;
  std::vector<LocalizationEntry> entries;
};
LocalizationReport localization_check(const ZeroScheme& z, const ComponentAtlas& atlas);

// Diagonal entries of the acting matrix as linear forms in the base
// variables (the fixed-point weights of the tautological line at each slot).
std::vector<MultiPoly> slot_weights(const ZeroScheme& z);

// The basis involution c_k -> (-1)^k c_k on the Kostant base variables of
// p's ring (chart variables untouched).
MultiPoly kostant_sign_involution(const ZeroScheme& z, const MultiPoly& p);

// Deterministic rational base points whose evaluated matrix has a squarefree
// characteristic polynomial (hence is regular semisimple).  Same seed, same
// points.
std::vector<std::vector<Scalar>> sample_regular_points(const ZeroScheme& z, int count,
                                                       int seed = 1);

}  // namespace equicoh
