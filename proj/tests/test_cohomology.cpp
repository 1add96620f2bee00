#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equicoh/cohomology.hpp"
#include "equicoh/errors.hpp"
#include "equicoh/lie.hpp"

using namespace equicoh;

static MultiPoly V(const Ring& r, const std::string& n) { return MultiPoly::variable(r, n); }

TEST_CASE("torus scheme on the projective plane") {
  auto z = build_zero_scheme(GroupForm::Borel, 3, projective_chart(2));
  CHECK(z.base_dim() == 2);
  CHECK(z.solvable());

  auto p = presentation(z);
  REQUIRE(p.relations.size() == 1);
  MultiPoly x = V(p.ring, "x1"), v1 = V(p.ring, "v1"), v2 = V(p.ring, "v2");
  CHECK(p.relations[0] == x * (x - v1) * (x - v2));
  REQUIRE(p.eliminated.size() == 1);
  CHECK(p.eliminated[0].first == "x2");
  CHECK(p.eliminated[0].second == "x1^2 - x1*v1");

  auto atlas = components(z);
  REQUIRE(atlas.params.size() == 3);
  auto b1 = V(z.base_ring, "v1"), b2 = V(z.base_ring, "v2");
  CHECK(atlas.params[0][0].is_zero());
  CHECK(atlas.params[1][0] == b1);
  CHECK(atlas.params[2][0] == b2);

  auto hs = equivariant_hilbert_series(z, 12);
  CHECK(hs == HilbertSeries{{1, 0, 1, 0, 1}, {2, 2}});

  // regular fiber: three reduced points; degenerate fiber: one fat point
  auto fib = fiber_check(z, {Scalar(1), Scalar(3)});
  CHECK(fib.multiplicity == 3);
  REQUIRE(fib.distinct);
  CHECK(*fib.distinct == 3);
  CHECK(fib.radical_certified);
  auto fib0 = fiber_check(z, {Scalar(0), Scalar(0)});
  CHECK(fib0.multiplicity == 3);
  REQUIRE(fib0.distinct);
  CHECK(*fib0.distinct == 1);
  CHECK(!fib0.radical_certified);

  // three counting paths agree
  auto counts = standard_monomial_counts(z.gb, 12);
  CHECK(series_expand(hs, 12) == counts);
  CHECK(subalgebra_dims(z, atlas, {0, 1, 2}, 12) == counts);

  auto graph = gkm_graph(z);
  REQUIRE(graph.edges.size() == 3);
  CHECK(gkm_ring_dims(graph, 12) == counts);

  auto loc = localization_check(z, atlas);
  CHECK(loc.pass);
  CHECK(loc.entries.size() == 3);
}

TEST_CASE("regular-section scheme on the projective plane") {
  auto z = build_zero_scheme(GroupForm::Kostant, 3, projective_chart(2));
  CHECK(!z.solvable());
  auto p = presentation(z);
  REQUIRE(p.relations.size() == 1);
  MultiPoly x = V(p.ring, "x1"), c2 = V(p.ring, "c2"), c3 = V(p.ring, "c3");
  CHECK(p.relations[0] == x * x * x - MultiPoly(2) * c2 * x - c3);

  // invariants of the torus scheme match the section scheme degreewise
  auto zb = build_zero_scheme(GroupForm::Borel, 3, projective_chart(2));
  auto atlas = components(zb);
  CHECK(weyl_invariant_dims(zb, atlas, {0, 1, 2}, 12) == standard_monomial_counts(z.gb, 12));

  // fiber over c = (1, 1): x^3 - 2x - 1 = (x + 1)(x^2 - x - 1)
  auto fib = fiber_check(z, {Scalar(1), Scalar(1)});
  CHECK(fib.multiplicity == 3);
  REQUIRE(fib.distinct);
  CHECK(*fib.distinct == 3);
  CHECK(fib.radical_certified);
}

TEST_CASE("embedded sl2 pair on the grassmannian") {
  auto z = build_zero_scheme(GroupForm::EmbeddedSl2Borel, 2, grassmannian_chart(2, 4));
  auto p = presentation(z);
  REQUIRE(p.relations.size() == 2);
  REQUIRE(p.eliminated.size() == 2);
  MultiPoly x1 = V(p.ring, "x1"), y1 = V(p.ring, "y1"), v = V(p.ring, "v");
  MultiPoly g1 = x1 * (x1 + MultiPoly(24) * v * v - MultiPoly(8) * v * y1 + y1 * y1);
  MultiPoly g2 =
      (y1 - MultiPoly(4) * v) * (MultiPoly(2) * x1 - MultiPoly(2) * v * y1 + y1 * y1);
  std::set<std::string> got{render_poly(p.relations[0]), render_poly(p.relations[1])};
  std::set<std::string> want{render_poly(g1), render_poly(g2)};
  CHECK(got == want);
  CHECK(p.eliminated[0].first == "x2");
  CHECK(p.eliminated[0].second == render_poly(x1 * y1 - MultiPoly(4) * v * x1));
  CHECK(p.eliminated[1].first == "y2");
  CHECK(p.eliminated[1].second == render_poly(x1 + y1 * y1 - MultiPoly(2) * v * y1));

  auto atlas = components(z);
  REQUIRE(atlas.params.size() == 6);
  MultiPoly bv = V(z.base_ring, "v");
  MultiPoly zero = MultiPoly::constant(z.base_ring, Scalar(0));
  std::vector<std::pair<MultiPoly, MultiPoly>> fam = {
      {zero, zero},
      {zero, MultiPoly(2) * bv},
      {MultiPoly(-8) * bv * bv, MultiPoly(4) * bv},
      {zero, MultiPoly(4) * bv},
      {MultiPoly(-12) * bv * bv, MultiPoly(6) * bv},
      {MultiPoly(-24) * bv * bv, MultiPoly(8) * bv},
  };
  std::set<std::string> gotfam, wantfam;
  for (size_t i = 0; i < 6; ++i) {
    gotfam.insert(render_poly(atlas.params[i][0]) + ";" + render_poly(atlas.params[i][1]));
    wantfam.insert(render_poly(fam[i].first) + ";" + render_poly(fam[i].second));
  }
  CHECK(gotfam == wantfam);

  auto loc = localization_check(z, atlas);
  CHECK(loc.pass);
  CHECK(loc.entries.size() == 12);  // k = 1 and k = 2 over six points
}

TEST_CASE("embedded sl2 relations on projective spaces") {
  auto z4 = build_zero_scheme(GroupForm::EmbeddedSl2Kostant, 2, projective_chart(4));
  auto p4 = presentation(z4);
  REQUIRE(p4.relations.size() == 1);
  MultiPoly x = V(p4.ring, "x1"), t = V(p4.ring, "t");
  CHECK(p4.relations[0] == x * (x * x - MultiPoly(4) * t) * (x * x - MultiPoly(16) * t));

  // invariants of the embedded torus scheme match the section scheme
  auto zb = build_zero_scheme(GroupForm::EmbeddedSl2Borel, 2, projective_chart(4));
  auto atlas = components(zb);
  CHECK(weyl_invariant_dims(zb, atlas, {0, 1, 2, 3, 4}, 12) ==
        standard_monomial_counts(z4.gb, 12));
}

TEST_CASE("flag variety families and regular-section relations") {
  auto z = build_zero_scheme(GroupForm::Borel, 3, flag_chart(3));
  auto atlas = components(z);
  REQUIRE(atlas.params.size() == 6);
  MultiPoly v1 = V(z.base_ring, "v1"), v2 = V(z.base_ring, "v2");
  MultiPoly zero = MultiPoly::constant(z.base_ring, Scalar(0));
  std::set<std::string> got, want;
  std::vector<std::pair<MultiPoly, MultiPoly>> fam = {
      {zero, zero}, {v1, zero},      {v1, v2},
      {v2, v2},     {zero, v2 - v1}, {v2, v2 - v1},
  };
  for (const auto& [pa, pc] : fam) want.insert(render_poly(pa) + ";" + render_poly(pc));
  for (size_t i = 0; i < 6; ++i) {
    got.insert(render_poly(atlas.params[i][0]) + ";" + render_poly(atlas.params[i][2]));
    // the middle coordinate is determined by the first
    CHECK(atlas.params[i][1] == atlas.params[i][0] * (atlas.params[i][0] - v1));
  }
  CHECK(got == want);

  CHECK(equivariant_hilbert_series(z, 12) == HilbertSeries{{1, 0, 2, 0, 2, 0, 1}, {2, 2}});
  auto graph = gkm_graph(z);
  CHECK(graph.edges.size() == 9);
  CHECK(gkm_ring_dims(graph, 12) == standard_monomial_counts(z.gb, 12));

  // kostant form: both relations match the reference set up to one global
  // sign involution on the base coordinates
  auto zk = build_zero_scheme(GroupForm::Kostant, 3, flag_chart(3));
  auto pk = presentation(zk);
  REQUIRE(pk.relations.size() == 2);
  MultiPoly a = V(pk.ring, "a"), c = V(pk.ring, "c");
  MultiPoly c2 = V(pk.ring, "c2"), c3 = V(pk.ring, "c3");
  std::set<std::string> literal = {
      render_poly(a * a * a - MultiPoly(2) * c2 * a + c3),
      render_poly(a * a - a * c + c * c - MultiPoly(2) * c2)};
  std::set<std::string> direct, flipped;
  for (const auto& rel : pk.relations) {
    direct.insert(render_poly(rel));
    flipped.insert(render_poly(
        normalize_primitive(kostant_sign_involution(zk, rel.map_to(zk.ring)).map_to(pk.ring))));
  }
  CHECK((direct == literal || flipped == literal));

  // the involution squares to the identity
  MultiPoly sample = pk.relations[0].map_to(zk.ring);
  CHECK(kostant_sign_involution(zk, kostant_sign_involution(zk, sample)) == sample);
}

TEST_CASE("iterated bundle scheme") {
  auto z = build_zero_scheme(GroupForm::Borel, 3, bott_samelson_chart(3, {1, 2, 1}));
  auto p = presentation(z);
  REQUIRE(p.relations.size() == 3);
  CHECK(p.eliminated.empty());

  // x_j^2 + sum_{k<j} cartan(w_k, w_j) x_k x_j + alpha_{w_j} x_j
  std::vector<int> word{1, 2, 1};
  auto alpha = [&](int root) {
    return coerce_to(z.matrix.at(root - 1, root - 1), z.ring) -
           coerce_to(z.matrix.at(root, root), z.ring);
  };
  auto cartan = [](int a, int b) { return a == b ? 2 : (a - b == 1 || b - a == 1) ? -1 : 0; };
  for (int j = 0; j < 3; ++j) {
    MultiPoly xj = V(z.ring, "x" + std::to_string(j + 1));
    MultiPoly rel = xj * xj;
    for (int k = 0; k < j; ++k)
      rel = rel + MultiPoly(cartan(word[k], word[j])) * V(z.ring, "x" + std::to_string(k + 1)) * xj;
    rel = rel + alpha(word[j]) * xj;
    CHECK(p.relations[j] == normalize_primitive(rel));
  }

  CHECK(equivariant_hilbert_series(z, 12) == HilbertSeries{{1, 0, 3, 0, 3, 0, 1}, {2, 2}});
  auto atlas = components(z);
  CHECK(atlas.params.size() == 8);
  auto fib = fiber_check(z, {Scalar(2), Scalar(9)});
  CHECK(fib.multiplicity == 8);
  REQUIRE(fib.distinct);
  CHECK(*fib.distinct == 8);
}

TEST_CASE("schubert divisor restriction") {
  auto z = build_zero_scheme(GroupForm::EmbeddedSl2Borel, 2, projective_chart(3));
  auto atlas = components(z);
  // all four fixed points: the binary-form discriminant locus
  CHECK(weyl_invariant_dims(z, atlas, {0, 1, 2, 3}, 12) ==
        series_expand(HilbertSeries{{1, 0, 1, 0, 1, 0, 1}, {4}}, 12));
}

TEST_CASE("deterministic regular point sampling") {
  auto z = build_zero_scheme(GroupForm::Borel, 3, projective_chart(2));
  auto pts = sample_regular_points(z, 5, 1);
  REQUIRE(pts.size() == 5);
  CHECK(pts[0] == std::vector<Scalar>{1, 2});
  CHECK(pts[4] == std::vector<Scalar>{9, 10});
  CHECK(sample_regular_points(z, 5, 1) == pts);      // same seed, same points
  CHECK(sample_regular_points(z, 5, 2) != pts);      // new seed, new points
  for (const auto& pt : pts) {
    auto fib = fiber_check(z, pt);
    CHECK(fib.multiplicity == 3);
    REQUIRE(fib.distinct);
    CHECK(*fib.distinct == 3);
    CHECK(fib.radical_certified);
  }

  // reductive base: the congruential stream with a squarefree certificate
  auto zk = build_zero_scheme(GroupForm::Kostant, 3, projective_chart(2));
  auto kpts = sample_regular_points(zk, 5, 7);
  REQUIRE(kpts.size() == 5);
  CHECK(sample_regular_points(zk, 5, 7) == kpts);
  for (const auto& pt : kpts) {
    auto fib = fiber_check(zk, pt);
    CHECK(fib.multiplicity == 3);
    REQUIRE(fib.distinct);
    CHECK(*fib.distinct == 3);
  }

  CHECK_THROWS_AS(sample_regular_points(z, 0), Error);
}

TEST_CASE("zero scheme construction rejects bad shapes") {
  // full-torus forms need the group acting on the ambient space
  CHECK_THROWS_AS(build_zero_scheme(GroupForm::Borel, 4, projective_chart(2)), Error);
  CHECK_THROWS_AS(build_zero_scheme(GroupForm::Kostant, 3, projective_chart(3)), Error);
  // iterated bundle charts carry only solvable actions
  CHECK_THROWS_AS(build_zero_scheme(GroupForm::Kostant, 3, bott_samelson_chart(3, {1})), Error);
}
