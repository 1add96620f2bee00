#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/lie.hpp"

using namespace equicoh;

static MultiPoly V(const Ring& r, const std::string& n) { return MultiPoly::variable(r, n); }

TEST_CASE("principal triple and centralizer") {
  SlContext c3 = principal_triple(3);
  CHECK(c3.f.at(1, 0) == 2);
  CHECK(c3.f.at(2, 1) == 2);
  CHECK(c3.f.at(2, 0) == 0);
  CHECK(c3.h.at(0, 0) == 2);
  CHECK(c3.h.at(1, 1) == 0);
  CHECK(c3.h.at(2, 2) == -2);
  // the triple relations
  CHECK(commutator(c3.h, c3.e) == c3.e.scaled(Scalar(2)));
  CHECK(commutator(c3.h, c3.f) == c3.f.scaled(Scalar(-2)));
  CHECK(commutator(c3.e, c3.f) == c3.h);
  CHECK(c3.roots.size() == 6);

  KostantSection sec = centralizer_basis(c3);
  REQUIRE(sec.basis.size() == 2);
  CHECK(sec.basis[0].at(1, 0) == 1);
  CHECK(sec.basis[0].at(2, 1) == 1);
  CHECK(sec.basis[1].at(2, 0) == 1);
  CHECK(sec.basis[1].at(1, 0) == 0);
  CHECK(sec.coordinate_degrees == std::vector<int>{4, 6});
  // every basis element commutes with f
  for (const auto& b : sec.basis) {
    auto bm = b.map([](const Scalar& s) { return MultiPoly(s); });
    auto fm = c3.f.map([](const Scalar& s) { return MultiPoly(s); });
    CHECK(commutator(bm, fm) == Matrix<MultiPoly>(3, 3));
  }
}

TEST_CASE("kostant section points") {
  SlContext c3 = principal_triple(3);
  Ring rc = make_ring({{"c2", 4}, {"c3", 6}});
  auto K = kostant_point(c3, {V(rc, "c2"), V(rc, "c3")});
  CHECK(render_poly(K.at(1, 0)) == "c2");
  CHECK(render_poly(K.at(2, 0)) == "c3");
  CHECK(render_poly(K.at(2, 1)) == "c2");
  CHECK(render_poly(K.at(0, 1)) == "1");
  CHECK(render_poly(K.at(1, 2)) == "1");
  CHECK(K.at(0, 0).is_zero());

  // section elements at generic rational values are regular
  auto K2 = kostant_point(c3, {MultiPoly(Scalar(3) / 2), MultiPoly(Scalar(-7))});
  Matrix<Scalar> K2s(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) K2s.at(i, j) = K2.at(i, j).constant_value();
  CHECK(is_regular(K2s));
}

TEST_CASE("kostant coordinates of a diagonal element") {
  SlContext c2 = principal_triple(2);
  Ring rt = make_ring({{"t", 2}});
  MultiPoly t = V(rt, "t");
  auto cc = chi(c2, {t, -t});
  REQUIRE(cc.size() == 1);
  CHECK(cc[0] == t * t);

  SlContext c3 = principal_triple(3);
  auto cc3 = chi(c3, {MultiPoly(1), MultiPoly(0), MultiPoly(-1)});
  REQUIRE(cc3.size() == 2);
  CHECK(cc3[0].is_constant());
  CHECK(cc3[0].constant_value() == Scalar(1) / 2);
  CHECK(cc3[1].is_zero());

  auto cc0 = chi(c3, {MultiPoly(0), MultiPoly(0), MultiPoly(0)});
  CHECK(cc0[0].is_zero());
  CHECK(cc0[1].is_zero());

  // defining property: kostant_point(chi(w)) and e + w share char polys
  Ring rv = make_ring({{"v1", 2}, {"v2", 2}});
  MultiPoly v1 = V(rv, "v1"), v2 = V(rv, "v2");
  MultiPoly shift = (v1 + v2) * MultiPoly(Scalar(1) / 3);
  std::vector<MultiPoly> diag = {MultiPoly(0) - shift, v1 - shift, v2 - shift};
  auto c = chi(c3, diag);
  auto K = kostant_point(c3, c);
  Matrix<MultiPoly> ew(3, 3);
  for (int i = 0; i < 3; ++i) ew.at(i, i) = diag[i];
  ew.at(0, 1) = MultiPoly(1);
  ew.at(1, 2) = MultiPoly(1);
  auto cpK = char_poly(K);
  auto cpW = char_poly(ew);
  REQUIRE(cpK.size() == cpW.size());
  for (size_t i = 0; i < cpK.size(); ++i) CHECK(cpK[i] == cpW[i]);
}

TEST_CASE("uniform diagonalizer") {
  Ring rv = make_ring({{"v1", 2}, {"v2", 2}});
  MultiPoly v1 = V(rv, "v1"), v2 = V(rv, "v2");
  std::vector<MultiPoly> diag = {MultiPoly::constant(rv, Scalar(0)), v1, v2};
  auto mw = uniform_diagonalizer(diag);
  CHECK(mw.at(0, 1) == Fraction(MultiPoly(1), v1));
  CHECK(mw.at(0, 2) == Fraction(MultiPoly(1), v2 * (v2 - v1)));
  CHECK(mw.at(1, 2) == Fraction(MultiPoly(1), v2 - v1));
  CHECK(mw.at(1, 0) == Fraction(0));
  CHECK(mw.at(0, 0) == Fraction(MultiPoly(1)));

  // the defining identity M w = (e + w) M, as fraction matrices
  Matrix<Fraction> W(3, 3), EW(3, 3);
  for (int i = 0; i < 3; ++i) {
    W.at(i, i) = Fraction(diag[i]);
    EW.at(i, i) = Fraction(diag[i]);
  }
  EW.at(0, 1) = Fraction(1);
  EW.at(1, 2) = Fraction(1);
  CHECK(mw * W == EW * mw);

  // n = 2: diag(a, -a) -> 1/(2a) in the corner, sign from -a - a
  Ring ra = make_ring({{"a", 2}});
  MultiPoly a = V(ra, "a");
  auto mw2 = uniform_diagonalizer({a, -a});
  CHECK(mw2.at(0, 1) == Fraction(MultiPoly(1), a * Scalar(-2)));

  // rational fast path agrees with the closed form
  auto mv = uniform_diagonalizer_values({Scalar(0), Scalar(2), Scalar(5)});
  CHECK(mv.at(0, 1) == Scalar(1) / 2);
  CHECK(mv.at(1, 2) == Scalar(1) / 3);
  CHECK(mv.at(0, 2) == Scalar(1) / 15);

  CHECK_THROWS_AS(uniform_diagonalizer_values({Scalar(1), Scalar(1)}), RegularityError);
  try {
    uniform_diagonalizer_values({Scalar(1), Scalar(1)});
  } catch (const RegularityError& e) {
    CHECK(e.vanishing_roots.size() == 1);
  }
}

TEST_CASE("regularity of matrices") {
  SlContext c3 = principal_triple(3);
  CHECK(is_regular(c3.e));

  Matrix<Scalar> d4(4, 4);
  Scalar vals[4] = {2, 1, 3, 7};
  Scalar tr = 0;
  for (int i = 0; i < 4; ++i) tr += vals[i];
  for (int i = 0; i < 4; ++i) d4.at(i, i) = vals[i] - tr / 4;
  CHECK(is_regular(d4));

  Matrix<Scalar> jj(4, 4);  // two nilpotent blocks centralize too much
  jj.at(0, 1) = 1;
  jj.at(2, 3) = 1;
  CHECK(!is_regular(jj));
}

TEST_CASE("symmetric power representation") {
  auto h3 = sym_power_rep<Scalar>(3, 0, 0, 1);
  CHECK(h3.at(0, 0) == 3);
  CHECK(h3.at(1, 1) == 1);
  CHECK(h3.at(2, 2) == -1);
  CHECK(h3.at(3, 3) == -3);

  // sl2 relations survive the functor
  auto e4 = sym_power_rep<Scalar>(4, 1, 0, 0);
  auto f4 = sym_power_rep<Scalar>(4, 0, 1, 0);
  auto h4 = sym_power_rep<Scalar>(4, 0, 0, 1);
  CHECK(commutator(e4, f4) == h4);
  CHECK(commutator(h4, e4) == e4.scaled(Scalar(2)));
  CHECK(commutator(h4, f4) == f4.scaled(Scalar(-2)));

  // symbolic coefficients work too
  Ring rv = make_ring({{"v", 2}});
  auto ev = sym_power_rep<MultiPoly>(2, MultiPoly(1), MultiPoly(0), V(rv, "v"));
  CHECK(ev.at(0, 0) == MultiPoly(2) * V(rv, "v"));
  CHECK(ev.at(1, 2) == MultiPoly(1));
}

TEST_CASE("weyl orbits of label permutations") {
  std::vector<int> flip{4, 3, 2, 1, 0};
  auto orb = weyl_orbits(5, {flip});
  REQUIRE(orb.size() == 3);
  CHECK(orb[0] == std::vector<int>{0, 4});
  CHECK(orb[1] == std::vector<int>{1, 3});
  CHECK(orb[2] == std::vector<int>{2});

  // two transpositions generating S3 on {0,1,2}: one orbit
  auto s3 = weyl_orbits(3, {{1, 0, 2}, {0, 2, 1}});
  REQUIRE(s3.size() == 1);
  CHECK(s3[0] == std::vector<int>{0, 1, 2});
}
