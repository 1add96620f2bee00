#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "equicoh/charts.hpp"
#include "equicoh/errors.hpp"
#include "equicoh/groebner.hpp"
#include "equicoh/lie.hpp"

using namespace equicoh;

static MultiPoly V(const Ring& r, const std::string& n) { return MultiPoly::variable(r, n); }

static Matrix<MultiPoly> lift(const Matrix<Scalar>& m) {
  return m.map([](const Scalar& s) { return MultiPoly(s); });
}

TEST_CASE("projective chart vector field") {
  auto ctx = principal_triple(4);
  Chart p3 = projective_chart(3);
  CHECK(coordinate_weights(p3, ctx.h) == std::vector<int>{2, 4, 6});
  Ring r = chart_ring(p3);
  auto field = vector_field(p3, r, lift(ctx.e));
  MultiPoly x1 = V(r, "x1"), x2 = V(r, "x2"), x3 = V(r, "x3");
  REQUIRE(field.size() == 3);
  CHECK(field[0] == x2 - x1 * x1);
  CHECK(field[1] == x3 - x1 * x2);
  CHECK(field[2] == -(x1 * x3));
  // each component is homogeneous of coordinate weight + 2
  for (size_t j = 0; j < field.size(); ++j) {
    auto hd = field[j].homogeneous_degree();
    REQUIRE(hd);
    CHECK(*hd == p3.coordinates[j].weight + 2);
  }
  REQUIRE(p3.labels.size() == 4);
  CHECK(p3.labels[0].text == "0");
  CHECK(p3.labels[3].text == "3");
}

TEST_CASE("grassmannian chart vector field and traces") {
  auto ctx = principal_triple(4);
  Chart gr = grassmannian_chart(2, 4);
  CHECK(coordinate_weights(gr, ctx.h) == std::vector<int>{4, 2, 6, 4});
  Ring r = chart_ring(gr);
  auto field = vector_field(gr, r, lift(ctx.e));
  MultiPoly x1 = V(r, "x1"), y1 = V(r, "y1"), x2 = V(r, "x2"), y2 = V(r, "y2");
  CHECK(field[0] == x2 - x1 * y1);
  CHECK(field[1] == -x1 - y1 * y1 + y2);
  CHECK(field[2] == -(x1 * y2));
  CHECK(field[3] == -x2 - y1 * y2);
  for (size_t j = 0; j < field.size(); ++j) {
    auto hd = field[j].homogeneous_degree();
    REQUIRE(hd);
    CHECK(*hd == gr.coordinates[j].weight + 2);
  }
  REQUIRE(gr.labels.size() == 6);
  CHECK(gr.labels[0].text == "{1,2}");
  CHECK(gr.labels[5].text == "{3,4}");

  MultiPoly t1 = chern_trace(gr, Bundle::TautologicalSub, 1, r, lift(ctx.e));
  CHECK(t1 == y1);
  Matrix<MultiPoly> zero(4, 4);
  CHECK(chern_trace(gr, Bundle::TautologicalSub, 2, r, zero).is_zero());
}

TEST_CASE("rank-one grassmannian equals projective space") {
  auto ctx = principal_triple(4);
  Chart g = grassmannian_chart(1, 4);
  Chart p = projective_chart(3);
  coordinate_weights(g, ctx.h);
  coordinate_weights(p, ctx.h);
  Ring rg = chart_ring(g), rp = chart_ring(p);
  CHECK(*rg == *rp);
  // a generic traceless sample gives identical fields
  Matrix<Scalar> m(4, 4);
  int v = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = ((i * 5 + j * 3 + v++) % 7) - 3;
  m.at(3, 3) -= m.trace();
  auto fg = vector_field(g, rg, m);
  auto fp = vector_field(p, rp, m);
  REQUIRE(fg.size() == fp.size());
  for (size_t i = 0; i < fg.size(); ++i) CHECK(fg[i] == fp[i].map_to(rg));
}

TEST_CASE("flag chart vector field") {
  auto ctx = principal_triple(3);
  Chart fl = flag_chart(3);
  CHECK(coordinate_weights(fl, ctx.h) == std::vector<int>{2, 4, 2});
  Ring r = chart_ring(fl);
  auto field = vector_field(fl, r, lift(ctx.e));
  MultiPoly a = V(r, "a"), b = V(r, "b"), c = V(r, "c");
  CHECK(field[0] == -(a * a) + b);
  CHECK(field[1] == -(a * b));
  CHECK(field[2] == -b + a * c - c * c);
  for (size_t j = 0; j < field.size(); ++j) {
    auto hd = field[j].homogeneous_degree();
    REQUIRE(hd);
    CHECK(*hd == fl.coordinates[j].weight + 2);
  }
  REQUIRE(fl.labels.size() == 6);
  CHECK(fl.labels[0].text == "123");
  CHECK(fl.labels[5].text == "321");

  // borel elements fix the center: their fields vanish at the origin
  Matrix<Scalar> m1(3, 3), m2(3, 3);
  m1.at(0, 0) = 1;
  m1.at(2, 2) = -1;
  m1.at(0, 1) = 2;
  m1.at(1, 2) = -1;
  m1.at(0, 2) = 3;
  m2.at(0, 0) = 2;
  m2.at(1, 1) = -3;
  m2.at(2, 2) = 1;
  m2.at(0, 1) = 1;
  m2.at(1, 2) = 4;
  std::vector<Scalar> origin(3, 0);
  for (const auto& f : vector_field(fl, r, commutator(m1, m2)))
    CHECK((f.is_zero() || f.eval(origin) == 0));
}

TEST_CASE("bott-samelson chart vector field") {
  auto ctx = principal_triple(3);
  Chart bs = bott_samelson_chart(3, {1, 2, 1});
  CHECK(coordinate_weights(bs, ctx.h) == std::vector<int>{2, 2, 2});
  Ring r = chart_ring(bs);
  auto field = vector_field(bs, r, lift(ctx.e));
  MultiPoly x1 = V(r, "x1"), x2 = V(r, "x2"), x3 = V(r, "x3");
  CHECK(field[0] == -(x1 * x1));
  CHECK(field[1] == x1 * x2 - x2 * x2);
  CHECK(field[2] == MultiPoly(-2) * x1 * x3 + x2 * x3 - x3 * x3);
  REQUIRE(bs.labels.size() == 8);
  CHECK(bs.labels[0].text == "000");
  CHECK(bs.labels[7].text == "111");

  // only upper-triangular inputs act on the iterated bundle chart
  Matrix<Scalar> bad(3, 3);
  bad.at(1, 0) = 1;
  CHECK_THROWS_AS(vector_field(bs, r, lift(bad)), Error);
}

TEST_CASE("fixed point coordinates") {
  auto id4 = Matrix<Scalar>::identity(4);
  for (auto& x : fixed_point_coordinates(projective_chart(3), projective_chart(3).labels[0], id4))
    CHECK(x == 0);
  Chart g = grassmannian_chart(2, 4);
  for (auto& x : fixed_point_coordinates(g, g.labels[0], id4)) CHECK(x == 0);
  Chart fl = flag_chart(4);
  for (auto& x : fixed_point_coordinates(fl, fl.labels[0], id4)) CHECK(x == 0);

  // symbolic conjugator pushes the fixed points to v-linear coordinates
  Ring base = make_ring({{"v1", 2}, {"v2", 2}});
  std::vector<MultiPoly> diag{MultiPoly(0), V(base, "v1"), V(base, "v2")};
  Matrix<Fraction> mw = uniform_diagonalizer(diag);
  Chart p2 = projective_chart(2);
  auto c0 = fixed_point_coordinates(p2, p2.labels[0], mw);
  auto c1 = fixed_point_coordinates(p2, p2.labels[1], mw);
  auto c2 = fixed_point_coordinates(p2, p2.labels[2], mw);
  CHECK(c0[0] == Fraction(0));
  CHECK(c0[1] == Fraction(0));
  CHECK(c1[0] == Fraction(V(base, "v1")));
  CHECK(c2[0] == Fraction(V(base, "v2")));

  // a vanishing leading minor names itself
  Matrix<Fraction> rot(3, 3);
  rot.at(0, 2) = Fraction(1);
  rot.at(1, 0) = Fraction(1);
  rot.at(2, 1) = Fraction(1);
  CHECK_THROWS_AS(fixed_point_coordinates(p2, p2.labels[0], rot), ChartError);
}

TEST_CASE("chern trace with symbolic matrix") {
  Chart p1 = projective_chart(1);
  Ring r = make_ring({{"x1", 2}, {"u0", 2}, {"u1", 2}});
  Matrix<MultiPoly> m(2, 2);
  m.at(0, 0) = V(r, "u0");
  m.at(1, 1) = V(r, "u1");
  m.at(0, 1) = MultiPoly(1);
  MultiPoly t = chern_trace(p1, Bundle::TautologicalSub, 1, r, m);
  CHECK(t == V(r, "u0") + V(r, "x1"));
  CHECK_THROWS_AS(chern_trace(p1, Bundle::TautologicalQuotient, 1, r, m), Error);
}

TEST_CASE("principal nilpotent fields cut out a fat origin") {
  auto check = [](Chart ch, int n) {
    auto ctx = principal_triple(n);
    coordinate_weights(ch, ctx.h);
    Ring r = chart_ring(ch);
    auto field = vector_field(ch, r, lift(ctx.e));
    auto gb = buchberger(r, field, MonomialOrder::wdegrevlex());
    CHECK(krull_dimension(gb) == 0);
    auto sc = count_solutions_zero_dim(gb);
    REQUIRE(sc.distinct);
    CHECK(*sc.distinct == 1);
    CHECK(sc.multiplicity == static_cast<long long>(ch.labels.size()));
  };
  check(projective_chart(2), 3);
  check(grassmannian_chart(2, 4), 4);
  check(flag_chart(3), 3);
  check(bott_samelson_chart(3, {1, 2, 1}), 3);
}
