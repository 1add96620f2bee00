#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "equicoh/errors.hpp"
#include "equicoh/linalg.hpp"
#include "equicoh/matrix.hpp"
#include "equicoh/poly.hpp"
#include "equicoh/series.hpp"
#include "equicoh/uni.hpp"

using namespace equicoh;

static MultiPoly V(const Ring& r, const std::string& n) { return MultiPoly::variable(r, n); }

TEST_CASE("ring and polynomial arithmetic") {
  Ring r = make_ring({{"x", 2}, {"y", 2}, {"v", 2}});
  MultiPoly x = V(r, "x"), y = V(r, "y"), v = V(r, "v");

  CHECK((x - v) * (x + v) == x * x - v * v);
  CHECK(render_poly(x * x - v * v) == "x^2 - v^2");
  CHECK(render_poly((x + y) * (x + y)) == "x^2 + 2*x*y + y^2");
  CHECK(render_poly(MultiPoly(Scalar(1) / 2) * x) == "1/2*x");
  CHECK(x.pow(3) == x * x * x);
  CHECK((x - x).is_zero());
  CHECK(MultiPoly(7).is_constant());
  CHECK(MultiPoly(7).constant_value() == 7);

  // weighted homogeneity is tracked through products
  auto d = ((x * y - v * v) * x).homogeneous_degree();
  REQUIRE(d);
  CHECK(*d == 6);
  CHECK(!(x + x * y).homogeneous_degree());

  // evaluation and substitution
  MultiPoly p = x * y - MultiPoly(2) * v;
  CHECK(p.eval({Scalar(3), Scalar(5), Scalar(4)}) == 7);
  MultiPoly q = p.substitute({y, x, v});  // swap x and y
  CHECK(q == y * x - MultiPoly(2) * v);

  // map_to matches variables by name
  Ring bigger = make_ring({{"w", 2}, {"x", 2}, {"y", 2}, {"v", 2}});
  MultiPoly moved = p.map_to(bigger);
  CHECK(moved == V(bigger, "x") * V(bigger, "y") - MultiPoly(2) * V(bigger, "v"));

  // derivative
  CHECK((x * x * y).derivative(0) == MultiPoly(2) * x * y);
  CHECK((x * x * y).derivative(2).is_zero());
}

TEST_CASE("gcd, exact division, primitive normalization") {
  Ring r = make_ring({{"x", 2}, {"y", 2}, {"v", 2}});
  MultiPoly x = V(r, "x"), y = V(r, "y"), v = V(r, "v");

  MultiPoly g = poly_gcd((x - v) * (x + v) * y, (x - v) * y * y);
  CHECK((g == (x - v) * y || g == -((x - v) * y)));

  auto q = poly_divide_exact((x * x - v * v) * y, x + v);
  REQUIRE(q);
  CHECK(*q == (x - v) * y);
  CHECK(!poly_divide_exact(x * x + v, x + v));
  auto zq = poly_divide_exact(MultiPoly(0), x + v);
  REQUIRE(zq);
  CHECK(zq->is_zero());
  CHECK_THROWS_AS(poly_divide_exact(x, MultiPoly(0)), Error);

  // content out, positive leading coefficient
  CHECK(normalize_primitive(MultiPoly(-6) * x + MultiPoly(4) * v) ==
        MultiPoly(3) * x - MultiPoly(2) * v);
  CHECK(normalize_primitive(MultiPoly(Scalar(1) / 3) * x) == x);
}

TEST_CASE("fractions reduce to lowest terms") {
  Ring r = make_ring({{"y", 2}, {"v", 2}});
  MultiPoly y = V(r, "y"), v = V(r, "v");

  Fraction f(y * (y - v), v * y * (y - v) * (y - v));
  CHECK(f == Fraction(MultiPoly(1), v * (y - v)));
  CHECK(render_fraction(f) == "1/(y*v - v^2)");

  Fraction a(MultiPoly(1), y), b(MultiPoly(1), v);
  CHECK(a + b == Fraction(y + v, y * v));
  CHECK(a * b == Fraction(MultiPoly(1), y * v));
  CHECK(a / b == Fraction(v, y));
  CHECK((a - a).is_zero());
  CHECK(-a == Fraction(MultiPoly(-1), y));
  CHECK_THROWS_AS(Fraction(y, MultiPoly(0)), Error);
}

TEST_CASE("univariate helpers and characteristic polynomials") {
  // (x-1)(x-2)^2
  UniPoly p{-4, 8, -5, 1};
  CHECK(uni_deg(p) == 3);
  CHECK(!uni_is_squarefree(p));
  UniPoly sq = uni_squarefree_part(p);
  CHECK(uni_deg(sq) == 2);
  CHECK(uni_eval(sq, Scalar(1)) == 0);
  CHECK(uni_eval(sq, Scalar(2)) == 0);
  CHECK(uni_eval(sq, Scalar(3)) != 0);
  CHECK(uni_is_squarefree(UniPoly{-2, 0, 1}));

  // gcd((x-1)(x-2)^2, (x-2)(x-3)) = x - 2 (monic)
  UniPoly g = uni_gcd(p, UniPoly{6, -5, 1});
  REQUIRE(uni_deg(g) == 1);
  CHECK(g[0] == -2);
  CHECK(g[1] == 1);

  // char_poly over a polynomial ring: [[0,1],[c,0]] -> x^2 - c
  Ring rc = make_ring({{"c", 2}});
  MultiPoly c = V(rc, "c");
  Matrix<MultiPoly> m(2, 2);
  m.at(0, 1) = MultiPoly(1);
  m.at(1, 0) = c;
  auto cp = char_poly(m);
  REQUIRE(cp.size() == 3);
  CHECK(cp[2] == MultiPoly(1));
  CHECK(cp[1].is_zero());
  CHECK(cp[0] == -c);

  // rational specialization: diag(1,2,3) gives (x-1)(x-2)(x-3)
  Matrix<Scalar> d(3, 3);
  d.at(0, 0) = 1;
  d.at(1, 1) = 2;
  d.at(2, 2) = 3;
  UniPoly cd = char_poly(d);
  CHECK(cd == UniPoly{-6, 11, -6, 1});
}

TEST_CASE("linear solving over the fraction field") {
  Ring rv = make_ring({{"v1", 2}, {"v2", 2}});
  MultiPoly v1 = V(rv, "v1"), v2 = V(rv, "v2");

  // the 3x3 conjugator system: m01 v1 = 1, m12 (v2-v1) = 1, m02 v2 = m12
  Matrix<MultiPoly> A(3, 3);
  A.at(0, 0) = v1;
  A.at(1, 2) = v2 - v1;
  A.at(2, 1) = v2;
  A.at(2, 2) = MultiPoly(-1);
  std::vector<MultiPoly> b{MultiPoly(1), MultiPoly(1), MultiPoly(0)};
  auto sol = solve_linear_over_fraction_field(A, b);
  CHECK(sol[0] == Fraction(MultiPoly(1), v1));
  CHECK(sol[1] == Fraction(MultiPoly(1), v2 * (v2 - v1)));
  CHECK(sol[2] == Fraction(MultiPoly(1), v2 - v1));

  Matrix<MultiPoly> S(2, 2);
  S.at(0, 0) = v1;
  S.at(0, 1) = v2;
  S.at(1, 0) = v1;
  S.at(1, 1) = v2;
  CHECK_THROWS_AS(solve_linear_over_fraction_field(S, {MultiPoly(1), MultiPoly(0)}),
                  SingularSystemError);
}

TEST_CASE("additive jordan decomposition") {
  Matrix<Scalar> jm(2, 2);
  jm.at(0, 0) = 1;
  jm.at(0, 1) = 1;
  jm.at(1, 1) = 1;
  auto [s, n] = jordan_additive(jm);
  CHECK(s == Matrix<Scalar>::identity(2));
  CHECK(n.at(0, 1) == 1);
  CHECK(n.at(0, 0) == 0);
  CHECK(s + n == jm);
  CHECK(s * n == n * s);

  // distinct eigenvalues with a nilpotent tail
  Matrix<Scalar> m(3, 3);
  m.at(0, 0) = 2;
  m.at(1, 1) = 2;
  m.at(2, 2) = -4;
  m.at(0, 1) = 1;
  m.at(1, 2) = 5;
  auto [s2, n2] = jordan_additive(m);
  CHECK(s2 + n2 == m);
  CHECK(s2 * n2 == n2 * s2);
  CHECK((n2 * n2 * n2) == Matrix<Scalar>(3, 3));

  // eigenvalues +-i are not rational
  Matrix<Scalar> rot(2, 2);
  rot.at(0, 1) = 1;
  rot.at(1, 0) = -1;
  CHECK_THROWS_AS(jordan_additive(rot), NotSplitError);
}

TEST_CASE("graded series bookkeeping") {
  HilbertSeries hs = hilbert_series_ci({2, 2}, {4});
  CHECK(hs.numerator == std::vector<long long>{1, 0, 1});
  CHECK(hs.denominator == std::vector<int>{2});
  CHECK(render_series(hs) == "(1 + t^2)/(1 - t^2)");
  CHECK(series_expand(hs, 8) == std::vector<long long>{1, 0, 2, 0, 2, 0, 2, 0, 2});

  HilbertSeries flag{{1, 0, 2, 0, 2, 0, 1}, {2, 2}};
  CHECK(series_expand(flag, 6) == std::vector<long long>{1, 0, 4, 0, 9, 0, 15});
  CHECK(render_series(flag) == "(1 + 2*t^2 + 2*t^4 + t^6)/((1 - t^2)^2)");

  CHECK(series_expand(HilbertSeries{{1, 0, 1, 0, 1, 0, 1}, {4}}, 9) ==
        std::vector<long long>{1, 0, 1, 0, 2, 0, 2, 0, 2, 0});

  CHECK(hilbert_series_ci({2}, {}) == HilbertSeries{{1}, {2}});
}
