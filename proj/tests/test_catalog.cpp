#include "doctest.h"

#include "jord/catalog.hpp"
#include "jord/identities.hpp"

using namespace jord;

namespace {

bool three_sweeps_pass(const SuperAlgebra& a) {
  return check_grading(a).pass && check_supercommutativity(a).pass &&
         check_super_jordan(a).pass;
}

}  // namespace

TEST_CASE("the three-dimensional algebra has the expected table") {
  SuperAlgebra k3 = make_k3();
  REQUIRE(k3.dim_even == 1);
  REQUIRE(k3.dim_odd == 2);
  Element e = Element::basis(k3, 0), x = Element::basis(k3, 1), y = Element::basis(k3, 2);
  CHECK((e * e) == e);
  CHECK((e * x) == x.scaled(rat(1, 2)));
  CHECK((x * y) == e);
  CHECK((y * x) == e.scaled(rat(-1)));
  CHECK((x * x).is_zero());
  CHECK(three_sweeps_pass(k3));
}

TEST_CASE("the one-parameter family") {
  for (const Scalar& t : {rat(-3), rat(-6), rat(1), rat(2), rat(-3, 2)}) {
    SuperAlgebra d = make_dt(t);
    REQUIRE(d.dim_even == 2);
    REQUIRE(d.dim_odd == 2);
    Element e = Element::basis(d, 0), f = Element::basis(d, 1);
    Element u = Element::basis(d, 2), v = Element::basis(d, 3);
    CHECK((e * e) == e);
    CHECK((f * f) == f);
    CHECK((e * f).is_zero());
    CHECK((u * v) == e + f.scaled(t));
    CHECK((v * u) == (e + f.scaled(t)).scaled(rat(-1)));
    CHECK((e * u) == u.scaled(rat(1, 2)));
    CHECK((f * v) == v.scaled(rat(1, 2)));
    CHECK(three_sweeps_pass(d));
  }
  CHECK_THROWS_AS(make_dt(rat(0)), std::invalid_argument);
}

TEST_CASE("the ten-dimensional table matches the published products") {
  SuperAlgebra k10 = make_k10_table();
  REQUIRE(k10.dim_even == 6);
  REQUIRE(k10.dim_odd == 4);
  auto el = [&](const char* l) { return Element::basis(k10, k10.index_of(l)); };
  Element e = el("e"), a = el("a"), b = el("b"), c1 = el("c1"), c2 = el("c2"), f = el("f");
  Element p1 = el("p1"), p2 = el("p2"), q1 = el("q1"), q2 = el("q2");

  // even part
  CHECK((e * e) == e);
  CHECK((e * a) == a);
  CHECK((e * f).is_zero());
  CHECK((f * f) == f);
  CHECK((a * a) == e.scaled(rat(4)));
  CHECK((b * b) == e.scaled(rat(-4)));
  CHECK((c1 * c2) == e.scaled(rat(2)));
  CHECK((c1 * c1).is_zero());
  CHECK((a * b).is_zero());

  // even on odd
  CHECK((e * p1) == p1.scaled(rat(1, 2)));
  CHECK((f * q2) == q2.scaled(rat(1, 2)));
  CHECK((a * p1) == p1);
  CHECK((a * q1) == q1.scaled(rat(-1)));
  CHECK((b * p1) == q1);
  CHECK((b * q2) == p2.scaled(rat(-1)));
  CHECK((c1 * p2) == q1);
  CHECK((c1 * q2) == p1);
  CHECK((c2 * p1) == q2);
  CHECK((c2 * q1) == p2);
  CHECK((c1 * p1).is_zero());
  CHECK((c2 * p2).is_zero());

  // odd times odd
  CHECK((p1 * p2) == e.scaled(rat(2)) + a - f.scaled(rat(6)));
  CHECK((p2 * p1) == (e.scaled(rat(2)) + a - f.scaled(rat(6))).scaled(rat(-1)));
  CHECK((p1 * q1) == c1.scaled(rat(2)));
  CHECK((p1 * q2) == b);
  CHECK((p2 * q1) == b.scaled(rat(-1)));
  CHECK((p2 * q2) == c2.scaled(rat(-2)));
  CHECK((q1 * q2) == a - e.scaled(rat(2)) + f.scaled(rat(6)));
  CHECK((p1 * p1).is_zero());
  CHECK((q2 * q2).is_zero());
}

TEST_CASE("the tensor model is unital with the formal unit") {
  SuperAlgebra t = make_k10_tensor();
  REQUIRE(t.dim_even == 6);
  REQUIRE(t.dim_odd == 4);
  REQUIRE(t.basis[0] == "1");
  Element one = Element::basis(t, 0);
  for (int k = 0; k < t.dim(); ++k) {
    Element xk = Element::basis(t, k);
    CHECK((one * xk) == xk);
    CHECK((xk * one) == xk);
  }
  // (e@e)(e@e) = ee@ee - 3/4 (e|e)^2 1 = e@e - (3/16) 1
  Element ee = Element::basis(t, t.index_of("e@e"));
  Element expect = ee + one.scaled(rat(-3, 16));
  CHECK((ee * ee) == expect);
  // (x@x)(y@y): inner slots are odd, so the sign flips:
  //   -(xy@xy - 3/4 (x|y)(x|y) 1) = -e@e + (3/4) 1
  Element xx = Element::basis(t, t.index_of("x@x"));
  Element yy = Element::basis(t, t.index_of("y@y"));
  CHECK((xx * yy) == ee.scaled(rat(-1)) + one.scaled(rat(3, 4)));
  // (e@x)(x@e) = -(ex@xe) = -(1/4) x@x (no form term, (e|x) = 0)
  Element ex = Element::basis(t, t.index_of("e@x"));
  Element xe = Element::basis(t, t.index_of("x@e"));
  CHECK((ex * xe) == xx.scaled(rat(-1, 4)));
}

TEST_CASE("bilinear-form algebra") {
  Matrix g(2, 2);
  g.at(0, 0) = rat(1);
  g.at(1, 1) = rat(1);
  SuperAlgebra j = make_bilinear_jordan(g);
  REQUIRE(j.dim() == 3);
  Element one = Element::basis(j, 0), v1 = Element::basis(j, 1), v2 = Element::basis(j, 2);
  CHECK((v1 * v1) == one);
  CHECK((v1 * v2).is_zero());
  CHECK((one * v2) == v2);
  CHECK(check_jordan(j).pass);
  CHECK(check_super_jordan(j).pass);  // agrees on purely even input

  // 0x0 form: the ground field
  SuperAlgebra ground = make_bilinear_jordan(Matrix(0, 0));
  CHECK(ground.dim() == 1);
  CHECK(check_jordan(ground).pass);

  Matrix bad(2, 2);
  bad.at(0, 1) = rat(1);  // not symmetric
  CHECK_THROWS_AS(make_bilinear_jordan(bad), std::invalid_argument);
  Matrix sing(1, 1);  // not invertible
  CHECK_THROWS_AS(make_bilinear_jordan(sing), std::invalid_argument);
}

TEST_CASE("superform algebra") {
  Matrix ge = Matrix::identity(2);
  Matrix go(2, 2);
  go.at(0, 1) = rat(1);
  go.at(1, 0) = rat(-1);
  SuperAlgebra s = make_superform_algebra(ge, go);
  REQUIRE(s.dim_even == 3);
  REQUIRE(s.dim_odd == 2);
  Element e = Element::basis(s, 0);
  Element w1 = Element::basis(s, 3), w2 = Element::basis(s, 4);
  CHECK((w1 * w2) == e);
  CHECK((w2 * w1) == e.scaled(rat(-1)));
  CHECK((w1 * w1).is_zero());
  CHECK(three_sweeps_pass(s));
  // symmetric odd form is rejected
  CHECK_THROWS_AS(make_superform_algebra(ge, Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("symmetrization of the 2x2 matrix algebra") {
  SuperAlgebra m2 = make_full_matrix_algebra(2);
  CHECK(m2.dim() == 4);
  // associative but not commutative: supercommutativity fails, first witness
  // in sweep order is (E11, E12)
  IdentityReport sc = check_supercommutativity(m2);
  CHECK(!sc.pass);
  REQUIRE(!sc.witnesses.empty());
  CHECK(sc.witnesses.front().at == std::vector<int>{0, 1});

  SuperAlgebra plus = make_plus(m2);
  Element e11 = Element::basis(plus, 0), e12 = Element::basis(plus, 1);
  CHECK((e11 * e12) == e12.scaled(rat(1, 2)));
  CHECK(check_supercommutativity(plus).pass);
  CHECK(check_jordan(plus).pass);
}

TEST_CASE("make_plus rejects non-associative input") {
  // a graded supercommutative table that is not associative
  SuperAlgebra k3 = make_k3();
  CHECK_THROWS_AS(make_plus(k3), std::invalid_argument);
}

TEST_CASE("exterior algebra") {
  SuperAlgebra g3 = make_grassmann(3);
  CHECK(g3.dim_even == 4);
  CHECK(g3.dim_odd == 4);
  CHECK(g3.basis[0] == "1");
  // generators anticommute and square to zero
  int x1 = -1, x2 = -1;
  for (int k = g3.dim_even; k < g3.dim(); ++k) {
    if (x1 < 0)
      x1 = k;
    else if (x2 < 0)
      x2 = k;
  }
  Element a = Element::basis(g3, x1), b = Element::basis(g3, x2);
  CHECK((a * a).is_zero());
  CHECK((a * b) == (b * a).scaled(rat(-1)));
  CHECK(check_grading(g3).pass);
  CHECK(check_supercommutativity(g3).pass);
  CHECK_THROWS_AS(make_grassmann(0), std::invalid_argument);
  CHECK_THROWS_AS(make_grassmann(9), std::invalid_argument);
}

TEST_CASE("the even part splits into two verified ideals") {
  SuperAlgebra k10 = make_k10_table();
  auto [small, big] = even_part_ideals(k10);
  CHECK(small.even.dim() + big.even.dim() == 6);
  CHECK(small.odd.dim() == 0);
  CHECK(big.odd.dim() == 0);
  CHECK((small.even.dim() == 1) != (big.even.dim() == 1));  // one of each size
}
