#include "doctest.h"

#include "jord/linear.hpp"
#include "jord/scalar.hpp"

using namespace jord;

namespace {

Matrix mat(int r, int c, std::vector<long> vals) {
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar(vals[size_t(i) * c + j]);
  return m;
}

Vec vec(std::vector<long> vals) {
  Vec v;
  for (long x : vals) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("matrix arithmetic is exact") {
  Matrix a = mat(2, 2, {1, 2, 3, 4});
  Matrix b = mat(2, 2, {0, 1, -1, 0});
  CHECK((a * b) == mat(2, 2, {-2, 1, -4, 3}));
  CHECK((a + b) == mat(2, 2, {1, 3, 2, 4}));
  CHECK((a - a).is_zero());
  CHECK(a.scaled(rat(1, 2)).at(1, 1) == rat(2));
  CHECK(a.transpose().at(0, 1) == Scalar(3));
  CHECK((a * vec({1, 1})) == vec({3, 7}));
}

TEST_CASE("kron follows the row-major block convention") {
  Matrix a = mat(2, 2, {1, 2, 3, 4});
  Matrix b = Matrix::identity(2);
  Matrix k = kron(a, b);
  REQUIRE(k.rows == 4);
  REQUIRE(k.cols == 4);
  CHECK(k.at(0, 0) == Scalar(1));
  CHECK(k.at(0, 2) == Scalar(2));
  CHECK(k.at(1, 3) == Scalar(2));
  CHECK(k.at(2, 0) == Scalar(3));
  CHECK(k.at(3, 3) == Scalar(4));
  CHECK(det(k) == det(a) * det(a));  // det(A (x) I2) = det(A)^2
}

TEST_CASE("determinant with fractional entries") {
  Matrix m = mat(2, 2, {1, 2, 3, 4});
  CHECK(det(m) == Scalar(-2));
  Matrix d(4, 4);
  d.at(0, 0) = rat(1);
  d.at(1, 1) = rat(2);
  d.at(2, 2) = rat(1, 2);
  d.at(3, 3) = rat(1);
  CHECK(det(d) == rat(1));
  CHECK(det(Matrix::identity(0)) == rat(1));
}

TEST_CASE("rref, rank and inverse") {
  Matrix m = mat(3, 3, {2, 4, 6, 1, 2, 3, 0, 0, 5});
  CHECK(rank(m) == 2);
  auto piv = rref(m);
  CHECK(piv == std::vector<int>{0, 2});
  CHECK(m.at(0, 1) == Scalar(2));  // normalized leading row

  Matrix r = mat(2, 2, {1, 2, 3, 4});
  auto inv = inverse(r);
  REQUIRE(inv.has_value());
  CHECK((*inv * r) == Matrix::identity(2));
  CHECK(inverse(mat(2, 2, {1, 2, 2, 4})) == std::nullopt);

  // the empty matrix is its own inverse
  auto inv0 = inverse(Matrix(0, 0));
  REQUIRE(inv0.has_value());
  CHECK(inv0->rows == 0);
}

TEST_CASE("solve distinguishes consistent from inconsistent systems") {
  Matrix m = mat(2, 2, {1, 1, 2, 2});
  CHECK(solve(m, vec({3, 6})).has_value());
  CHECK(solve(m, vec({3, 7})) == std::nullopt);
  auto x = solve(mat(2, 2, {1, 2, 3, 4}), vec({5, 11}));
  REQUIRE(x.has_value());
  CHECK((mat(2, 2, {1, 2, 3, 4}) * *x) == vec({5, 11}));
}

TEST_CASE("kernel basis satisfies rank-nullity and lies in the kernel") {
  Matrix m = mat(2, 4, {1, 0, 2, 0, 0, 1, 0, 3});
  Matrix k = kernel_basis(m);
  CHECK(k.rows == 2);
  for (int r = 0; r < k.rows; ++r) {
    Vec v(4);
    for (int j = 0; j < 4; ++j) v[size_t(j)] = k.at(r, j);
    CHECK((m * v) == Vec(2));
  }
  CHECK(kernel_basis(Matrix::identity(3)).rows == 0);
}

TEST_CASE("subspace span, membership and coordinates") {
  auto s = Subspace::span(3, {vec({1, 1, 0}), vec({2, 2, 0}), vec({0, 0, 1})});
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec({3, 3, 7})));
  CHECK(!s.contains(vec({1, 0, 0})));
  auto c = s.coords_of(vec({3, 3, 7}));
  REQUIRE(c.has_value());
  CHECK(*c == vec({3, 7}));
  CHECK(s.coords_of(vec({1, 0, 0})) == std::nullopt);
  CHECK(s.reduce(vec({1, 1, 1})) == vec({0, 0, 0}));

  CHECK(Subspace::span(3, {}).dim() == 0);
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace::full(0).dim() == 0);
}

TEST_CASE("echelon basis is canonical: same space, same matrix") {
  auto s1 = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
  auto s2 = Subspace::span(3, {vec({1, 1, 2}), vec({2, 5, 7})});
  CHECK(s1 == s2);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  auto s1 = Subspace::span(4, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})});
  auto s2 = Subspace::span(4, {vec({0, 1, 0, 0}), vec({0, 0, 1, 0})});
  auto sum = subspace_sum(s1, s2);
  auto inter = subspace_intersect(s1, s2);
  CHECK(sum.dim() == 3);
  CHECK(inter.dim() == 1);
  CHECK(sum.dim() + inter.dim() == s1.dim() + s2.dim());
  CHECK(inter.contains(vec({0, 1, 0, 0})));
}

TEST_CASE("graded subspace containment is blockwise") {
  GradedSubspace a{Subspace::span(2, {vec({1, 0})}), Subspace::full(2)};
  GradedSubspace b{Subspace::span(2, {vec({1, 0})}), Subspace::span(2, {vec({0, 1})})};
  CHECK(a.contains(b));
  CHECK(!b.contains(a));
  CHECK(a.dim() == 3);
}
