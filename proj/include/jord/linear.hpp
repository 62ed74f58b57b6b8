#pragma once
#include <optional>
#include <vector>

#include "jord/scalar.hpp"

namespace jord {

using Vec = std::vector<Scalar>;

struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  static Matrix identity(int n);

  Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_zero() const;
};

Matrix kron(const Matrix& a, const Matrix& b);
Scalar det(Matrix m);

// in-place reduced row echelon form; returns pivot column indices
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// one solution of m x = b, or nullopt if inconsistent
std::optional<Vec> solve(const Matrix& m, const Vec& b);
// rows form an rref basis of the nullspace
Matrix kernel_basis(const Matrix& m);

struct Subspace {
  int ambient = 0;
  Matrix basis;              // rref rows, no zero rows
  std::vector<int> pivots;   // pivot column of each row

  static Subspace span(int ambient, const std::vector<Vec>& gens);
  static Subspace full(int ambient);
  int dim() const { return basis.rows; }
  // v minus its projection onto the span (pivot elimination); zero iff contained
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  // coordinates of v in the row basis, or nullopt if v is outside
  std::optional<Vec> coords_of(const Vec& v) const;
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
// Zassenhaus intersection
Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);

// even/odd pair of subspaces of the graded coordinate blocks
struct GradedSubspace {
  Subspace even, odd;
  int dim() const { return even.dim() + odd.dim(); }
  bool operator==(const GradedSubspace& o) const { return even == o.even && odd == o.odd; }
  bool contains(const GradedSubspace& o) const { return even.contains(o.even) && odd.contains(o.odd); }
};

}  // namespace jord
