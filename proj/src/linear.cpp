#include "jord/linear.hpp"

#include <stdexcept>

namespace jord {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix add: shape mismatch");
  Matrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] + o.a[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix sub: shape mismatch");
  Matrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] - o.a[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix mul: shape mismatch");
  Matrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Scalar& aik = at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (sgn(o.at(k, j)) == 0) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (int(v.size()) != cols) throw std::invalid_argument("matrix-vector mul: shape mismatch");
  Vec r(rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (sgn(at(i, j)) != 0 && sgn(v[j]) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r(rows, cols);
  for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows * b.rows, a.cols * b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) {
      if (sgn(a.at(i, j)) == 0) continue;
      for (int k = 0; k < b.rows; ++k)
        for (int l = 0; l < b.cols; ++l)
          r.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Scalar det(Matrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  Scalar d(1);
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int r = col; r < m.rows; ++r)
      if (sgn(m.at(r, col)) != 0) { piv = r; break; }
    if (piv < 0) return Scalar(0);
    if (piv != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (sgn(m.at(r, col)) == 0) continue;
      Scalar f = m.at(r, col) / m.at(col, col);
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(col, j);
    }
  }
  return d;
}

std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (sgn(m.at(r, col)) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    Scalar inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      Scalar f = m.at(r, col);
      for (int j = col; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(Matrix m) { return int(rref(m).size()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (int(piv.size()) != n || (n > 0 && piv.back() != n - 1)) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (int(b.size()) != m.rows) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto piv = rref(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  Vec x(m.cols);
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(int(r), m.cols);
  return x;
}

Matrix kernel_basis(const Matrix& m) {
  Matrix red = m;
  auto piv = rref(red);
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (pi < piv.size() && piv[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Matrix ker(int(free_cols.size()), m.cols);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    ker.at(int(k), fc) = 1;
    for (size_t r = 0; r < piv.size(); ++r) ker.at(int(k), piv[r]) = -red.at(int(r), fc);
  }
  rref(ker);  // canonical form
  return ker;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& gens) {
  Matrix m(int(gens.size()), ambient);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (int(gens[i].size()) != ambient) throw std::invalid_argument("span: generator size mismatch");
    for (int j = 0; j < ambient; ++j) m.at(int(i), j) = gens[i][j];
  }
  Subspace s;
  s.ambient = ambient;
  s.pivots = rref(m);
  Matrix b(int(s.pivots.size()), ambient);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = m.at(i, j);
  s.basis = std::move(b);
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> rows;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    rows.push_back(v);
  }
  return span(ambient, rows);
}

Vec Subspace::reduce(Vec v) const {
  if (int(v.size()) != ambient) throw std::invalid_argument("reduce: size mismatch");
  for (int r = 0; r < basis.rows; ++r) {
    const Scalar& c = v[pivots[r]];
    if (sgn(c) == 0) continue;
    Scalar f = c;  // pivot entries are 1
    for (int j = 0; j < ambient; ++j)
      if (sgn(basis.at(r, j)) != 0) v[j] -= f * basis.at(r, j);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (const auto& x : r)
    if (sgn(x) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient != ambient) return false;
  for (int r = 0; r < s.basis.rows; ++r) {
    Vec v(ambient);
    for (int j = 0; j < ambient; ++j) v[j] = s.basis.at(r, j);
    if (!contains(v)) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(dim());
  for (int r = 0; r < basis.rows; ++r) c[r] = v[pivots[r]];
  return c;
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<Vec> rows;
  for (int r = 0; r < s1.basis.rows; ++r) {
    Vec v(s1.ambient);
    for (int j = 0; j < s1.ambient; ++j) v[j] = s1.basis.at(r, j);
    rows.push_back(v);
  }
  for (int r = 0; r < s2.basis.rows; ++r) {
    Vec v(s2.ambient);
    for (int j = 0; j < s2.ambient; ++j) v[j] = s2.basis.at(r, j);
    rows.push_back(v);
  }
  return Subspace::span(s1.ambient, rows);
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient != s2.ambient) throw std::invalid_argument("subspace_intersect: ambient mismatch");
  int n = s1.ambient;
  // Zassenhaus block matrix [A A; B 0]
  Matrix z(s1.basis.rows + s2.basis.rows, 2 * n);
  for (int r = 0; r < s1.basis.rows; ++r)
    for (int j = 0; j < n; ++j) {
      z.at(r, j) = s1.basis.at(r, j);
      z.at(r, n + j) = s1.basis.at(r, j);
    }
  for (int r = 0; r < s2.basis.rows; ++r)
    for (int j = 0; j < n; ++j) z.at(s1.basis.rows + r, j) = s2.basis.at(r, j);
  rref(z);
  std::vector<Vec> rows;
  for (int r = 0; r < z.rows; ++r) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (sgn(z.at(r, j)) != 0) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    bool nz = false;
    for (int j = 0; j < n; ++j) {
      v[j] = z.at(r, n + j);
      if (sgn(v[j]) != 0) nz = true;
    }
    if (nz) rows.push_back(v);
  }
  return Subspace::span(n, rows);
}

}  // namespace jord
