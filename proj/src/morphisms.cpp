#include "jord/morphisms.hpp"

#include <stdexcept>

namespace jord {

namespace {

constexpr size_t kMaxWitnesses = 16;

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

Scalar det2(const Matrix& m) {
  return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

Matrix inv2(const Matrix& m) {
  // only used on unimodular matrices
  Matrix r(2, 2);
  r.at(0, 0) = m.at(1, 1);
  r.at(0, 1) = -m.at(0, 1);
  r.at(1, 0) = -m.at(1, 0);
  r.at(1, 1) = m.at(0, 0);
  Scalar d = det2(m);
  require(sgn(d) != 0, "singular 2x2 matrix");
  return r.scaled(Scalar(1) / d);
}

Matrix mat2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Matrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// the exchange s@t -> -t@s on V coordinates (xx, xy, yx, yy)
Matrix exchange_v() {
  Matrix e(4, 4);
  e.at(0, 0) = Scalar(-1);
  e.at(1, 2) = Scalar(-1);
  e.at(2, 1) = Scalar(-1);
  e.at(3, 3) = Scalar(-1);
  return e;
}

}  // namespace

Element Morphism::apply(const Element& x) const {
  require(x.alg == from, "morphism applied to an element of the wrong algebra");
  return Element::from(*to, m * x.v);
}

Element Morphism::image_of(int j) const {
  Vec v(size_t(to->dim()));
  for (int r = 0; r < to->dim(); ++r) v[size_t(r)] = m.at(r, j);
  return Element::from(*to, std::move(v));
}

Morphism Morphism::identity(const SuperAlgebra& a) {
  return {&a, &a, Matrix::identity(a.dim())};
}

Morphism Morphism::from_images(const SuperAlgebra& from, const SuperAlgebra& to,
                               const std::vector<Vec>& images) {
  if (int(images.size()) != from.dim())
    throw std::invalid_argument("from_images: need one image per source basis vector");
  Matrix m(to.dim(), from.dim());
  for (int j = 0; j < from.dim(); ++j) {
    if (int(images[size_t(j)].size()) != to.dim())
      throw std::invalid_argument("from_images: image has wrong dimension");
    for (int r = 0; r < to.dim(); ++r) m.at(r, j) = images[size_t(j)][size_t(r)];
  }
  return {&from, &to, std::move(m)};
}

Morphism compose(const Morphism& f, const Morphism& g) {
  require(g.to == f.from, "compose: inner/outer algebras do not match");
  return {g.from, f.to, f.m * g.m};
}

std::optional<Morphism> inverse(const Morphism& m) {
  if (m.m.rows != m.m.cols) return std::nullopt;
  auto inv = inverse(m.m);
  if (!inv) return std::nullopt;
  return Morphism{m.to, m.from, std::move(*inv)};
}

IdentityReport is_homomorphism(const Morphism& m, Exec ex) {
  IdentityReport rep;
  rep.identity = "homomorphism";
  const SuperAlgebra& a = *m.from;
  const SuperAlgebra& b = *m.to;
  // parity preservation column by column
  for (int j = 0; j < a.dim(); ++j) {
    for (int r = 0; r < b.dim(); ++r)
      if (sgn(m.m.at(r, j)) != 0 && b.parity(r) != a.parity(j)) {
        ++rep.total_defects;
        if (rep.witnesses.size() < kMaxWitnesses) {
          Vec d(size_t(b.dim()));
          d[size_t(r)] = m.m.at(r, j);
          rep.witnesses.push_back({{j, r}, std::move(d), "parity-column"});
        }
        break;
      }
  }
  int n = a.dim();
  std::vector<Element> img;
  img.reserve(size_t(n));
  for (int j = 0; j < n; ++j) img.push_back(m.image_of(j));
  struct Cell {
    bool bad = false;
    Vec d;
  };
  std::vector<Cell> cells(size_t(n) * n);
  auto body = [&](long idx) {
    int i = int(idx / n), j = int(idx % n);
    Element lhs = m.apply(Element::basis(a, i) * Element::basis(a, j));
    Element rhs = img[size_t(i)] * img[size_t(j)];
    Element d = lhs - rhs;
    if (!d.is_zero()) cells[size_t(idx)] = {true, std::move(d.v)};
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long idx = 0; idx < long(n) * n; ++idx) body(idx);
  } else {
    for (long idx = 0; idx < long(n) * n; ++idx) body(idx);
  }
  for (long idx = 0; idx < long(n) * n; ++idx)
    if (cells[size_t(idx)].bad) {
      ++rep.total_defects;
      if (rep.witnesses.size() < kMaxWitnesses)
        rep.witnesses.push_back(
            {{int(idx / n), int(idx % n)}, std::move(cells[size_t(idx)].d), "product-pair"});
    }
  rep.pass = rep.total_defects == 0;
  return rep;
}

bool is_isomorphism(const Morphism& m) {
  if (m.m.rows != m.m.cols) return false;
  if (!is_homomorphism(m).pass) return false;
  return inverse(m.m).has_value();
}

Morphism grading_automorphism(const SuperAlgebra& a) {
  Matrix m(a.dim(), a.dim());
  for (int i = 0; i < a.dim(); ++i) m.at(i, i) = a.parity(i) ? Scalar(-1) : Scalar(1);
  return {&a, &a, std::move(m)};
}

Morphism k10_tensor_iso(const SuperAlgebra& k10, const SuperAlgebra& tensor) {
  // images written against target labels so the basis orders stay decoupled
  const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Scalar>>>> images =
      {
          {"e", {{"1", rat(3, 2)}, {"e@e", Scalar(-2)}}},
          {"a", {{"x@x", Scalar(-4)}, {"y@y", Scalar(-1)}}},
          {"b", {{"x@x", Scalar(-4)}, {"y@y", Scalar(1)}}},
          {"c1", {{"x@y", Scalar(2)}}},
          {"c2", {{"y@x", Scalar(-2)}}},
          {"f", {{"1", rat(-1, 2)}, {"e@e", Scalar(2)}}},
          {"p1", {{"x@e", Scalar(4)}, {"e@y", Scalar(-2)}}},
          {"p2", {{"e@x", Scalar(-4)}, {"y@e", Scalar(-2)}}},
          {"q1", {{"x@e", Scalar(4)}, {"e@y", Scalar(2)}}},
          {"q2", {{"e@x", Scalar(-4)}, {"y@e", Scalar(2)}}},
      };
  Matrix m(tensor.dim(), k10.dim());
  for (const auto& [src, terms] : images) {
    int j = k10.index_of(src);
    require(j >= 0, "iso: source algebra lacks basis vector " + src);
    for (const auto& [lbl, c] : terms) {
      int r = tensor.index_of(lbl);
      require(r >= 0, "iso: target algebra lacks basis vector " + lbl);
      m.at(r, j) = c;
    }
  }
  Morphism iso{&k10, &tensor, std::move(m)};
  require(is_isomorphism(iso), "iso: verification failed on the supplied models");
  return iso;
}

WreathElement WreathElement::make(Matrix f, Matrix g, bool swapped) {
  if (f.rows != 2 || f.cols != 2 || g.rows != 2 || g.cols != 2)
    throw std::invalid_argument("wreath element: matrices must be 2x2");
  if (det2(f) != Scalar(1) || det2(g) != Scalar(1))
    throw std::invalid_argument("wreath element: determinants must be 1");
  return {std::move(f), std::move(g), swapped};
}

WreathElement WreathElement::identity() {
  return {Matrix::identity(2), Matrix::identity(2), false};
}

WreathElement WreathElement::canonical() const {
  for (const Scalar& c : f.a) {
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) return {f.scaled(Scalar(-1)), g.scaled(Scalar(-1)), swapped};
    break;
  }
  return *this;
}

WreathElement wreath_compose(const WreathElement& a, const WreathElement& b) {
  // moving the exchange of `a` past the pair of `b` swaps that pair
  const Matrix& bf = a.swapped ? b.g : b.f;
  const Matrix& bg = a.swapped ? b.f : b.g;
  return {a.f * bf, a.g * bg, a.swapped != b.swapped};
}

WreathElement wreath_invert(const WreathElement& a) {
  if (!a.swapped) return {inv2(a.f), inv2(a.g), false};
  return {inv2(a.g), inv2(a.f), true};
}

Matrix tensor_v_gram() {
  Matrix b(4, 4);
  b.at(0, 3) = Scalar(1);
  b.at(1, 2) = Scalar(-1);
  b.at(2, 1) = Scalar(-1);
  b.at(3, 0) = Scalar(1);
  return b;
}

OrthogonalMap OrthogonalMap::make(Matrix m) {
  if (m.rows != 4 || m.cols != 4) throw NotOrthogonal("V-map must be 4x4");
  Matrix b = tensor_v_gram();
  if (!(m.transpose() * b * m == b))
    throw NotOrthogonal("map does not preserve the pairing on V");
  return {std::move(m)};
}

Morphism tensor_exchange(const SuperAlgebra& tensor) {
  return phi(tensor, WreathElement::make(Matrix::identity(2), Matrix::identity(2), true));
}

Morphism lift_sp_to_k3(const SuperAlgebra& k3, const Matrix& f) {
  if (f.rows != 2 || f.cols != 2 || det2(f) != Scalar(1))
    throw std::invalid_argument("k3 lift: need a 2x2 matrix of determinant 1");
  require(k3.dim_even == 1 && k3.dim_odd == 2, "k3 lift: algebra is not 1|2 dimensional");
  Matrix m(3, 3);
  m.at(0, 0) = Scalar(1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.at(1 + i, 1 + j) = f.at(i, j);
  Morphism lift{&k3, &k3, std::move(m)};
  require(is_homomorphism(lift).pass, "k3 lift: multiplicativity failed");
  return lift;
}

Morphism phi(const SuperAlgebra& tensor, const WreathElement& w) {
  WreathElement checked = WreathElement::make(w.f, w.g, w.swapped);
  require(tensor.index_of("1") == 0 && tensor.dim() == 10,
          "phi: expects the ten-dimensional tensor model");
  // 3x3 lifts fixing the k3 idempotent (slot 0 = e, slots 1,2 = x,y)
  auto lift3 = [](const Matrix& f) {
    Matrix m(3, 3);
    m.at(0, 0) = Scalar(1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m.at(1 + i, 1 + j) = f.at(i, j);
    return m;
  };
  Matrix ft = lift3(checked.f), gt = lift3(checked.g);
  auto k3par = [](int i) { return i == 0 ? 0 : 1; };
  // tensor slots by factor pair
  auto pair_of = [&](const std::string& lbl) -> std::pair<int, int> {
    auto fac = [](char c) { return c == 'e' ? 0 : c == 'x' ? 1 : 2; };
    return {fac(lbl[0]), fac(lbl[2])};
  };
  int slot[3][3];
  for (int i = 1; i < 10; ++i) {
    auto [u, v] = pair_of(tensor.basis[size_t(i)]);
    slot[u][v] = i;
  }
  Matrix m(10, 10);
  m.at(0, 0) = Scalar(1);
  for (int col = 1; col < 10; ++col) {
    auto [i, j] = pair_of(tensor.basis[size_t(col)]);
    int si = i, sj = j;
    Scalar sign(1);
    if (checked.swapped) {
      if (k3par(i) && k3par(j)) sign = Scalar(-1);
      std::swap(si, sj);
    }
    for (int u = 0; u < 3; ++u) {
      if (sgn(ft.at(u, si)) == 0) continue;
      for (int v = 0; v < 3; ++v) {
        if (sgn(gt.at(v, sj)) == 0) continue;
        m.at(slot[u][v], col) += sign * ft.at(u, si) * gt.at(v, sj);
      }
    }
  }
  Morphism lifted{&tensor, &tensor, std::move(m)};
  require(is_homomorphism(lifted, Exec::serial).pass, "phi: lifted map failed multiplicativity");
  return lifted;
}

OrthogonalMap psi(const Morphism& m) {
  require(m.from == m.to, "psi: not an endomorphism");
  const SuperAlgebra& a = *m.from;
  const std::string vlabels[4] = {"x@x", "x@y", "y@x", "y@y"};
  int vi[4];
  for (int k = 0; k < 4; ++k) {
    vi[k] = a.index_of(vlabels[k]);
    require(vi[k] >= 0, "psi: algebra lacks V coordinate " + vlabels[k]);
  }
  // V must be invariant: columns of V indices supported inside V
  Matrix r(4, 4);
  for (int k = 0; k < 4; ++k) {
    for (int row = 0; row < a.dim(); ++row) {
      if (sgn(m.m.at(row, vi[k])) == 0) continue;
      bool inside = false;
      for (int l = 0; l < 4; ++l)
        if (row == vi[l]) {
          r.at(l, k) = m.m.at(row, vi[k]);
          inside = true;
          break;
        }
      require(inside, "psi: V is not invariant under the map");
    }
  }
  return OrthogonalMap::make(std::move(r));
}

OrthogonalMap psi_tilde(const WreathElement& w) {
  WreathElement checked = WreathElement::make(w.f, w.g, w.swapped);
  Matrix m = kron(checked.f, checked.g);
  if (checked.swapped) m = m * exchange_v();
  return OrthogonalMap::make(std::move(m));
}

std::pair<Vec, Vec> factor_isotropic(const Vec& v) {
  if (v.size() != 4) throw std::invalid_argument("factor: V vectors have 4 coordinates");
  // coefficient matrix of the candidate rank-1 tensor
  Scalar a = v[0], b = v[1], c = v[2], d = v[3];
  bool zero = sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0;
  if (zero) throw Error("factor: zero vector");
  if (sgn(a * d - b * c) != 0) throw Error("factor: vector is not isotropic");
  Vec rows[2] = {{a, b}, {c, d}};
  int ti = (sgn(a) != 0 || sgn(b) != 0) ? 0 : 1;
  Vec t = rows[ti];
  int j0 = sgn(t[0]) != 0 ? 0 : 1;
  Vec s = {rows[0][size_t(j0)] / t[size_t(j0)], rows[1][size_t(j0)] / t[size_t(j0)]};
  Scalar lead = sgn(s[0]) != 0 ? s[0] : s[1];
  for (auto& x : s) x /= lead;
  for (auto& x : t) x *= lead;
  return {std::move(s), std::move(t)};
}

WreathElement factor_orthogonal(const OrthogonalMap& om) {
  // smallest unimodular map sending sv to (1,0)
  auto sl2_to = [](const Vec& sv) {
    Matrix a(2, 2);
    a.at(0, 0) = sv[0];
    a.at(1, 0) = sv[1];
    if (sgn(sv[0]) != 0) {
      a.at(0, 1) = Scalar(0);
      a.at(1, 1) = Scalar(1) / sv[0];
    } else {
      a.at(0, 1) = Scalar(-1) / sv[1];
      a.at(1, 1) = Scalar(0);
    }
    return inv2(a);
  };
  auto column = [](const Matrix& m, int j) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[size_t(i)] = m.at(i, j);
    return v;
  };

  Matrix m = om.m;
  WreathElement corr = WreathElement::identity();
  auto apply_corr = [&](const WreathElement& c) {
    Matrix cm = kron(c.f, c.g);
    if (c.swapped) cm = cm * exchange_v();
    m = cm * m;
    corr = wreath_compose(c, corr);
  };

  // 1: send the image of xx back to xx
  {
    auto [s, t] = factor_isotropic(column(m, 0));
    apply_corr({sl2_to(s), sl2_to(t), false});
  }
  // 2: send the image of yy back to yy, fixing xx
  {
    auto [s, t] = factor_isotropic(column(m, 3));
    Scalar alpha = s[1];  // pairing of (1,0) against s
    require(sgn(alpha) != 0 && alpha * t[1] == Scalar(1),
            "factor: reduced map is not orthogonal");
    Matrix f2 = mat2(Scalar(1), s[0] / alpha, Scalar(0), s[1] / alpha);
    Matrix g2 = mat2(Scalar(1), alpha * t[0], Scalar(0), alpha * t[1]);
    apply_corr({inv2(f2), inv2(g2), false});
  }
  // 3: if xy now maps into the yx line, fold the factors
  if (sgn(m.at(1, 1)) == 0)
    apply_corr({Matrix::identity(2).scaled(Scalar(-1)), Matrix::identity(2), true});

  Scalar gamma = m.at(1, 1);
  {
    // sanity: the reduction must have produced diag(1, gamma, 1/gamma, 1)
    Matrix expect(4, 4);
    expect.at(0, 0) = Scalar(1);
    expect.at(1, 1) = gamma;
    expect.at(2, 2) = Scalar(1) / gamma;
    expect.at(3, 3) = Scalar(1);
    require(m == expect, "factor: reduction did not reach diagonal form");
  }
  auto mu = rational_sqrt(gamma);
  if (!mu) throw NonSquareScalar(gamma);
  WreathElement scale =
      WreathElement::make(mat2(*mu, Scalar(0), Scalar(0), Scalar(1) / *mu),
                          mat2(Scalar(1) / *mu, Scalar(0), Scalar(0), *mu), false);
  return wreath_compose(wreath_invert(corr), scale).canonical();
}

Morphism lift_orthogonal_to_aut(const SuperAlgebra& tensor, const OrthogonalMap& m) {
  return phi(tensor, factor_orthogonal(m));
}

WreathElement random_wreath(Lcg64& rng) {
  auto rand_sl2 = [&rng]() {
    for (;;) {
      Matrix m(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = Scalar(long(rng.uniform_int(-5, 5)));
      if (det2(m) == Scalar(1)) return m;
    }
  };
  Matrix f = rand_sl2();
  Matrix g = rand_sl2();
  bool sw = rng.uniform_int(0, 1) == 1;
  return WreathElement::make(std::move(f), std::move(g), sw);
}

}  // namespace jord
