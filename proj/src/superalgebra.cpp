#include "jord/superalgebra.hpp"

#include <algorithm>
#include <map>

namespace jord {

int SuperAlgebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return int(i);
  return -1;
}

SuperAlgebra SuperAlgebra::from_entries(std::string name, int dim_even, int dim_odd,
                                        std::vector<std::string> basis,
                                        const std::vector<TableEntry>& entries,
                                        bool implicit_zero_rows) {
  if (dim_even < 0 || dim_odd < 0 || dim_even + dim_odd == 0)
    throw std::invalid_argument("algebra: bad dimensions");
  int n = dim_even + dim_odd;
  if (int(basis.size()) != n) throw std::invalid_argument("algebra: basis size != dim");
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] == basis[j]) throw std::invalid_argument("algebra: duplicate basis label " + basis[i]);

  SuperAlgebra a;
  a.name = std::move(name);
  a.dim_even = dim_even;
  a.dim_odd = dim_odd;
  a.basis = std::move(basis);
  a.prod.assign(size_t(n) * n, {});

  std::vector<char> covered(size_t(n) * n, 0);
  std::vector<std::map<int, Scalar>> acc(size_t(n) * n);
  for (const auto& e : entries) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n || e.k < 0 || e.k >= n)
      throw std::invalid_argument("algebra: table index out of range");
    covered[size_t(e.i) * n + e.j] = 1;
    if (sgn(e.c) != 0) acc[size_t(e.i) * n + e.j][e.k] += e.c;
  }
  if (!implicit_zero_rows) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!covered[size_t(i) * n + j])
          throw std::invalid_argument("algebra: table misses pair (" + std::to_string(i) + "," +
                                      std::to_string(j) + ")");
  }
  for (size_t ij = 0; ij < acc.size(); ++ij)
    for (const auto& [k, c] : acc[ij])
      if (sgn(c) != 0) a.prod[ij].emplace_back(k, c);
  return a;
}

std::vector<TableEntry> SuperAlgebra::entries() const {
  std::vector<TableEntry> out;
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : row(i, j)) out.push_back({i, j, k, c});
  return out;
}

Element Element::basis(const SuperAlgebra& a, int k) {
  Element e = zero(a);
  e.v[k] = 1;
  return e;
}

Element Element::from(const SuperAlgebra& a, Vec coords) {
  if (int(coords.size()) != a.dim()) throw std::invalid_argument("element: coordinate size mismatch");
  return {&a, std::move(coords)};
}

Element Element::operator+(const Element& o) const {
  if (alg != o.alg) throw std::invalid_argument("element add: different algebras");
  Element r = *this;
  for (size_t k = 0; k < v.size(); ++k) r.v[k] += o.v[k];
  return r;
}

Element Element::operator-(const Element& o) const {
  if (alg != o.alg) throw std::invalid_argument("element sub: different algebras");
  Element r = *this;
  for (size_t k = 0; k < v.size(); ++k) r.v[k] -= o.v[k];
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r = *this;
  for (auto& x : r.v) x *= c;
  return r;
}

bool Element::is_zero() const {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Element multiply(const Element& x, const Element& y) {
  if (x.alg != y.alg) throw std::invalid_argument("multiply: different algebras");
  const SuperAlgebra& a = *x.alg;
  Element r = Element::zero(a);
  int n = a.dim();
  for (int i = 0; i < n; ++i) {
    if (sgn(x.v[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(y.v[j]) == 0) continue;
      Scalar c = x.v[i] * y.v[j];
      for (const auto& [k, s] : a.row(i, j)) r.v[k] += c * s;
    }
  }
  return r;
}

Element Element::operator*(const Element& o) const { return multiply(*this, o); }

Element associator(const Element& x, const Element& y, const Element& z) {
  return (x * y) * z - x * (y * z);
}

std::pair<Element, Element> Element::parity_parts() const {
  Element even = zero(*alg), odd = zero(*alg);
  for (int k = 0; k < alg->dim(); ++k)
    (alg->parity(k) ? odd : even).v[k] = v[k];
  return {even, odd};
}

std::string format_element(const SuperAlgebra& a, const Vec& v) {
  std::string out;
  for (int k = 0; k < a.dim(); ++k) {
    const Scalar& c = v[k];
    if (sgn(c) == 0) continue;
    Scalar m = abs(c);
    if (out.empty())
      out += (sgn(c) < 0) ? "-" : "";
    else
      out += (sgn(c) < 0) ? "-" : "+";
    if (m != 1) {
      std::string ms = scalar_str(m);
      out += (m.get_den() == 1) ? ms : "(" + ms + ")";
    }
    out += a.basis[k];
  }
  return out.empty() ? "0" : out;
}

std::string Element::str() const { return format_element(*alg, v); }

SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b) {
  SuperAlgebra s;
  s.name = a.name + "(+)" + b.name;
  s.dim_even = a.dim_even + b.dim_even;
  s.dim_odd = a.dim_odd + b.dim_odd;
  int n = s.dim_even + s.dim_odd;
  // even blocks of both summands first, then odd blocks
  auto amap = [&](int k) { return k < a.dim_even ? k : k + (s.dim_even - a.dim_even); };
  auto bmap = [&](int k) { return k < b.dim_even ? a.dim_even + k : s.dim_even + a.dim_odd + (k - b.dim_even); };
  s.basis.assign(n, "");
  for (int k = 0; k < a.dim(); ++k) s.basis[amap(k)] = "l." + a.basis[k];
  for (int k = 0; k < b.dim(); ++k) s.basis[bmap(k)] = "r." + b.basis[k];
  s.prod.assign(size_t(n) * n, {});
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (const auto& [k, c] : a.row(i, j))
        s.prod[size_t(amap(i)) * n + amap(j)].emplace_back(amap(k), c);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (const auto& [k, c] : b.row(i, j))
        s.prod[size_t(bmap(i)) * n + bmap(j)].emplace_back(bmap(k), c);
  for (auto& r : s.prod)
    std::sort(r.begin(), r.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return s;
}

IdentityReport check_grading(const SuperAlgebra& a) {
  IdentityReport rep;
  rep.identity = "grading";
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.row(i, j)) {
        if (a.parity(k) != ((a.parity(i) + a.parity(j)) & 1)) {
          rep.pass = false;
          ++rep.total_defects;
          if (rep.witnesses.size() < 16) {
            Vec d(n);
            d[k] = c;
            rep.witnesses.push_back({{i, j, k}, d, "graded-table-entry"});
          }
        }
      }
  return rep;
}

}  // namespace jord
