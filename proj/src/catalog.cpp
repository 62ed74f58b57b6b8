#include "jord/catalog.hpp"

#include <array>
#include <map>

#include "jord/subalgebras.hpp"

namespace jord {

namespace {

struct TableBuilder {
  int n;
  std::vector<std::string> basis;
  std::vector<TableEntry> entries;
  std::map<std::string, int> index;

  explicit TableBuilder(std::vector<std::string> b) : n(int(b.size())), basis(std::move(b)) {
    for (int i = 0; i < n; ++i) index[basis[i]] = i;
  }
  // set product basis[i].basis[j] = sum of (coeff, label) terms
  void set(const std::string& i, const std::string& j,
           std::initializer_list<std::pair<Scalar, std::string>> terms) {
    int a = index.at(i), b = index.at(j);
    bool any = false;
    for (const auto& [c, lbl] : terms) {
      entries.push_back({a, b, index.at(lbl), c});
      any = true;
    }
    if (!any) entries.push_back({a, b, 0, Scalar(0)});
  }
  void zero(const std::string& i, const std::string& j) {
    entries.push_back({index.at(i), index.at(j), 0, Scalar(0)});
  }
};

const Scalar kHalf = rat(1, 2);

}  // namespace

SuperAlgebra make_k3() {
  TableBuilder t({"e", "x", "y"});
  t.set("e", "e", {{Scalar(1), "e"}});
  t.set("e", "x", {{kHalf, "x"}});
  t.set("e", "y", {{kHalf, "y"}});
  t.set("x", "e", {{kHalf, "x"}});
  t.set("y", "e", {{kHalf, "y"}});
  t.set("x", "y", {{Scalar(1), "e"}});
  t.set("y", "x", {{Scalar(-1), "e"}});
  t.zero("x", "x");
  t.zero("y", "y");
  return SuperAlgebra::from_entries("k3", 1, 2, t.basis, t.entries);
}

SuperAlgebra make_dt(const Scalar& t) {
  if (sgn(t) == 0) throw std::invalid_argument("dt: parameter t must be nonzero");
  TableBuilder b({"e", "f", "u", "v"});
  b.set("e", "e", {{Scalar(1), "e"}});
  b.set("f", "f", {{Scalar(1), "f"}});
  b.zero("e", "f");
  b.zero("f", "e");
  for (const char* idem : {"e", "f"})
    for (const char* odd : {"u", "v"}) {
      b.set(idem, odd, {{kHalf, odd}});
      b.set(odd, idem, {{kHalf, odd}});
    }
  b.set("u", "v", {{Scalar(1), "e"}, {t, "f"}});
  b.set("v", "u", {{Scalar(-1), "e"}, {-t, "f"}});
  b.zero("u", "u");
  b.zero("v", "v");
  return SuperAlgebra::from_entries("dt(" + scalar_str(t) + ")", 2, 2, b.basis, b.entries);
}

SuperAlgebra make_k10_table() {
  TableBuilder t({"e", "a", "b", "c1", "c2", "f", "p1", "p2", "q1", "q2"});
  const Scalar one(1), neg(-1), two(2), four(4);
  // even-even block
  t.set("e", "e", {{one, "e"}});
  for (const char* z : {"a", "b", "c1", "c2"}) {
    t.set("e", z, {{one, z}});
    t.set(z, "e", {{one, z}});
  }
  t.zero("e", "f");
  t.zero("f", "e");
  t.set("f", "f", {{one, "f"}});
  t.set("a", "a", {{four, "e"}});
  t.set("b", "b", {{-four, "e"}});
  t.set("c1", "c2", {{two, "e"}});
  t.set("c2", "c1", {{two, "e"}});
  for (const char* z : {"a", "b", "c1", "c2"}) {
    t.zero(z, "f");
    t.zero("f", z);
  }
  t.zero("a", "b");
  t.zero("b", "a");
  for (const char* c : {"c1", "c2"})
    for (const char* w : {"a", "b"}) {
      t.zero(c, w);
      t.zero(w, c);
    }
  t.zero("c1", "c1");
  t.zero("c2", "c2");
  // e and f act as 1/2 on the odd part
  for (const char* idem : {"e", "f"})
    for (const char* odd : {"p1", "p2", "q1", "q2"}) {
      t.set(idem, odd, {{kHalf, odd}});
      t.set(odd, idem, {{kHalf, odd}});
    }
  // a, b, c1, c2 acting on the odd part (even-odd products commute)
  auto sym = [&](const char* ev, const char* od, std::initializer_list<std::pair<Scalar, std::string>> terms) {
    t.set(ev, od, terms);
    t.set(od, ev, terms);
  };
  sym("a", "p1", {{one, "p1"}});
  sym("a", "p2", {{one, "p2"}});
  sym("a", "q1", {{neg, "q1"}});
  sym("a", "q2", {{neg, "q2"}});
  sym("b", "p1", {{one, "q1"}});
  sym("b", "p2", {{one, "q2"}});
  sym("b", "q1", {{neg, "p1"}});
  sym("b", "q2", {{neg, "p2"}});
  sym("c1", "p2", {{one, "q1"}});
  sym("c1", "q2", {{one, "p1"}});
  sym("c2", "p1", {{one, "q2"}});
  sym("c2", "q1", {{one, "p2"}});
  t.zero("c1", "p1");
  t.zero("p1", "c1");
  t.zero("c1", "q1");
  t.zero("q1", "c1");
  t.zero("c2", "p2");
  t.zero("p2", "c2");
  t.zero("c2", "q2");
  t.zero("q2", "c2");
  // odd-odd products (anticommute)
  auto skew = [&](const char* x, const char* y, std::initializer_list<std::pair<Scalar, std::string>> terms) {
    t.set(x, y, terms);
    std::vector<std::pair<Scalar, std::string>> negated;
    for (const auto& [c, lbl] : terms) negated.emplace_back(-c, lbl);
    int a = t.index.at(y), b2 = t.index.at(x);
    for (const auto& [c, lbl] : negated) t.entries.push_back({a, b2, t.index.at(lbl), c});
  };
  for (const char* z : {"p1", "p2", "q1", "q2"}) t.zero(z, z);
  skew("p1", "p2", {{one, "a"}, {two, "e"}, {Scalar(-6), "f"}});
  skew("p1", "q1", {{two, "c1"}});
  skew("p1", "q2", {{one, "b"}});
  skew("p2", "q1", {{neg, "b"}});
  skew("p2", "q2", {{Scalar(-2), "c2"}});
  skew("q1", "q2", {{one, "a"}, {Scalar(-2), "e"}, {Scalar(6), "f"}});
  return SuperAlgebra::from_entries("k10", 6, 4, t.basis, t.entries);
}

SuperAlgebra make_k10_tensor() {
  // k3 data inline: basis e,x,y with parities 0,1,1
  auto k3 = make_k3();
  auto form = [](int i, int j) -> Scalar {
    if (i == 0 && j == 0) return kHalf;
    if (i == 1 && j == 2) return Scalar(1);
    if (i == 2 && j == 1) return Scalar(-1);
    return Scalar(0);
  };
  std::vector<std::string> basis = {"1",   "e@e", "x@x", "x@y", "y@x",
                                    "y@y", "e@x", "e@y", "x@e", "y@e"};
  std::map<std::string, std::pair<int, int>> factors = {
      {"e@e", {0, 0}}, {"x@x", {1, 1}}, {"x@y", {1, 2}}, {"y@x", {2, 1}}, {"y@y", {2, 2}},
      {"e@x", {0, 1}}, {"e@y", {0, 2}}, {"x@e", {1, 0}}, {"y@e", {2, 0}}};
  std::map<std::pair<int, int>, int> slot;
  for (size_t k = 1; k < basis.size(); ++k) slot[factors[basis[k]]] = int(k);

  std::vector<TableEntry> entries;
  int n = 10;
  auto emit = [&](int i, int j, int k, const Scalar& c) {
    if (sgn(c) != 0) entries.push_back({i, j, k, c});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == 0 || j == 0) {
        emit(i, j, i == 0 ? j : i, Scalar(1));
        continue;
      }
      auto [a, b] = factors[basis[i]];
      auto [c, d] = factors[basis[j]];
      Scalar sign = (k3.parity(b) && k3.parity(c)) ? Scalar(-1) : Scalar(1);
      Element ac = multiply(Element::basis(k3, a), Element::basis(k3, c));
      Element bd = multiply(Element::basis(k3, b), Element::basis(k3, d));
      for (int u = 0; u < 3; ++u) {
        if (sgn(ac.v[u]) == 0) continue;
        for (int v = 0; v < 3; ++v) {
          if (sgn(bd.v[v]) == 0) continue;
          emit(i, j, slot.at({u, v}), sign * ac.v[u] * bd.v[v]);
        }
      }
      emit(i, j, 0, sign * rat(-3, 4) * form(a, c) * form(b, d));
    }
  return SuperAlgebra::from_entries("k10-tensor", 6, 4, basis, entries, /*implicit_zero_rows=*/true);
}

SuperAlgebra make_bilinear_jordan(const Matrix& gram) {
  int n = gram.rows;
  if (gram.cols != n) throw std::invalid_argument("bilinear: gram not square");
  if (gram.transpose() == gram) {
    if (n > 0 && !inverse(gram)) throw std::invalid_argument("bilinear: gram degenerate");
  } else {
    throw std::invalid_argument("bilinear: gram not symmetric");
  }
  std::vector<std::string> basis = {"1"};
  for (int i = 1; i <= n; ++i) basis.push_back("v" + std::to_string(i));
  std::vector<TableEntry> entries;
  entries.push_back({0, 0, 0, Scalar(1)});
  for (int i = 1; i <= n; ++i) {
    entries.push_back({0, i, i, Scalar(1)});
    entries.push_back({i, 0, i, Scalar(1)});
    for (int j = 1; j <= n; ++j) entries.push_back({i, j, 0, gram.at(i - 1, j - 1)});
  }
  return SuperAlgebra::from_entries("bilinear(" + std::to_string(n) + ")", n + 1, 0, basis,
                                    entries, /*implicit_zero_rows=*/true);
}

SuperAlgebra make_superform_algebra(const Matrix& gram_even, const Matrix& gram_odd) {
  int n0 = gram_even.rows, n1 = gram_odd.rows;
  if (gram_even.cols != n0 || !(gram_even.transpose() == gram_even))
    throw std::invalid_argument("superform: even gram not symmetric square");
  if (n0 > 0 && !inverse(gram_even)) throw std::invalid_argument("superform: even gram degenerate");
  if (gram_odd.cols != n1 || !(gram_odd.transpose() == gram_odd.scaled(Scalar(-1))))
    throw std::invalid_argument("superform: odd gram not alternating square");
  for (int i = 0; i < n1; ++i)
    if (sgn(gram_odd.at(i, i)) != 0) throw std::invalid_argument("superform: odd gram not alternating");
  if (n1 > 0 && !inverse(gram_odd)) throw std::invalid_argument("superform: odd gram degenerate");

  std::vector<std::string> basis = {"e"};
  for (int i = 1; i <= n0; ++i) basis.push_back("v" + std::to_string(i));
  for (int i = 1; i <= n1; ++i) basis.push_back("w" + std::to_string(i));
  int n = 1 + n0 + n1;
  std::vector<TableEntry> entries;
  for (int i = 0; i < n; ++i) {
    entries.push_back({0, i, i, Scalar(1)});
    if (i) entries.push_back({i, 0, i, Scalar(1)});
  }
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) entries.push_back({1 + i, 1 + j, 0, gram_even.at(i, j)});
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) entries.push_back({1 + n0 + i, 1 + n0 + j, 0, gram_odd.at(i, j)});
  return SuperAlgebra::from_entries("superform(" + std::to_string(n0) + "|" + std::to_string(n1) + ")",
                                    1 + n0, n1, basis, entries, /*implicit_zero_rows=*/true);
}

SuperAlgebra make_plus(const SuperAlgebra& assoc) {
  int n = assoc.dim();
  // graded associativity on all basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Element d = associator(Element::basis(assoc, i), Element::basis(assoc, j),
                               Element::basis(assoc, k));
        if (!d.is_zero())
          throw std::invalid_argument("make_plus: input is not associative at triple (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");
      }
  std::vector<TableEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar sign = (assoc.parity(i) && assoc.parity(j)) ? Scalar(-1) : Scalar(1);
      Vec v(n);
      for (const auto& [k, c] : assoc.row(i, j)) v[k] += kHalf * c;
      for (const auto& [k, c] : assoc.row(j, i)) v[k] += kHalf * sign * c;
      bool any = false;
      for (int k = 0; k < n; ++k)
        if (sgn(v[k]) != 0) {
          entries.push_back({i, j, k, v[k]});
          any = true;
        }
      if (!any) entries.push_back({i, j, 0, Scalar(0)});
    }
  return SuperAlgebra::from_entries(assoc.name + "+", assoc.dim_even, assoc.dim_odd, assoc.basis,
                                    entries);
}

SuperAlgebra make_full_matrix_algebra(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("matrix algebra: n out of range");
  std::vector<std::string> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) basis.push_back("E" + std::to_string(i) + std::to_string(j));
  std::vector<TableEntry> entries;
  auto id = [&](int i, int j) { return (i - 1) * n + (j - 1); };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (j == k)
            entries.push_back({id(i, j), id(k, l), id(i, l), Scalar(1)});
          else
            entries.push_back({id(i, j), id(k, l), 0, Scalar(0)});
        }
  return SuperAlgebra::from_entries("mat(" + std::to_string(n) + ")", n * n, 0, basis, entries);
}

SuperAlgebra make_grassmann(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("grassmann: n out of range (1..8)");
  int total = 1 << n;
  // subsets ordered by (popcount parity: even degrees first), then by mask
  std::vector<int> masks;
  for (int pass = 0; pass < 2; ++pass)
    for (int m = 0; m < total; ++m)
      if ((__builtin_popcount(unsigned(m)) & 1) == pass) masks.push_back(m);
  std::vector<int> pos(total);
  std::vector<std::string> basis;
  for (size_t k = 0; k < masks.size(); ++k) {
    pos[masks[k]] = int(k);
    if (masks[k] == 0) {
      basis.push_back("1");
    } else {
      std::string lbl = "g";
      for (int b = 0; b < n; ++b)
        if (masks[k] >> b & 1) lbl += std::to_string(b + 1);
      basis.push_back(lbl);
    }
  }
  int dim_even = total / 2;
  std::vector<TableEntry> entries;
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j) {
      int s = masks[i], t = masks[j];
      if (s & t) continue;  // repeated generator
      // sign = parity of inversions between the two sorted generator lists
      int inv = 0;
      for (int b1 = 0; b1 < n; ++b1)
        if (s >> b1 & 1)
          for (int b2 = 0; b2 < b1; ++b2)
            if (t >> b2 & 1) ++inv;
      entries.push_back({pos[s], pos[t], pos[s | t], (inv & 1) ? Scalar(-1) : Scalar(1)});
    }
  return SuperAlgebra::from_entries("grassmann(" + std::to_string(n) + ")", dim_even,
                                    total - dim_even, basis, entries, /*implicit_zero_rows=*/true);
}

std::pair<GradedSubspace, GradedSubspace> even_part_ideals(const SuperAlgebra& k10) {
  int fi = k10.index_of("f");
  if (k10.dim_even != 6 || k10.dim_odd != 4 || fi < 0 || k10.index_of("e") != 0)
    throw std::invalid_argument("even_part_ideals: expects the ten-dimensional table model");
  GradedSubspace even_part = graded_span(k10, {});
  {
    std::vector<Element> gens;
    for (int i = 0; i < k10.dim_even; ++i) gens.push_back(Element::basis(k10, i));
    even_part = graded_span(k10, gens);
  }
  std::vector<Element> fgen = {Element::basis(k10, fi)};
  std::vector<Element> jgens;
  for (int i = 0; i < k10.dim_even; ++i)
    if (i != fi) jgens.push_back(Element::basis(k10, i));
  GradedSubspace fpart = graded_span(k10, fgen);
  GradedSubspace jpart = graded_span(k10, jgens);
  if (!is_ideal(k10, fpart, even_part) || !is_ideal(k10, jpart, even_part))
    throw Error("even_part_ideals: summands fail the ideal check");
  // cross products vanish
  for (const auto& x : fgen)
    for (const auto& y : jgens)
      if (!multiply(x, y).is_zero() || !multiply(y, x).is_zero())
        throw Error("even_part_ideals: summands are not orthogonal");
  // e is the unit of the five-dimensional summand
  Element e = Element::basis(k10, 0);
  for (const auto& y : jgens)
    if (!(multiply(e, y) == y)) throw Error("even_part_ideals: e is not a unit on its summand");
  return {fpart, jpart};
}

}  // namespace jord
