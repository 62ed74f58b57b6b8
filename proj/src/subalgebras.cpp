#include "jord/subalgebras.hpp"

#include <algorithm>
#include <stdexcept>

#include "jord/catalog.hpp"
#include "jord/rng.hpp"

namespace jord {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

Vec even_block(const SuperAlgebra& a, const Vec& v) {
  return Vec(v.begin(), v.begin() + a.dim_even);
}

Vec odd_block(const SuperAlgebra& a, const Vec& v) {
  return Vec(v.begin() + a.dim_even, v.end());
}

Element embed_even(const SuperAlgebra& a, const Vec& row) {
  Vec v(size_t(a.dim()));
  for (int j = 0; j < a.dim_even; ++j) v[size_t(j)] = row[size_t(j)];
  return Element::from(a, std::move(v));
}

Element embed_odd(const SuperAlgebra& a, const Vec& row) {
  Vec v(size_t(a.dim()));
  for (int j = 0; j < a.dim_odd; ++j) v[size_t(a.dim_even + j)] = row[size_t(j)];
  return Element::from(a, std::move(v));
}

Vec subspace_row(const Subspace& s, int r) {
  Vec v(size_t(s.ambient));
  for (int j = 0; j < s.ambient; ++j) v[size_t(j)] = s.basis.at(r, j);
  return v;
}

bool graded_contains(const SuperAlgebra& a, const GradedSubspace& s, const Element& x) {
  return s.even.contains(even_block(a, x.v)) && s.odd.contains(odd_block(a, x.v));
}

std::vector<int> derived_chain_dims(const SuperAlgebra& a, const GradedSubspace& s) {
  std::vector<int> dims = {s.dim()};
  GradedSubspace cur = s;
  for (int step = 0; step <= s.dim(); ++step) {
    if (cur.dim() == 0) break;
    auto basis = graded_basis_elements(a, cur);
    std::vector<Element> prods;
    for (const auto& x : basis)
      for (const auto& y : basis) prods.push_back(x * y);
    GradedSubspace next = graded_span(a, prods);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim()) break;
    cur = next;
  }
  return dims;
}

}  // namespace

GradedSubspace graded_span(const SuperAlgebra& a, const std::vector<Element>& gens) {
  std::vector<Vec> ev, od;
  for (const auto& g : gens) {
    require(g.alg == &a, "graded_span: element from a different algebra");
    ev.push_back(even_block(a, g.v));
    od.push_back(odd_block(a, g.v));
  }
  return {Subspace::span(a.dim_even, ev), Subspace::span(a.dim_odd, od)};
}

GradedSubspace full_graded(const SuperAlgebra& a) {
  return {Subspace::full(a.dim_even), Subspace::full(a.dim_odd)};
}

GradedSubspace label_span(const SuperAlgebra& a, const std::vector<std::string>& labels) {
  std::vector<Element> gens;
  for (const auto& l : labels) {
    int i = a.index_of(l);
    if (i < 0) throw std::invalid_argument("label_span: no basis vector named " + l);
    gens.push_back(Element::basis(a, i));
  }
  return graded_span(a, gens);
}

std::vector<Element> graded_basis_elements(const SuperAlgebra& a, const GradedSubspace& s) {
  std::vector<Element> out;
  for (int r = 0; r < s.even.dim(); ++r) out.push_back(embed_even(a, subspace_row(s.even, r)));
  for (int r = 0; r < s.odd.dim(); ++r) out.push_back(embed_odd(a, subspace_row(s.odd, r)));
  return out;
}

GradedSubspace image_subspace(const Morphism& m, const GradedSubspace& s) {
  std::vector<Element> images;
  for (const auto& x : graded_basis_elements(*m.from, s)) images.push_back(m.apply(x));
  return graded_span(*m.to, images);
}

GradedSubspace span_closure(const SuperAlgebra& a, const std::vector<Element>& gens) {
  GradedSubspace cur = graded_span(a, gens);
  for (;;) {
    auto basis = graded_basis_elements(a, cur);
    std::vector<Element> next_gens = basis;
    for (const auto& x : basis)
      for (const auto& y : basis) next_gens.push_back(x * y);
    GradedSubspace next = graded_span(a, next_gens);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& s) {
  auto basis = graded_basis_elements(a, s);
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (!graded_contains(a, s, x * y)) return false;
  return true;
}

bool is_ideal(const SuperAlgebra& a, const GradedSubspace& s, const GradedSubspace& within) {
  if (!within.contains(s)) throw std::invalid_argument("is_ideal: subspace not contained in the ambient one");
  auto sb = graded_basis_elements(a, s);
  auto wb = graded_basis_elements(a, within);
  for (const auto& x : sb)
    for (const auto& y : wb)
      if (!graded_contains(a, s, x * y) || !graded_contains(a, s, y * x)) return false;
  return true;
}

bool is_solvable(const SuperAlgebra& a, const GradedSubspace& s) {
  return derived_chain_dims(a, s).back() == 0;
}

SubAlgebra materialize(const SuperAlgebra& a, const GradedSubspace& s, const std::string& name) {
  auto basis = graded_basis_elements(a, s);
  int n = int(basis.size()), ne = s.even.dim();
  std::vector<std::string> labels;
  for (const auto& b : basis) labels.push_back(b.str());
  auto coords_in = [&](const Element& x) -> Vec {
    auto ce = s.even.coords_of(even_block(a, x.v));
    auto co = s.odd.coords_of(odd_block(a, x.v));
    require(ce && co, "materialize: the subspace is not product-closed");
    Vec v(static_cast<size_t>(n));
    for (int i = 0; i < ne; ++i) v[size_t(i)] = (*ce)[size_t(i)];
    for (int i = 0; i < n - ne; ++i) v[size_t(ne + i)] = (*co)[size_t(i)];
    return v;
  };
  std::vector<TableEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = coords_in(basis[size_t(i)] * basis[size_t(j)]);
      for (int k = 0; k < n; ++k)
        if (sgn(v[size_t(k)]) != 0) entries.push_back({i, j, k, v[size_t(k)]});
    }
  auto alg = std::make_shared<SuperAlgebra>(SuperAlgebra::from_entries(
      name, ne, n - ne, labels, entries, /*implicit_zero_rows=*/true));
  Matrix em(a.dim(), n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < a.dim(); ++r) em.at(r, j) = basis[size_t(j)].v[size_t(r)];
  return {alg, Morphism{alg.get(), &a, std::move(em)}};
}

QuotientPresentation quotient(const SuperAlgebra& a, const GradedSubspace& b,
                              const GradedSubspace& r) {
  if (!is_subalgebra(a, b)) throw std::invalid_argument("quotient: numerator is not product-closed");
  if (!is_ideal(a, r, b)) throw std::invalid_argument("quotient: denominator is not an ideal");
  SubAlgebra sub = materialize(a, b, "sub");
  const SuperAlgebra& s = *sub.alg;
  int ne = s.dim_even, no = s.dim_odd;

  // the ideal in subalgebra coordinates, one subspace per block
  auto block_coords = [&](const Subspace& amb, const Subspace& rr) {
    std::vector<Vec> rows;
    for (int i = 0; i < rr.dim(); ++i) {
      auto c = amb.coords_of(subspace_row(rr, i));
      require(c.has_value(), "quotient: ideal escapes the subalgebra");
      rows.push_back(*c);
    }
    return Subspace::span(amb.dim(), rows);
  };
  Subspace re = block_coords(b.even, r.even), ro = block_coords(b.odd, r.odd);

  auto nonpivots = [](const Subspace& s2) {
    std::vector<int> out;
    size_t pi = 0;
    for (int c = 0; c < s2.ambient; ++c) {
      if (pi < s2.pivots.size() && s2.pivots[pi] == c) {
        ++pi;
        continue;
      }
      out.push_back(c);
    }
    return out;
  };
  std::vector<int> reps_e = nonpivots(re), reps_o = nonpivots(ro);
  int qe = int(reps_e.size()), qo = int(reps_o.size()), nq = qe + qo;

  // projection: reduce each block coordinate vector modulo the ideal and
  // read off the surviving (non-pivot) coordinates
  Matrix pm(nq, ne + no);
  auto fill_block = [&](const Subspace& rr, const std::vector<int>& reps, int col0, int row0) {
    for (int j = 0; j < rr.ambient; ++j) {
      Vec u(size_t(rr.ambient));
      u[size_t(j)] = Scalar(1);
      Vec w = rr.reduce(u);
      for (size_t k = 0; k < reps.size(); ++k) pm.at(row0 + int(k), col0 + j) = w[size_t(reps[k])];
    }
  };
  fill_block(re, reps_e, 0, 0);
  fill_block(ro, reps_o, ne, qe);

  std::vector<std::string> labels;
  std::vector<int> rep_index;  // subalgebra index of each quotient basis vector
  for (int k : reps_e) rep_index.push_back(k);
  for (int k : reps_o) rep_index.push_back(ne + k);
  for (int idx : rep_index) labels.push_back(s.basis[size_t(idx)]);

  std::vector<TableEntry> entries;
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j) {
      Element p = Element::basis(s, rep_index[size_t(i)]) * Element::basis(s, rep_index[size_t(j)]);
      Vec v = pm * p.v;
      for (int k = 0; k < nq; ++k)
        if (sgn(v[size_t(k)]) != 0) entries.push_back({i, j, k, v[size_t(k)]});
    }
  auto q = std::make_shared<SuperAlgebra>(SuperAlgebra::from_entries(
      "quotient", qe, qo, labels, entries, /*implicit_zero_rows=*/true));
  Morphism proj{sub.alg.get(), q.get(), pm};

  require(is_homomorphism(proj, Exec::serial).pass, "quotient: projection is not multiplicative");
  require(rank(pm) == nq, "quotient: projection is not surjective");
  // kernel per block must reproduce the ideal
  auto block_of = [&](int r0, int c0, int nr, int nc) {
    Matrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(i, j) = pm.at(r0 + i, c0 + j);
    return m;
  };
  require(kernel_basis(block_of(0, 0, qe, ne)) == re.basis ||
              (qe == ne && re.dim() == 0),
          "quotient: even kernel mismatch");
  require(kernel_basis(block_of(qe, ne, qo, no)) == ro.basis ||
              (qo == no && ro.dim() == 0),
          "quotient: odd kernel mismatch");
  return {std::move(sub), std::move(q), std::move(proj)};
}

const char* kind_name(MaximalKind k) {
  switch (k) {
    case MaximalKind::i: return "i";
    case MaximalKind::ii: return "ii";
    case MaximalKind::iii: return "iii";
    case MaximalKind::iv: return "iv";
  }
  return "?";
}

std::optional<MaximalKind> kind_from_name(const std::string& s) {
  if (s == "i") return MaximalKind::i;
  if (s == "ii") return MaximalKind::ii;
  if (s == "iii") return MaximalKind::iii;
  if (s == "iv") return MaximalKind::iv;
  return std::nullopt;
}

GradedSubspace maximal_subalgebra(const SuperAlgebra& k10, MaximalKind kind) {
  auto el = [&](const std::string& l) {
    int i = k10.index_of(l);
    require(i >= 0, "maximal subalgebra: expects the ten-dimensional table model");
    return Element::basis(k10, i);
  };
  std::vector<Element> gens;
  switch (kind) {
    case MaximalKind::i:
      for (int i = 0; i < k10.dim_even; ++i) gens.push_back(Element::basis(k10, i));
      break;
    case MaximalKind::ii:
      gens = {el("e"), el("f"), el("a"), el("p1"), el("p2")};
      break;
    case MaximalKind::iii:
      gens = {el("e"), el("f"), el("a") + el("b"), el("c1"), el("p1"), el("q1"),
              el("p2") + el("q2")};
      break;
    case MaximalKind::iv:
      gens = {el("e"), el("f"), el("a"), el("b"), el("c1"), el("p1"), el("q1")};
      break;
  }
  GradedSubspace s = graded_span(k10, gens);
  require(is_subalgebra(k10, s), "maximal subalgebra: span is not product-closed");
  require(s.dim() < k10.dim(), "maximal subalgebra: span is not proper");
  require(graded_contains(k10, s, el("e") + el("f")),
          "maximal subalgebra: unit e+f missing");
  return s;
}

ProbeResult maximality_probe(const SuperAlgebra& a, const GradedSubspace& b, int trials,
                             std::uint64_t seed) {
  if (!is_subalgebra(a, b)) throw std::invalid_argument("probe: input is not product-closed");
  if (b.dim() >= a.dim()) throw std::invalid_argument("probe: input is not proper");

  auto nonpivots = [](const Subspace& s) {
    std::vector<int> out;
    size_t pi = 0;
    for (int c = 0; c < s.ambient; ++c) {
      if (pi < s.pivots.size() && s.pivots[pi] == c) {
        ++pi;
        continue;
      }
      out.push_back(c);
    }
    return out;
  };
  std::vector<Element> complement;
  for (int c : nonpivots(b.even)) complement.push_back(Element::basis(a, c));
  for (int c : nonpivots(b.odd)) complement.push_back(Element::basis(a, a.dim_even + c));

  std::vector<Element> bgens = graded_basis_elements(a, b);
  auto closure_with = [&](const Element& x) {
    std::vector<Element> gens = bgens;
    gens.push_back(x);
    return span_closure(a, gens);
  };

  ProbeResult res;
  res.trials_run = trials;
  res.probably_maximal = true;

  for (const auto& x : complement) {
    GradedSubspace c = closure_with(x);
    if (c.dim() < a.dim() && res.probably_maximal) {
      res.probably_maximal = false;
      res.witness = x.v;
      res.witness_closure = c;
    }
  }

  // greedy saturation along the canonical complement, keeping the span proper
  GradedSubspace envelope = b;
  for (const auto& x : complement) {
    std::vector<Element> gens = graded_basis_elements(a, envelope);
    gens.push_back(x);
    GradedSubspace cand = span_closure(a, gens);
    if (cand.dim() < a.dim()) envelope = cand;
  }
  res.proper_envelope = envelope;

  struct Trial {
    bool proper = false;
    Vec x;
    GradedSubspace closure;
  };
  std::vector<Trial> results(size_t(std::max(trials, 0)));
#pragma omp parallel for schedule(dynamic, 4)
  for (int t = 0; t < trials; ++t) {
    Lcg64 rng = Lcg64::split(seed, uint64_t(t));
    Element x = Element::zero(a);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vec v(size_t(a.dim()));
      for (auto& c : v) c = Scalar(long(rng.uniform_int(-3, 3)));
      x = Element::from(a, std::move(v));
      if (!graded_contains(a, b, x)) break;
    }
    if (graded_contains(a, b, x)) continue;  // astronomically unlikely; skip trial
    GradedSubspace c = closure_with(x);
    if (c.dim() < a.dim()) results[size_t(t)] = {true, x.v, c};
  }
  for (auto& tr : results)
    if (tr.proper && res.probably_maximal) {
      res.probably_maximal = false;
      res.witness = std::move(tr.x);
      res.witness_closure = std::move(tr.closure);
    }
  return res;
}

std::string DtInvariant::str() const {
  if (degenerate) return "degenerate(" + reason + ")";
  return "{" + scalar_str(t_pair.first) + ", " + scalar_str(t_pair.second) + "}";
}

DtInvariant dt_parameter(const SuperAlgebra& a) {
  if (a.dim_even != 2 || a.dim_odd != 2)
    throw std::invalid_argument("dt invariant: algebra must have even|odd dimensions 2|2");
  auto fail = [](std::string why) {
    DtInvariant d;
    d.degenerate = true;
    d.reason = std::move(why);
    return d;
  };
  int n = a.dim();
  // two-sided even unit U = U0 b0 + U1 b1
  Matrix sys(2 * n * n, 2);
  Vec rhs(size_t(2 * n * n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < 2; ++i)
        for (const auto& [kk, c] : a.row(i, j))
          if (kk == k) sys.at(j * n + k, i) += c;
      for (int i = 0; i < 2; ++i)
        for (const auto& [kk, c] : a.row(j, i))
          if (kk == k) sys.at(n * n + j * n + k, i) += c;
      rhs[size_t(j * n + k)] = j == k ? Scalar(1) : Scalar(0);
      rhs[size_t(n * n + j * n + k)] = j == k ? Scalar(1) : Scalar(0);
    }
  auto usol = solve(sys, rhs);
  if (!usol) return fail("the even part has no two-sided unit");
  Element U = Element::from(a, {(*usol)[0], (*usol)[1], Scalar(0), Scalar(0)});

  // a second even direction z, then the idempotent plane equation z^2 = pz + qU
  Element z = Element::basis(a, sgn((*usol)[1]) != 0 ? 0 : 1);
  Matrix zsys(n, 2);
  for (int i = 0; i < n; ++i) {
    zsys.at(i, 0) = z.v[size_t(i)];
    zsys.at(i, 1) = U.v[size_t(i)];
  }
  auto pq = solve(zsys, (z * z).v);
  require(pq.has_value(), "dt invariant: even product left the even part");
  const Scalar p = (*pq)[0], q = (*pq)[1];
  Scalar disc = p * p + 4 * q;
  if (sgn(disc) == 0) return fail("the idempotent equation has a repeated root");
  auto sq = rational_sqrt(disc);
  if (!sq) return fail("the idempotent equation has irrational roots");
  Scalar l1 = (p + *sq) / 2, l2 = (p - *sq) / 2;
  Element E = (z - U.scaled(l2)).scaled(1 / (l1 - l2));
  Element F = U - E;
  if (!(E * E == E) || !(F * F == F) || !(E * F).is_zero())
    return fail("no pair of orthogonal rational idempotents");

  for (const Element& idem : {E, F})
    for (int oi : {2, 3}) {
      Element x = Element::basis(a, oi);
      if (!(idem * x == x.scaled(rat(1, 2))) || !(x * idem == x.scaled(rat(1, 2))))
        return fail("the idempotents do not act as one half on the odd part");
    }

  Element w = Element::basis(a, 2) * Element::basis(a, 3);
  Matrix wsys(n, 2);
  for (int i = 0; i < n; ++i) {
    wsys.at(i, 0) = E.v[size_t(i)];
    wsys.at(i, 1) = F.v[size_t(i)];
  }
  auto ab = solve(wsys, w.v);
  require(ab.has_value(), "dt invariant: odd product left the even part");
  const Scalar alpha = (*ab)[0], beta = (*ab)[1];
  if (sgn(alpha) == 0 || sgn(beta) == 0)
    return fail("the odd product has a zero idempotent component");
  Scalar t1 = beta / alpha, t2 = alpha / beta;
  DtInvariant d;
  d.t_pair = t1 < t2 ? std::make_pair(t1, t2) : std::make_pair(t2, t1);
  return d;
}

DtInvariant dt_parameter(const SuperAlgebra& parent, const GradedSubspace& b) {
  return dt_parameter(*materialize(parent, b, "probe").alg);
}

Matrix witt_map(const Matrix& gram, const Vec& v1, const Vec& v2) {
  int n = gram.rows;
  if (gram.cols != n || int(v1.size()) != n || int(v2.size()) != n)
    throw std::invalid_argument("witt: dimension mismatch");
  auto form = [&](const Vec& x, const Vec& y) {
    Scalar s(0);
    for (int i = 0; i < n; ++i) {
      if (sgn(x[size_t(i)]) == 0) continue;
      for (int j = 0; j < n; ++j) s += x[size_t(i)] * gram.at(i, j) * y[size_t(j)];
    }
    return s;
  };
  Scalar norm = form(v1, v1);
  require(norm == form(v2, v2), "witt: norms differ");
  require(sgn(norm) != 0, "witt: isotropic input vector");
  auto reflect = [&](const Vec& w) {
    Scalar ww = form(w, w);
    Matrix r = Matrix::identity(n);
    for (int j = 0; j < n; ++j) {
      Scalar c(0);
      for (int i = 0; i < n; ++i) c += gram.at(j, i) * w[size_t(i)];
      if (sgn(c) == 0) continue;
      Scalar f = 2 * c / ww;
      for (int i = 0; i < n; ++i) r.at(i, j) -= f * w[size_t(i)];
    }
    return r;
  };
  auto sub = [&](const Vec& x, const Vec& y) {
    Vec d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[size_t(i)] = x[size_t(i)] - y[size_t(i)];
    return d;
  };
  auto add = [&](const Vec& x, const Vec& y) {
    Vec d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[size_t(i)] = x[size_t(i)] + y[size_t(i)];
    return d;
  };
  auto nonzero = [](const Vec& v) {
    for (const auto& c : v)
      if (sgn(c) != 0) return true;
    return false;
  };
  Matrix result = Matrix::identity(n);
  Vec diff = sub(v1, v2);
  if (!nonzero(diff)) {
    // identity
  } else if (sgn(form(diff, diff)) != 0) {
    result = reflect(diff);
  } else {
    Vec s = add(v1, v2);
    if (sgn(form(s, s)) == 0)
      throw Error("reflection-degenerate: both candidate mirrors are isotropic");
    result = reflect(v2) * reflect(s);
  }
  require(result * v1 == v2, "witt: construction failed to map v1 to v2");
  require(result.transpose() * gram * result == gram, "witt: construction broke the form");
  return result;
}

GradedSubspace fixed_subalgebra(const Morphism& m) {
  require(m.from == m.to, "fixed subalgebra: not an endomorphism");
  require(is_isomorphism(m), "fixed subalgebra: map is not an automorphism");
  const SuperAlgebra& a = *m.from;
  auto block_kernel = [&](int off, int sz) {
    Matrix blk(sz, sz);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) blk.at(i, j) = m.m.at(off + i, off + j);
    Matrix k = kernel_basis(blk - Matrix::identity(sz));
    std::vector<Vec> rows;
    for (int r = 0; r < k.rows; ++r) {
      Vec v(static_cast<size_t>(sz));
      bool nz = false;
      for (int j = 0; j < sz; ++j) {
        v[size_t(j)] = k.at(r, j);
        if (sgn(v[size_t(j)]) != 0) nz = true;
      }
      if (nz) rows.push_back(v);
    }
    return Subspace::span(sz, rows);
  };
  GradedSubspace s{block_kernel(0, a.dim_even), block_kernel(a.dim_even, a.dim_odd)};
  require(is_subalgebra(a, s), "fixed subalgebra: fixed points are not product-closed");
  return s;
}

GradedSubspace exchange_fixed_span(const SuperAlgebra& k10, const SuperAlgebra& tensor) {
  Morphism iso = k10_tensor_iso(k10, tensor);
  Morphism inv_iso = *inverse(iso);
  Morphism pulled = compose(inv_iso, compose(tensor_exchange(tensor), iso));
  return fixed_subalgebra(pulled);
}

Morphism conjugation_witness(const SuperAlgebra& k10, const SuperAlgebra& tensor,
                             MaximalKind kind) {
  Morphism iso = k10_tensor_iso(k10, tensor);
  GradedSubspace b = maximal_subalgebra(k10, kind);
  if (kind == MaximalKind::iii || kind == MaximalKind::iv) {
    std::vector<std::string> labels =
        kind == MaximalKind::iii
            ? std::vector<std::string>{"1", "e@e", "x@x", "x@y", "x@e", "e@y", "e@x"}
            : std::vector<std::string>{"1", "e@e", "x@x", "x@y", "y@y", "x@e", "e@y"};
    GradedSubspace target = label_span(tensor, labels);
    require(image_subspace(iso, b) == target,
            "conjugation: tensor image does not match the standard span");
    return iso;
  }
  if (kind != MaximalKind::ii)
    throw std::invalid_argument("conjugation witness is defined for kinds ii, iii, iv");

  // move a to -(c1+c2) by an isometry of the even trace-zero part, then lift
  Matrix q(4, 4);
  q.at(0, 0) = Scalar(4);
  q.at(1, 1) = Scalar(-4);
  q.at(2, 3) = Scalar(2);
  q.at(3, 2) = Scalar(2);
  Vec va = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  Vec vt = {Scalar(0), Scalar(0), Scalar(-1), Scalar(-1)};
  Matrix s = witt_map(q, va, vt);

  // transport to V coordinates of the tensor model
  const char* vlabels[4] = {"x@x", "x@y", "y@x", "y@y"};
  const char* tlabels[4] = {"a", "b", "c1", "c2"};
  Matrix pmat(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      pmat.at(r, c) = iso.m.at(tensor.index_of(vlabels[r]), k10.index_of(tlabels[c]));
  Matrix mp = pmat * s * *inverse(pmat);

  Morphism aut_t = Morphism::identity(tensor);
  bool lifted = false;
  try {
    aut_t = lift_orthogonal_to_aut(tensor, OrthogonalMap::make(mp));
    lifted = true;
  } catch (const NonSquareScalar&) {
    // the scalar obstruction: solve for a single left factor instead,
    // f . Ma = Mt on 2x2 coefficient matrices, paired with the identity
  }
  if (!lifted) {
    Vec ia = pmat * va, it = pmat * vt;
    Matrix ma(2, 2), mt(2, 2);
    ma.at(0, 0) = ia[0];
    ma.at(0, 1) = ia[1];
    ma.at(1, 0) = ia[2];
    ma.at(1, 1) = ia[3];
    mt.at(0, 0) = it[0];
    mt.at(0, 1) = it[1];
    mt.at(1, 0) = it[2];
    mt.at(1, 1) = it[3];
    auto ima = inverse(ma);
    require(ima.has_value(), "conjugation: coefficient matrix of a is singular");
    Matrix f = mt * *ima;
    aut_t = phi(tensor, WreathElement::make(f, Matrix::identity(2), false));
  }
  Morphism witness = compose(*inverse(iso), compose(aut_t, iso));
  require(is_isomorphism(witness), "conjugation: witness is not an automorphism");
  require(image_subspace(witness, b) == exchange_fixed_span(k10, tensor),
          "conjugation: witness misses the exchange-fixed subalgebra");
  return witness;
}

bool StructureReport::ok() const {
  for (const auto& r : rows)
    if (r.status == ClaimStatus::FAIL) return false;
  return true;
}

namespace {

ClaimRow row_check(std::string claim, bool pass, std::string detail = "") {
  return {std::move(claim), pass ? ClaimStatus::PASS : ClaimStatus::FAIL, std::move(detail)};
}

std::string dims_str(const GradedSubspace& s) {
  return "(" + std::to_string(s.even.dim()) + "," + std::to_string(s.odd.dim()) + ")";
}

// ground field as a one-dimensional unital algebra
SuperAlgebra make_ground() { return make_bilinear_jordan(Matrix(0, 0)); }

}  // namespace

StructureReport structure_report(const SuperAlgebra& k10, MaximalKind kind) {
  StructureReport rep;
  rep.kind = kind;
  auto el = [&](const std::string& l) { return Element::basis(k10, k10.index_of(l)); };
  GradedSubspace b = maximal_subalgebra(k10, kind);

  if (kind == MaximalKind::i) {
    rep.rows.push_back(row_check("even part is product-closed with dimensions (6,0)",
                                 is_subalgebra(k10, b) && b.even.dim() == 6 && b.odd.dim() == 0));
    auto [fpart, jpart] = even_part_ideals(k10);
    rep.rows.push_back(row_check("even part splits into two ideals with zero cross products",
                                 true, "dims " + dims_str(fpart) + " and " + dims_str(jpart)));
    {
      SuperAlgebra ground = make_ground();
      SubAlgebra fsub = materialize(k10, fpart, "line-f");
      Morphism m = Morphism::from_images(ground, *fsub.alg, {Vec{Scalar(1)}});
      rep.rows.push_back(row_check("the line through f is a copy of the ground field",
                                   is_isomorphism(m)));
    }
    {
      Matrix q(4, 4);
      q.at(0, 0) = Scalar(4);
      q.at(1, 1) = Scalar(-4);
      q.at(2, 3) = Scalar(2);
      q.at(3, 2) = Scalar(2);
      SuperAlgebra model = make_bilinear_jordan(q);
      SubAlgebra jsub = materialize(k10, jpart, "even-form-part");
      // 1 -> e, v1..v4 -> a, b, c1, c2 (in subalgebra coordinates)
      std::vector<Vec> images;
      for (const char* l : {"e", "a", "b", "c1", "c2"}) {
        auto c = jpart.even.coords_of(even_block(k10, el(l).v));
        require(c.has_value(), "structure: even summand misses a basis vector");
        images.push_back(*c);
      }
      Morphism m = Morphism::from_images(model, *jsub.alg, images);
      rep.rows.push_back(row_check(
          "the complementary ideal is the unital algebra of the form diag(4,-4) plus a hyperbolic pair",
          is_isomorphism(m)));
    }
    {
      SubAlgebra esub = materialize(k10, b, "even-part");
      rep.rows.push_back(row_check("the even part passes the commutative Jordan sweep",
                                   check_jordan(*esub.alg).pass));
    }
    return rep;
  }

  if (kind == MaximalKind::ii) {
    rep.rows.push_back(row_check("subalgebra has dimensions (3,2) and contains the unit",
                                 b.even.dim() == 3 && b.odd.dim() == 2));
    Element ep = (el("e").scaled(Scalar(2)) - el("a")).scaled(rat(1, 4));
    rep.rows.push_back(row_check("(2e-a)/4 is idempotent", ep * ep == ep));
    GradedSubspace line = graded_span(k10, {ep});
    rep.rows.push_back(row_check("the idempotent line is an ideal of the subalgebra",
                                 is_ideal(k10, line, b)));
    Element e2 = (el("e").scaled(Scalar(2)) + el("a")).scaled(rat(1, 4));
    GradedSubspace comp = graded_span(k10, {el("f"), e2, el("p1"), el("p2")});
    bool zero_cross = true;
    for (const auto& x : graded_basis_elements(k10, comp))
      if (!(ep * x).is_zero() || !(x * ep).is_zero()) zero_cross = false;
    rep.rows.push_back(
        row_check("the idempotent line multiplies the complementary summand to zero", zero_cross));
    DtInvariant inv = dt_parameter(k10, comp);
    std::pair<Scalar, Scalar> expected = {rat(-3, 2), rat(-2, 3)};
    rep.rows.push_back(row_check("complementary summand invariant pair is {-3/2, -2/3}",
                                 !inv.degenerate && inv.t_pair == expected,
                                 "computed " + inv.str()));
    {
      ClaimRow dev;
      dev.claim = "cross-check against the catalogued parameter -6";
      dev.status = ClaimStatus::DEVIATION;
      dev.detail =
          "the computed invariant pair is {-3/2, -2/3}: writing p1*p2 = -6f + 4E with the "
          "orthogonal idempotents f and E = (2e+a)/4 gives the normalized ratios 4/(-6) and "
          "(-6)/4; the value -6 appears only as the raw f-coefficient, so the pair {-6, -1/6} "
          "is not reproduced";
      rep.rows.push_back(dev);
    }
    {
      SuperAlgebra target = direct_sum(make_ground(), make_dt(rat(-3, 2)));
      SubAlgebra bsub = materialize(k10, b, "sub-ii");
      // subalgebra basis rows: e, a, f | p1, p2
      auto img = [&](std::initializer_list<std::pair<const char*, Scalar>> terms) {
        Vec v(size_t(target.dim()));
        for (const auto& [l, c] : terms) v[size_t(target.index_of(l))] = c;
        return v;
      };
      std::vector<Vec> images = {
          img({{"l.1", Scalar(1)}, {"r.e", Scalar(1)}}),
          img({{"l.1", Scalar(-2)}, {"r.e", Scalar(2)}}),
          img({{"r.f", Scalar(1)}}),
          img({{"r.u", Scalar(4)}}),
          img({{"r.v", Scalar(1)}}),
      };
      Morphism m = Morphism::from_images(*bsub.alg, target, images);
      rep.rows.push_back(row_check(
          "explicit isomorphism onto ground field + the parameter -3/2 member of the family",
          is_isomorphism(m)));
    }
    return rep;
  }

  if (kind == MaximalKind::iii) {
    rep.rows.push_back(row_check("subalgebra has dimensions (4,3)",
                                 b.even.dim() == 4 && b.odd.dim() == 3));
    GradedSubspace r = graded_span(k10, {el("c1"), el("a") + el("b"), el("p1") + el("q1")});
    rep.rows.push_back(row_check("span{c1, a+b, p1+q1} is an ideal of the subalgebra",
                                 is_ideal(k10, r, b), "dims " + dims_str(r)));
    auto chain = derived_chain_dims(k10, r);
    std::string chain_s;
    for (size_t i = 0; i < chain.size(); ++i) chain_s += (i ? " -> " : "") + std::to_string(chain[i]);
    rep.rows.push_back(row_check("the ideal is solvable", chain.back() == 0, "derived chain " + chain_s));
    QuotientPresentation qp = quotient(k10, b, r);
    rep.rows.push_back(row_check("quotient has dimensions (2,2)",
                                 qp.quotient->dim_even == 2 && qp.quotient->dim_odd == 2));
    DtInvariant inv = dt_parameter(*qp.quotient);
    std::pair<Scalar, Scalar> expected = {Scalar(-3), rat(-1, 3)};
    rep.rows.push_back(row_check("quotient invariant pair is {-3, -1/3}",
                                 !inv.degenerate && inv.t_pair == expected,
                                 "computed " + inv.str()));
    {
      SuperAlgebra target = make_dt(Scalar(-3));
      // quotient representatives: e, f | p2+q2, q1
      auto img = [&](std::initializer_list<std::pair<const char*, Scalar>> terms) {
        Vec v(size_t(target.dim()));
        for (const auto& [l, c] : terms) v[size_t(target.index_of(l))] = c;
        return v;
      };
      std::vector<Vec> images = {
          img({{"e", Scalar(1)}}),
          img({{"f", Scalar(1)}}),
          img({{"u", Scalar(2)}}),
          img({{"v", Scalar(1)}}),
      };
      Morphism m = Morphism::from_images(*qp.quotient, target, images);
      rep.rows.push_back(row_check("explicit isomorphism quotient -> parameter -3 member",
                                   is_isomorphism(m)));
    }
    return rep;
  }

  // kind iv
  rep.rows.push_back(row_check("subalgebra has dimensions (5,2)",
                               b.even.dim() == 5 && b.odd.dim() == 2));
  GradedSubspace r = graded_span(k10, {el("c1"), el("p1"), el("q1")});
  rep.rows.push_back(row_check("span{c1, p1, q1} is an ideal of the subalgebra",
                               is_ideal(k10, r, b), "dims " + dims_str(r)));
  auto chain = derived_chain_dims(k10, r);
  std::string chain_s;
  for (size_t i = 0; i < chain.size(); ++i) chain_s += (i ? " -> " : "") + std::to_string(chain[i]);
  rep.rows.push_back(row_check("the ideal is solvable", chain.back() == 0, "derived chain " + chain_s));
  QuotientPresentation qp = quotient(k10, b, r);
  rep.rows.push_back(row_check("quotient is purely even of dimension 4",
                               qp.quotient->dim_even == 4 && qp.quotient->dim_odd == 0));
  {
    const SuperAlgebra& q = *qp.quotient;
    Element qe = Element::basis(q, q.index_of("e"));
    Element qa = Element::basis(q, q.index_of("a"));
    Element qb = Element::basis(q, q.index_of("b"));
    bool prods = (qa * qa == qe.scaled(Scalar(4))) && (qb * qb == qe.scaled(Scalar(-4))) &&
                 (qa * qb).is_zero();
    rep.rows.push_back(row_check("quotient products: a^2 = 4e, b^2 = -4e, a*b = 0", prods));
  }
  {
    Matrix g(2, 2);
    g.at(0, 0) = Scalar(4);
    g.at(1, 1) = Scalar(-4);
    SuperAlgebra target = direct_sum(make_bilinear_jordan(g), make_ground());
    auto img = [&](std::initializer_list<std::pair<const char*, Scalar>> terms) {
      Vec v(size_t(target.dim()));
      for (const auto& [l, c] : terms) v[size_t(target.index_of(l))] = c;
      return v;
    };
    // quotient representatives in order e, a, b, f
    std::vector<Vec> images = {
        img({{"l.1", Scalar(1)}}),
        img({{"l.v1", Scalar(1)}}),
        img({{"l.v2", Scalar(1)}}),
        img({{"r.1", Scalar(1)}}),
    };
    Morphism m = Morphism::from_images(*qp.quotient, target, images);
    rep.rows.push_back(row_check(
        "explicit isomorphism quotient -> two-dimensional form algebra + ground field",
        is_isomorphism(m)));
  }
  return rep;
}

}  // namespace jord
