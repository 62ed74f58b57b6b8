#include "jord/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "jord/rng.hpp"

namespace jord {

namespace {

constexpr size_t kMaxWitnesses = 16;

struct Bucket {
  long total = 0;
  std::vector<DefectWitness> wits;
  void add(std::vector<int> at, Vec defect, const char* kind) {
    ++total;
    if (wits.size() < kMaxWitnesses) wits.push_back({std::move(at), std::move(defect), kind});
  }
};

// Runs body(idx, bucket) for idx in [0, outer); buckets are merged in index
// order afterwards, so the parallel schedule cannot change the report.
template <class Fn>
void sweep(long outer, Exec ex, IdentityReport& rep, Fn body) {
  std::vector<Bucket> parts(static_cast<size_t>(outer));
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long t = 0; t < outer; ++t) body(t, parts[size_t(t)]);
  } else {
    for (long t = 0; t < outer; ++t) body(t, parts[size_t(t)]);
  }
  for (auto& p : parts) {
    rep.total_defects += p.total;
    for (auto& w : p.wits) {
      if (rep.witnesses.size() >= kMaxWitnesses) break;
      rep.witnesses.push_back(std::move(w));
    }
  }
  rep.pass = rep.pass && rep.total_defects == 0;
}

Element assoc3(const Element& u, const Element& z, const Element& t) {
  return (u * z) * t - u * (z * t);
}

void commutativity_pairs(const SuperAlgebra& a, Exec ex, IdentityReport& rep, bool graded_sign) {
  int n = a.dim();
  sweep(long(n) * n, ex, rep, [&](long idx, Bucket& out) {
    int i = int(idx / n), j = int(idx % n);
    Scalar s = (graded_sign && a.parity(i) && a.parity(j)) ? Scalar(-1) : Scalar(1);
    Vec d(n);
    for (const auto& [k, c] : a.row(i, j)) d[k] += c;
    for (const auto& [k, c] : a.row(j, i)) d[k] -= s * c;
    bool zero = true;
    for (const auto& c : d)
      if (sgn(c) != 0) {
        zero = false;
        break;
      }
    if (!zero) out.add({i, j}, std::move(d), graded_sign ? "supercommutativity-pair" : "commutativity-pair");
  });
}

}  // namespace

IdentityReport check_supercommutativity(const SuperAlgebra& a, Exec ex) {
  IdentityReport rep;
  rep.identity = "supercommutativity";
  commutativity_pairs(a, ex, rep, /*graded_sign=*/true);
  return rep;
}

IdentityReport check_super_jordan(const SuperAlgebra& a, Exec ex) {
  if (!check_grading(a).pass || !check_supercommutativity(a, ex).pass)
    throw std::invalid_argument(
        "super-jordan sweep requires a graded, supercommutative table; run the grading and "
        "supercommutativity checks first");
  IdentityReport rep;
  rep.identity = "super-jordan";
  rep.note = "cyclic graded form of (x^2 y) x = x^2 (y x); over Q the two are equivalent";
  int n = a.dim();
  // precomputed basis products
  std::vector<Element> bs;
  bs.reserve(size_t(n));
  for (int i = 0; i < n; ++i) bs.push_back(Element::basis(a, i));
  std::vector<Element> pr(size_t(n) * n, Element::zero(a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pr[size_t(i) * n + j] = bs[i] * bs[j];

  auto sign = [](int e) { return (e & 1) ? Scalar(-1) : Scalar(1); };
  sweep(long(n) * n * n * n, ex, rep, [&](long idx, Bucket& out) {
    int l = int(idx % n);
    idx /= n;
    int k = int(idx % n);
    idx /= n;
    int j = int(idx % n);
    int i = int(idx / n);
    int pi_ = a.parity(i), pj = a.parity(j), pk = a.parity(k), pl = a.parity(l);
    // sum over the cyclic shifts of (x, y, t) with z fixed in the middle slot
    Element d = assoc3(pr[size_t(i) * n + j], bs[k], bs[l]).scaled(sign((pi_ + pk) * pl)) +
                assoc3(pr[size_t(j) * n + l], bs[k], bs[i]).scaled(sign((pj + pk) * pi_)) +
                assoc3(pr[size_t(l) * n + i], bs[k], bs[j]).scaled(sign((pl + pk) * pj));
    if (!d.is_zero()) out.add({i, j, k, l}, std::move(d.v), "super-jordan-quadruple");
  });
  return rep;
}

IdentityReport check_jordan(const SuperAlgebra& a, Exec ex) {
  if (a.dim_odd != 0)
    throw std::invalid_argument("jordan sweep requires a purely even algebra");
  IdentityReport rep;
  rep.identity = "jordan";
  rep.note = "commutativity plus the full linearization of (x^2 y) x = x^2 (y x)";
  commutativity_pairs(a, ex, rep, /*graded_sign=*/false);

  int n = a.dim();
  std::vector<Element> bs;
  bs.reserve(size_t(n));
  for (int i = 0; i < n; ++i) bs.push_back(Element::basis(a, i));
  std::vector<Element> pr(size_t(n) * n, Element::zero(a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pr[size_t(i) * n + j] = bs[i] * bs[j];

  // (x1,x2,x3,y) with all six placements of the x's
  sweep(long(n) * n * n * n, ex, rep, [&](long idx, Bucket& out) {
    int l = int(idx % n);
    idx /= n;
    int k = int(idx % n);
    idx /= n;
    int j = int(idx % n);
    int i = int(idx / n);
    const int perms[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
    Element d = Element::zero(a);
    for (const auto& p : perms) d = d + assoc3(pr[size_t(p[0]) * n + p[1]], bs[l], bs[p[2]]);
    if (!d.is_zero()) out.add({i, j, k, l}, std::move(d.v), "linearized-jordan-quadruple");
  });
  return rep;
}

SuperAlgebra grassmann_envelope(const SuperAlgebra& a, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("envelope: n out of range (1..8)");
  if (!check_grading(a).pass)
    throw std::invalid_argument("envelope requires a consistently graded table");
  int total_masks = 1 << n;
  // exterior monomials grouped by degree, ascending mask within a degree
  std::vector<int> masks;
  for (int deg = 0; deg <= n; ++deg)
    for (int m = 0; m < total_masks; ++m)
      if (__builtin_popcount(unsigned(m)) == deg) masks.push_back(m);
  auto mono_label = [&](int m) {
    if (m == 0) return std::string("1");
    std::string s = "g";
    for (int b = 0; b < n; ++b)
      if (m >> b & 1) s += std::to_string(b + 1);
    return s;
  };
  // envelope basis: (monomial, algebra basis vector) with matching parities
  struct Slot {
    int mask, u;
  };
  std::vector<Slot> slots;
  std::vector<std::string> basis;
  std::vector<std::vector<int>> pos(size_t(total_masks), std::vector<int>(size_t(a.dim()), -1));
  for (int m : masks)
    for (int u = 0; u < a.dim(); ++u) {
      if ((__builtin_popcount(unsigned(m)) & 1) != a.parity(u)) continue;
      pos[size_t(m)][size_t(u)] = int(slots.size());
      slots.push_back({m, u});
      basis.push_back(mono_label(m) + "@" + a.basis[size_t(u)]);
    }
  int ne = int(slots.size());
  std::vector<TableEntry> entries;
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j) {
      auto [sm, u] = slots[size_t(i)];
      auto [tm, v] = slots[size_t(j)];
      if (sm & tm) continue;  // repeated exterior generator
      int inv = 0;
      for (int b1 = 0; b1 < n; ++b1)
        if (sm >> b1 & 1)
          for (int b2 = 0; b2 < b1; ++b2)
            if (tm >> b2 & 1) ++inv;
      Scalar sg = (inv & 1) ? Scalar(-1) : Scalar(1);
      for (const auto& [k, c] : a.row(u, v))
        entries.push_back({i, j, pos[size_t(sm | tm)][size_t(k)], sg * c});
    }
  return SuperAlgebra::from_entries(
      "envelope(" + a.name + "," + std::to_string(n) + ")", ne, 0, basis, entries,
      /*implicit_zero_rows=*/true);
}

IdentityReport check_envelope_jordan(const SuperAlgebra& a, int n, int trials,
                                     std::uint64_t seed, Exec ex) {
  if (trials < 1) throw std::invalid_argument("envelope check: trials must be positive");
  SuperAlgebra env = grassmann_envelope(a, n);
  IdentityReport rep;
  rep.identity = "envelope-jordan";
  rep.note = "commutativity swept over all basis pairs; (x^2 y) x = x^2 (y x) sampled on " +
             std::to_string(trials) + " random elements (seed " + std::to_string(seed) + ")";
  commutativity_pairs(env, ex, rep, /*graded_sign=*/false);

  int ne = env.dim();
  sweep(trials, ex, rep, [&](long t, Bucket& out) {
    Lcg64 rng = Lcg64::split(seed, uint64_t(t));
    Vec xv(ne), yv(ne);
    for (auto& c : xv) c = Scalar(long(rng.uniform_int(-3, 3)));
    for (auto& c : yv) c = Scalar(long(rng.uniform_int(-3, 3)));
    Element x = Element::from(env, std::move(xv));
    Element y = Element::from(env, std::move(yv));
    Element x2 = x * x;
    Element d = (x2 * y) * x - x2 * (y * x);
    if (!d.is_zero()) out.add({int(t)}, std::move(d.v), "power-identity-trial");
  });
  return rep;
}

}  // namespace jord
