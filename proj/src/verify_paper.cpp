#include "jord/verify_paper.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include "jord/catalog.hpp"
#include "jord/identities.hpp"
#include "jord/io.hpp"
#include "jord/morphisms.hpp"
#include "jord/subalgebras.hpp"
#include "json.hpp"

namespace jord {

namespace {

const char* status_str(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::PASS: return "PASS";
    case ClaimStatus::FAIL: return "FAIL";
    case ClaimStatus::DEVIATION: return "DEVIATION";
  }
  return "?";
}

ClaimStatus pass_if(bool ok) { return ok ? ClaimStatus::PASS : ClaimStatus::FAIL; }

// run one claim body, converting exceptions into FAIL rows so a single
// broken construction never aborts the whole report
template <class Fn>
ClaimRow run_claim(const std::string& text, Fn&& body) {
  ClaimRow r;
  r.claim = text;
  try {
    r.status = body(r.detail);
  } catch (const std::exception& e) {
    r.status = ClaimStatus::FAIL;
    r.detail = std::string("unexpected error: ") + e.what();
  }
  return r;
}

std::string tuple_labels(const SuperAlgebra& a, const std::vector<int>& at) {
  std::string s = "(";
  for (size_t i = 0; i < at.size(); ++i) {
    if (i) s += ", ";
    s += a.basis[size_t(at[i])];
  }
  return s + ")";
}

bool three_sweeps(const SuperAlgebra& a) {
  return check_grading(a).pass && check_supercommutativity(a).pass && check_super_jordan(a).pass;
}

}  // namespace

int run_verify_paper(std::ostream& out, std::uint64_t seed, const std::string& fixtures_dir,
                     bool json_format) {
  // negative control read up front so a missing file surfaces as a usage
  // error before any long computation
  SuperAlgebra broken = load_algebra(fixtures_dir + "/k10-broken.json");

  SuperAlgebra k10 = make_k10_table();
  SuperAlgebra tensor = make_k10_tensor();

  std::vector<ClaimRow> rows;

  rows.push_back(run_claim(
      "table model satisfies grading, supercommutativity and the graded Jordan identity",
      [&](std::string& detail) {
        auto sj = check_super_jordan(k10);
        detail = "100 pairs and 10000 quadruples, all defects zero";
        return pass_if(check_grading(k10).pass && check_supercommutativity(k10).pass && sj.pass);
      }));

  rows.push_back(run_claim(
      "tensor model satisfies the same identities and its formal unit acts as identity",
      [&](std::string& detail) {
        bool ok = three_sweeps(tensor);
        Element one = Element::basis(tensor, 0);
        for (int j = 0; j < tensor.dim() && ok; ++j) {
          Element x = Element::basis(tensor, j);
          ok = (one * x == x) && (x * one == x);
        }
        detail = "unit checked against all 10 basis vectors";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the explicit ten-column map is a degree-preserving isomorphism table -> tensor",
      [&](std::string& detail) {
        Morphism iso = k10_tensor_iso(k10, tensor);
        Scalar d = det(iso.m);
        detail = "multiplicative on all 100 basis pairs; determinant " + scalar_str(d);
        return pass_if(d == Scalar(-16384));
      }));

  rows.push_back(run_claim(
      "three-dimensional model and the family members t in {-3,-6,1,2,-3/2} pass their sweeps",
      [&](std::string& detail) {
        bool ok = three_sweeps(make_k3());
        for (const Scalar& t : {rat(-3), rat(-6), rat(1), rat(2), rat(-3, 2)})
          ok = ok && three_sweeps(make_dt(t));
        detail = "k3, dt(-3), dt(-6), dt(1), dt(2), dt(-3/2)";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "form algebras and the symmetrized matrix algebra pass their identity suites",
      [&](std::string& detail) {
        bool ok = check_jordan(make_bilinear_jordan(Matrix::identity(2))).pass;
        Matrix godd(2, 2);
        godd.at(0, 1) = Scalar(1);
        godd.at(1, 0) = Scalar(-1);
        ok = ok && three_sweeps(make_superform_algebra(Matrix::identity(2), godd));
        ok = ok && check_jordan(make_plus(make_full_matrix_algebra(2))).pass;
        detail = "bilinear(diag(1,1)), superform(2|2), mat(2)+";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "coefficient extension with three anticommuting generators keeps the power identity",
      [&](std::string& detail) {
        SuperAlgebra env = grassmann_envelope(k10, 3);
        auto rep = check_envelope_jordan(k10, 3, 120, seed);
        detail = "extension dimension " + std::to_string(env.dim()) + "; 120 seeded trials";
        return pass_if(env.dim() == 40 && rep.pass);
      }));

  rows.push_back(run_claim(
      "the shipped broken table fails the graded Jordan sweep with a recorded witness",
      [&](std::string& detail) {
        bool pre = check_grading(broken).pass && check_supercommutativity(broken).pass;
        auto rep = check_super_jordan(broken);
        bool ok = pre && !rep.pass && rep.total_defects == 492 && !rep.witnesses.empty() &&
                  rep.witnesses.front().at == std::vector<int>{0, 2, 6, 9};
        detail = std::to_string(rep.total_defects) + " defective quadruples; first witness " +
                 (rep.witnesses.empty() ? std::string("none")
                                        : tuple_labels(broken, rep.witnesses.front().at));
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the broken table also fails the coefficient-extension check",
      [&](std::string& detail) {
        auto rep = check_envelope_jordan(broken, 3, 24, seed);
        detail = "power identity defects in " + std::to_string(rep.total_defects) +
                 " of 24 seeded trials";
        return pass_if(!rep.pass);
      }));

  // shared seeded wreath elements for the lifting rows
  std::vector<WreathElement> ws, ws2;
  for (int t = 0; t < 20; ++t) {
    Lcg64 r1 = Lcg64::split(seed, 100 + uint64_t(t));
    Lcg64 r2 = Lcg64::split(seed, 200 + uint64_t(t));
    ws.push_back(random_wreath(r1));
    ws2.push_back(random_wreath(r2));
  }

  rows.push_back(run_claim(
      "lifting is multiplicative and inverse-compatible on 20 seeded wreath elements",
      [&](std::string& detail) {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
          Morphism a1 = phi(tensor, ws[size_t(t)]);
          Morphism a2 = phi(tensor, ws2[size_t(t)]);
          ok = compose(a1, a2).m == phi(tensor, wreath_compose(ws[size_t(t)], ws2[size_t(t)])).m;
          ok = ok && phi(tensor, wreath_invert(ws[size_t(t)])).m == inverse(a1.m).value();
        }
        detail = "entries of height <= 5, determinant one";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the V-restriction of every lifted automorphism equals the direct V-action",
      [&](std::string& detail) {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t)
          ok = psi(phi(tensor, ws[size_t(t)])).m == psi_tilde(ws[size_t(t)]).m;
        // kernel bookkeeping: (-id,-id) lifts to the grading automorphism,
        // acts trivially on V; the grading automorphism restricts to identity
        Matrix neg = Matrix::identity(2).scaled(Scalar(-1));
        WreathElement negneg = WreathElement::make(neg, neg, false);
        ok = ok && phi(tensor, negneg).m == grading_automorphism(tensor).m;
        ok = ok && psi_tilde(negneg).m == Matrix::identity(4);
        ok = ok && psi(grading_automorphism(tensor)).m == Matrix::identity(4);
        WreathElement swap_only = WreathElement::make(Matrix::identity(2), Matrix::identity(2), true);
        ok = ok && psi(tensor_exchange(tensor)).m == psi_tilde(swap_only).m;
        detail = "20 elements; (-id,-id) and the grading automorphism sit in the kernels";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "constructive factorization recovers each element up to the sign kernel; lifts restrict "
      "exactly",
      [&](std::string& detail) {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
          OrthogonalMap m = psi_tilde(ws[size_t(t)]);
          ok = factor_orthogonal(m) == ws[size_t(t)].canonical();
          ok = ok && psi(lift_orthogonal_to_aut(tensor, m)).m == m.m;
        }
        detail = "factor(action(w)) == canonical(w) and psi(lift(m)) == m, 20 elements";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the designed scalar obstruction diag(1,2,1/2,1) is reported, not silently lifted",
      [&](std::string& detail) {
        Matrix d = Matrix::identity(4);
        d.at(1, 1) = Scalar(2);
        d.at(2, 2) = rat(1, 2);
        try {
          factor_orthogonal(OrthogonalMap::make(d));
        } catch (const NonSquareScalar& e) {
          detail = "raised non-square scalar report with value " + scalar_str(e.gamma);
          return pass_if(e.gamma == Scalar(2));
        }
        detail = "factorization unexpectedly succeeded";
        return ClaimStatus::FAIL;
      }));

  rows.push_back(run_claim(
      "the even part splits as a line plus a five-dimensional form ideal and passes the "
      "ungraded Jordan sweep",
      [&](std::string& detail) {
        auto [fpart, jpart] = even_part_ideals(k10);
        GradedSubspace even = maximal_subalgebra(k10, MaximalKind::i);
        SubAlgebra esub = materialize(k10, even, "even-part");
        bool ok = fpart.dim() == 1 && jpart.dim() == 5 && check_jordan(*esub.alg).pass;
        detail = "ideals of dimensions 1 and 5, zero cross products";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the four distinguished subalgebras have dimensions (6,0), (3,2), (4,3), (5,2)",
      [&](std::string& detail) {
        const int want[4][2] = {{6, 0}, {3, 2}, {4, 3}, {5, 2}};
        const MaximalKind kinds[4] = {MaximalKind::i, MaximalKind::ii, MaximalKind::iii,
                                      MaximalKind::iv};
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
          GradedSubspace b = maximal_subalgebra(k10, kinds[k]);
          ok = b.even.dim() == want[k][0] && b.odd.dim() == want[k][1];
        }
        detail = "each verified product-closed, proper, containing e+f";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "maximality probes: every adjunction regenerates the whole algebra",
      [&](std::string& detail) {
        const MaximalKind kinds[4] = {MaximalKind::i, MaximalKind::ii, MaximalKind::iii,
                                      MaximalKind::iv};
        bool ok = true;
        for (int k = 0; k < 4 && ok; ++k) {
          auto probe = maximality_probe(k10, maximal_subalgebra(k10, kinds[k]), 200, seed);
          ok = probe.probably_maximal && probe.trials_run == 200;
        }
        detail = "4 subalgebras x (canonical complement + 200 seeded trials)";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "the non-maximal span{e,f,c1,p1,q1} is refuted and saturates to subalgebra (iv)",
      [&](std::string& detail) {
        GradedSubspace s = label_span(k10, {"e", "f", "c1", "p1", "q1"});
        auto probe = maximality_probe(k10, s, 50, seed);
        bool ok = !probe.probably_maximal && probe.witness.has_value() &&
                  probe.proper_envelope == maximal_subalgebra(k10, MaximalKind::iv);
        detail = probe.witness
                     ? "witness " + format_element(k10, *probe.witness) + "; closure dimensions (" +
                           std::to_string(probe.witness_closure->even.dim()) + "," +
                           std::to_string(probe.witness_closure->odd.dim()) +
                           "); greedy saturation equals span (iv)"
                     : "no witness found";
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "structure reports for kinds i, iii, iv pass every row",
      [&](std::string& detail) {
        bool ok = true;
        std::string counts;
        for (MaximalKind k : {MaximalKind::i, MaximalKind::iii, MaximalKind::iv}) {
          StructureReport rep = structure_report(k10, k);
          bool clean = rep.ok();
          for (const auto& row : rep.rows)
            if (row.status == ClaimStatus::DEVIATION) clean = false;
          ok = ok && clean;
          if (!counts.empty()) counts += ", ";
          counts += std::string(kind_name(k)) + ": " + std::to_string(rep.rows.size()) + " rows";
        }
        detail = counts;
        return pass_if(ok);
      }));

  rows.push_back(run_claim(
      "structure report for kind ii passes with one recorded deviation",
      [&](std::string& detail) {
        StructureReport rep = structure_report(k10, MaximalKind::ii);
        int deviations = 0;
        std::string dev_detail;
        for (const auto& row : rep.rows)
          if (row.status == ClaimStatus::DEVIATION) {
            ++deviations;
            dev_detail = row.detail;
          }
        if (!rep.ok()) {
          detail = "structure rows failed";
          return ClaimStatus::FAIL;
        }
        if (deviations != 1) {
          detail = "expected exactly one recorded deviation, found " + std::to_string(deviations);
          return ClaimStatus::FAIL;
        }
        detail = dev_detail;
        return ClaimStatus::DEVIATION;
      }));

  rows.push_back(run_claim(
      "conjugation witnesses: monomial spans for (iii)/(iv); (ii) onto the exchange-fixed "
      "subalgebra",
      [&](std::string& detail) {
        conjugation_witness(k10, tensor, MaximalKind::iii);
        conjugation_witness(k10, tensor, MaximalKind::iv);
        Morphism w2 = conjugation_witness(k10, tensor, MaximalKind::ii);
        GradedSubspace fixed = exchange_fixed_span(k10, tensor);
        // odd part must be the (-1)-eigenspace of multiplication by c1+c2
        Element cc = Element::basis(k10, k10.index_of("c1")) +
                     Element::basis(k10, k10.index_of("c2"));
        Matrix mo(k10.dim_odd, k10.dim_odd);
        for (int j = 0; j < k10.dim_odd; ++j) {
          Element prod = cc * Element::basis(k10, k10.dim_even + j);
          for (int i = 0; i < k10.dim_odd; ++i) mo.at(i, j) = prod.v[size_t(k10.dim_even + i)];
        }
        Matrix ker = kernel_basis(mo + Matrix::identity(k10.dim_odd));
        std::vector<Vec> rows_v;
        for (int r = 0; r < ker.rows; ++r) {
          Vec v(size_t(k10.dim_odd));
          for (int j = 0; j < k10.dim_odd; ++j) v[size_t(j)] = ker.at(r, j);
          rows_v.push_back(std::move(v));
        }
        Subspace eig = Subspace::span(k10.dim_odd, rows_v);
        GradedSubspace img = image_subspace(w2, maximal_subalgebra(k10, MaximalKind::ii));
        bool ok = fixed.odd == eig && img.odd == eig && img == fixed;
        detail = "fixed span {e, f, c1+c2 | p1-q2, p2-q1}; odd part is the (-1)-eigenspace of "
                 "multiplication by c1+c2";
        return pass_if(ok);
      }));

  // ---- report ----
  int n_pass = 0, n_fail = 0, n_dev = 0;
  for (const auto& r : rows) {
    if (r.status == ClaimStatus::PASS) ++n_pass;
    if (r.status == ClaimStatus::FAIL) ++n_fail;
    if (r.status == ClaimStatus::DEVIATION) ++n_dev;
  }

  if (json_format) {
    nlohmann::json j;
    j["command"] = "verify-paper";
    j["seed"] = seed;
    nlohmann::json claims = nlohmann::json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
      nlohmann::json c;
      c["id"] = int(i + 1);
      c["status"] = status_str(rows[i].status);
      c["claim"] = rows[i].claim;
      c["detail"] = rows[i].detail;
      claims.push_back(c);
    }
    j["claims"] = claims;
    j["summary"] = {{"total", int(rows.size())},
                    {"pass", n_pass},
                    {"fail", n_fail},
                    {"deviation", n_dev}};
    out << j.dump(2) << "\n";
    return n_fail == 0 ? 0 : 1;
  }

  std::ostringstream os;
  os << "== verify-paper (seed " << seed << ") ==\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    char idbuf[8];
    std::snprintf(idbuf, sizeof idbuf, "[%2d]", int(i + 1));
    std::string st = status_str(rows[i].status);
    st.resize(9, ' ');
    os << idbuf << " " << st << " " << rows[i].claim << "\n";
    if (!rows[i].detail.empty()) os << "               " << rows[i].detail << "\n";
  }
  if (n_dev > 0) {
    os << "deviations:\n";
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i].status == ClaimStatus::DEVIATION)
        os << "  [" << (i + 1) << "] " << rows[i].claim << ": " << rows[i].detail << "\n";
  }
  os << "summary: " << rows.size() << " claims | " << n_pass << " pass | " << n_fail
     << " fail | " << n_dev << " deviation" << (n_dev == 1 ? "" : "s") << "\n";
  os << "result: " << (n_fail == 0 ? "OK" : "FAIL") << "\n";
  out << os.str();
  return n_fail == 0 ? 0 : 1;
}

}  // namespace jord
