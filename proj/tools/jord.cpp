// command-line front end: builds the shipped algebras, runs identity sweeps
// with witnesses, verifies maps, factors orthogonal V-maps, and reports the
// subalgebra data. exit codes: 0 = no mathematical failure, 1 = a checked
// property failed (witnesses printed), 2 = usage or file error.
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jord/catalog.hpp"
#include "jord/identities.hpp"
#include "jord/io.hpp"
#include "jord/morphisms.hpp"
#include "jord/rng.hpp"
#include "jord/subalgebras.hpp"
#include "jord/verify_paper.hpp"

namespace {

using namespace jord;
using nlohmann::json;

json report_to_json(const IdentityReport& rep) {
  json j;
  j["identity"] = rep.identity;
  j["pass"] = rep.pass;
  j["total_defects"] = rep.total_defects;
  if (!rep.note.empty()) j["note"] = rep.note;
  json ws = json::array();
  for (const auto& w : rep.witnesses) {
    json wj;
    wj["at"] = w.at;
    wj["kind"] = w.kind;
    json d = json::array();
    for (const auto& c : w.defect) d.push_back(scalar_str(c));
    wj["defect"] = d;
    ws.push_back(wj);
  }
  j["witnesses"] = ws;
  return j;
}

// `labels` is the algebra whose coordinates the defect vectors live in
// (the envelope itself for envelope reports); null prints raw coordinates
void print_report_text(std::ostream& out, const IdentityReport& rep, const SuperAlgebra* labels,
                       const SuperAlgebra* index_labels) {
  out << rep.identity << ": " << (rep.pass ? "PASS" : "FAIL");
  if (rep.total_defects > 0) out << " (" << rep.total_defects << " defects)";
  out << "\n";
  if (!rep.note.empty()) out << "  note: " << rep.note << "\n";
  for (const auto& w : rep.witnesses) {
    out << "  witness [" << w.kind << "] at (";
    for (size_t i = 0; i < w.at.size(); ++i) {
      if (i) out << ",";
      out << w.at[i];
      if (index_labels && w.at[i] >= 0 && w.at[i] < index_labels->dim())
        out << "=" << index_labels->basis[size_t(w.at[i])];
    }
    out << "): defect ";
    if (labels) {
      out << format_element(*labels, w.defect);
    } else {
      for (size_t i = 0; i < w.defect.size(); ++i) {
        if (i) out << ",";
        out << scalar_str(w.defect[i]);
      }
    }
    out << "\n";
  }
}

std::vector<Vec> subspace_rows(const Subspace& s) {
  std::vector<Vec> rows;
  for (int r = 0; r < s.dim(); ++r) {
    Vec v(size_t(s.ambient));
    for (int j = 0; j < s.ambient; ++j) v[size_t(j)] = s.basis.at(r, j);
    rows.push_back(std::move(v));
  }
  return rows;
}

json subspace_to_json(const SuperAlgebra& a, const GradedSubspace& s) {
  json j;
  j["algebra"] = a.name;
  j["dim_even"] = s.even.dim();
  j["dim_odd"] = s.odd.dim();
  auto block = [&](const Subspace& b, int offset) {
    json rows = json::array();
    json printed = json::array();
    for (const auto& v : subspace_rows(b)) {
      json row = json::array();
      for (const auto& c : v) row.push_back(scalar_str(c));
      rows.push_back(row);
      Vec amb(size_t(a.dim()));
      for (size_t k = 0; k < v.size(); ++k) amb[size_t(offset) + k] = v[k];
      printed.push_back(format_element(a, amb));
    }
    return std::make_pair(rows, printed);
  };
  auto [er, ep] = block(s.even, 0);
  auto [orp, op] = block(s.odd, a.dim_even);
  j["even"] = er;
  j["even_printed"] = ep;
  j["odd"] = orp;
  j["odd_printed"] = op;
  return j;
}

void print_subspace_text(std::ostream& out, const SuperAlgebra& a, const GradedSubspace& s) {
  out << "dimensions (" << s.even.dim() << "," << s.odd.dim() << ") in " << a.name << "\n";
  auto block = [&](const Subspace& b, int offset, const char* tag) {
    for (const auto& v : subspace_rows(b)) {
      Vec amb(size_t(a.dim()));
      for (size_t k = 0; k < v.size(); ++k) amb[size_t(offset) + k] = v[k];
      out << "  " << tag << "  " << format_element(a, amb) << "  [";
      for (size_t k = 0; k < v.size(); ++k) {
        if (k) out << ",";
        out << scalar_str(v[k]);
      }
      out << "]\n";
    }
  };
  block(s.even, 0, "even");
  block(s.odd, a.dim_even, "odd ");
}

json wreath_to_json(const WreathElement& w) {
  auto mat = [](const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols; ++j) row.push_back(scalar_str(m.at(i, j)));
      rows.push_back(row);
    }
    return rows;
  };
  json j;
  j["f"] = mat(w.f);
  j["g"] = mat(w.g);
  j["swapped"] = w.swapped;
  return j;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Matrix mat2_from_flag(const std::string& flag, const char* name) {
  auto parts = split_commas(flag);
  if (parts.size() != 4)
    throw std::invalid_argument(std::string(name) + ": expected four comma-separated scalars");
  Matrix m(2, 2);
  m.at(0, 0) = parse_scalar(parts[0]);
  m.at(0, 1) = parse_scalar(parts[1]);
  m.at(1, 0) = parse_scalar(parts[2]);
  m.at(1, 1) = parse_scalar(parts[3]);
  return m;
}

int cmd_builtin(const std::string& which, const std::string& t_str, int n,
                const std::string& gram_path) {
  SuperAlgebra a = [&]() -> SuperAlgebra {
    if (which == "k3") return make_k3();
    if (which == "k10") return make_k10_table();
    if (which == "k10-tensor") return make_k10_tensor();
    if (which == "dt") {
      if (t_str.empty()) throw std::invalid_argument("builtin dt: --t is required");
      return make_dt(parse_scalar(t_str));
    }
    if (which == "grassmann") {
      if (n <= 0) throw std::invalid_argument("builtin grassmann: --n is required");
      return make_grassmann(n);
    }
    if (which == "bilinear") {
      if (gram_path.empty()) throw std::invalid_argument("builtin bilinear: --gram is required");
      return make_bilinear_jordan(load_gram(gram_path, "gram"));
    }
    if (which == "superform") {
      if (gram_path.empty()) throw std::invalid_argument("builtin superform: --gram is required");
      return make_superform_algebra(load_gram(gram_path, "gram_even"),
                                    load_gram(gram_path, "gram_odd"));
    }
    throw std::invalid_argument("builtin: unknown algebra '" + which + "'");
  }();
  std::cout << algebra_to_json_text(a);
  return 0;
}

int cmd_check(const std::string& path, int envelope_n, int trials, uint64_t seed,
              bool json_format) {
  SuperAlgebra a = load_algebra(path);
  std::vector<IdentityReport> reports;
  // the envelope report's defects live in envelope coordinates
  std::vector<int> env_index;  // indices into `reports` formatted via the envelope

  IdentityReport grading = check_grading(a);
  reports.push_back(grading);
  reports.push_back(check_supercommutativity(a));
  bool preconditions = reports[0].pass && reports[1].pass;
  if (preconditions) {
    reports.push_back(check_super_jordan(a));
    if (a.dim_odd == 0) reports.push_back(check_jordan(a));
  }
  std::unique_ptr<SuperAlgebra> env;
  if (envelope_n > 0 && grading.pass) {
    env = std::make_unique<SuperAlgebra>(grassmann_envelope(a, envelope_n));
    env_index.push_back(int(reports.size()));
    reports.push_back(check_envelope_jordan(a, envelope_n, trials, seed));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;

  if (json_format) {
    json j;
    j["command"] = "check";
    j["algebra"] = a.name;
    j["pass"] = all_pass;
    if (!preconditions)
      j["note"] = "graded Jordan sweep skipped: grading/supercommutativity failed";
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(report_to_json(r));
    j["reports"] = rs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra: " << a.name << " (" << a.dim_even << "|" << a.dim_odd << ")\n";
    for (size_t i = 0; i < reports.size(); ++i) {
      bool is_env = false;
      for (int e : env_index) is_env = is_env || size_t(e) == i;
      print_report_text(std::cout, reports[i], is_env ? env.get() : &a, is_env ? nullptr : &a);
    }
    if (!preconditions)
      std::cout << "graded Jordan sweep skipped: grading/supercommutativity failed\n";
    std::cout << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

int cmd_iso_verify(const std::string& map_path, const std::string& from_path,
                   const std::string& to_path, bool json_format) {
  SuperAlgebra from = load_algebra(from_path);
  SuperAlgebra to = load_algebra(to_path);
  Morphism m = Morphism::from_images(from, to, load_map_images(map_path));
  IdentityReport rep = is_homomorphism(m);
  bool invertible = m.m.rows == m.m.cols && inverse(m.m).has_value();
  bool iso = rep.pass && invertible;
  if (json_format) {
    json j;
    j["command"] = "iso verify";
    j["homomorphism"] = report_to_json(rep);
    j["invertible"] = invertible;
    j["isomorphism"] = iso;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "map: " << from.name << " -> " << to.name << "\n";
    print_report_text(std::cout, rep, &to, &from);
    std::cout << "invertible: " << (invertible ? "yes" : "no") << "\n";
    std::cout << "result: " << (iso ? "ISOMORPHISM" : "NOT AN ISOMORPHISM") << "\n";
  }
  return iso ? 0 : 1;
}

int cmd_aut_phi(const std::string& f_flag, const std::string& g_flag, bool swapped) {
  WreathElement w;
  try {
    w = WreathElement::make(mat2_from_flag(f_flag, "--f"), mat2_from_flag(g_flag, "--g"), swapped);
  } catch (const std::invalid_argument&) {
    throw;
  }
  SuperAlgebra tensor = make_k10_tensor();
  Morphism a = phi(tensor, w);
  std::cout << matrix_to_json_text(a.m);
  return 0;
}

int cmd_aut_factor(const std::string& matrix_path, bool json_format) {
  Matrix m = load_matrix(matrix_path);
  OrthogonalMap om = OrthogonalMap::make(std::move(m));  // NotOrthogonal -> exit 1
  try {
    WreathElement w = factor_orthogonal(om);
    if (json_format) {
      json j;
      j["command"] = "aut factor";
      j["result"] = "wreath-element";
      j["element"] = wreath_to_json(w);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "factored: swapped=" << (w.swapped ? "true" : "false") << "\n";
      std::cout << "f = [[" << scalar_str(w.f.at(0, 0)) << "," << scalar_str(w.f.at(0, 1))
                << "],[" << scalar_str(w.f.at(1, 0)) << "," << scalar_str(w.f.at(1, 1)) << "]]\n";
      std::cout << "g = [[" << scalar_str(w.g.at(0, 0)) << "," << scalar_str(w.g.at(0, 1))
                << "],[" << scalar_str(w.g.at(1, 0)) << "," << scalar_str(w.g.at(1, 1)) << "]]\n";
    }
    return 0;
  } catch (const NonSquareScalar& e) {
    if (json_format) {
      json j;
      j["command"] = "aut factor";
      j["result"] = "non-square-scalar";
      j["gamma"] = scalar_str(e.gamma);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "no rational factorization: residual scalar " << scalar_str(e.gamma)
                << " is not a rational square\n";
    }
    return 1;
  }
}

int cmd_sub_closure(const std::string& path, const std::string& gens_flag, bool json_format) {
  SuperAlgebra a = load_algebra(path);
  std::vector<Element> gens;
  for (const auto& label : split_commas(gens_flag)) {
    int idx = a.index_of(label);
    if (idx < 0) throw std::invalid_argument("closure: no basis vector named '" + label + "'");
    gens.push_back(Element::basis(a, idx));
  }
  GradedSubspace s = span_closure(a, gens);
  if (json_format) {
    json j;
    j["command"] = "sub closure";
    j["closure"] = subspace_to_json(a, s);
    j["is_subalgebra"] = is_subalgebra(a, s);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "closure of {" << gens_flag << "}:\n";
    print_subspace_text(std::cout, a, s);
  }
  return 0;
}

int cmd_sub_maximal(const std::string& kind_s, bool probe, int trials, uint64_t seed,
                    bool json_format) {
  auto kind = kind_from_name(kind_s);
  if (!kind) throw std::invalid_argument("sub maximal: kind must be one of i, ii, iii, iv");
  SuperAlgebra k10 = make_k10_table();
  GradedSubspace b = maximal_subalgebra(k10, *kind);
  int code = 0;
  json j;
  if (json_format) {
    j["command"] = "sub maximal";
    j["kind"] = kind_s;
    j["subalgebra"] = subspace_to_json(k10, b);
  } else {
    std::cout << "subalgebra (" << kind_s << "):\n";
    print_subspace_text(std::cout, k10, b);
  }
  if (probe) {
    ProbeResult res = maximality_probe(k10, b, trials, seed);
    code = res.probably_maximal ? 0 : 1;
    if (json_format) {
      j["probe"] = {{"probably_maximal", res.probably_maximal}, {"trials", res.trials_run}};
      if (res.witness) {
        json w = json::array();
        for (const auto& c : *res.witness) w.push_back(scalar_str(c));
        j["probe"]["witness"] = w;
      }
    } else {
      std::cout << "probe: "
                << (res.probably_maximal ? "probably maximal" : "NOT maximal (refuted)")
                << " after canonical complement + " << res.trials_run << " seeded trials\n";
      if (res.witness)
        std::cout << "  witness: " << format_element(k10, *res.witness) << "\n";
    }
  }
  if (json_format) std::cout << j.dump(2) << "\n";
  return code;
}

int cmd_sub_structure(const std::string& kind_s, bool json_format) {
  auto kind = kind_from_name(kind_s);
  if (!kind) throw std::invalid_argument("sub structure: kind must be one of i, ii, iii, iv");
  SuperAlgebra k10 = make_k10_table();
  StructureReport rep = structure_report(k10, *kind);
  if (json_format) {
    json j;
    j["command"] = "sub structure";
    j["kind"] = kind_s;
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json rj;
      rj["status"] = r.status == ClaimStatus::PASS     ? "PASS"
                     : r.status == ClaimStatus::FAIL   ? "FAIL"
                                                       : "DEVIATION";
      rj["claim"] = r.claim;
      rj["detail"] = r.detail;
      rows.push_back(rj);
    }
    j["rows"] = rows;
    j["ok"] = rep.ok();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "structure (" << kind_s << "):\n";
    for (const auto& r : rep.rows) {
      const char* st = r.status == ClaimStatus::PASS     ? "PASS     "
                       : r.status == ClaimStatus::FAIL   ? "FAIL     "
                                                         : "DEVIATION";
      std::cout << "  " << st << " " << r.claim << "\n";
      if (!r.detail.empty()) std::cout << "            " << r.detail << "\n";
    }
    std::cout << "result: " << (rep.ok() ? "OK" : "FAIL") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_sub_conjugate(const std::string& kind_s, bool json_format) {
  auto kind = kind_from_name(kind_s);
  if (!kind || *kind == MaximalKind::i)
    throw std::invalid_argument("sub conjugate: kind must be one of ii, iii, iv");
  SuperAlgebra k10 = make_k10_table();
  SuperAlgebra tensor = make_k10_tensor();
  Morphism w = conjugation_witness(k10, tensor, *kind);
  const char* target = *kind == MaximalKind::ii
                           ? "exchange-fixed subalgebra {e, f, c1+c2 | p1-q2, p2-q1}"
                           : (*kind == MaximalKind::iii
                                  ? "monomial span {1, e@e, x@x, x@y | x@e, e@y, e@x}"
                                  : "monomial span {1, e@e, x@x, x@y, y@y | x@e, e@y}");
  if (json_format) {
    json j;
    j["command"] = "sub conjugate";
    j["kind"] = kind_s;
    j["source"] = w.from->name;
    j["target_algebra"] = w.to->name;
    j["carries_onto"] = target;
    json rows = json::array();
    for (int i = 0; i < w.m.rows; ++i) {
      json row = json::array();
      for (int jj = 0; jj < w.m.cols; ++jj) row.push_back(scalar_str(w.m.at(i, jj)));
      rows.push_back(row);
    }
    j["matrix"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verified map " << w.from->name << " -> " << w.to->name
              << " carrying subalgebra (" << kind_s << ") onto the " << target << "\n";
    std::cout << matrix_to_json_text(w.m);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact structure-constant toolkit for graded Jordan algebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  // builtin
  auto* b = app.add_subcommand("builtin", "emit a built-in algebra as JSON");
  std::string b_which, b_t, b_gram;
  int b_n = 0;
  b->add_option("which", b_which, "k3|dt|k10|k10-tensor|grassmann|bilinear|superform")->required();
  b->add_option("--t", b_t, "family parameter for dt, e.g. -3 or -3/2");
  b->add_option("--n", b_n, "generator count for grassmann");
  b->add_option("--gram", b_gram, "gram file ({gram} or {gram_even,gram_odd})");

  // check
  auto* c = app.add_subcommand("check", "run the identity sweeps on an algebra file");
  std::string c_path;
  int c_env = 0, c_trials = 200;
  uint64_t c_seed = kDefaultSeed;
  c->add_option("algebra", c_path, "algebra JSON file")->required();
  c->add_option("--envelope", c_env, "also check the coefficient extension with N generators");
  c->add_option("--trials", c_trials, "random trials for the envelope check");
  c->add_option("--seed", c_seed, "seed for the envelope trials");

  // iso verify
  auto* iso = app.add_subcommand("iso", "linear map verification");
  iso->require_subcommand(1);
  auto* iv = iso->add_subcommand("verify", "verify a map file as an isomorphism");
  std::string iv_map, iv_from, iv_to;
  iv->add_option("map", iv_map, "map JSON file ({images: [...]})")->required();
  iv->add_option("--from", iv_from, "source algebra file")->required();
  iv->add_option("--to", iv_to, "target algebra file")->required();

  // aut phi / aut factor
  auto* aut = app.add_subcommand("aut", "tensor-model automorphisms");
  aut->require_subcommand(1);
  auto* ap = aut->add_subcommand("phi", "lift a wreath element to a 10x10 automorphism");
  std::string ap_f, ap_g;
  bool ap_swap = false;
  ap->add_option("--f", ap_f, "left 2x2 factor, row-major a,b,c,d")->required();
  ap->add_option("--g", ap_g, "right 2x2 factor, row-major a,b,c,d")->required();
  ap->add_flag("--swap", ap_swap, "precede by the factor exchange");
  auto* af = aut->add_subcommand("factor", "factor an orthogonal V-map through the wreath group");
  std::string af_matrix;
  af->add_option("--matrix", af_matrix, "4x4 matrix JSON file")->required();

  // sub ...
  auto* sub = app.add_subcommand("sub", "subalgebra machinery");
  sub->require_subcommand(1);
  auto* sc = sub->add_subcommand("closure", "generated subalgebra of labeled basis vectors");
  std::string sc_path, sc_gens;
  sc->add_option("algebra", sc_path, "algebra JSON file")->required();
  sc->add_option("--gens", sc_gens, "comma-separated basis labels")->required();
  auto* sm = sub->add_subcommand("maximal", "one of the four distinguished subalgebras");
  std::string sm_kind;
  bool sm_probe = false;
  int sm_trials = 200;
  uint64_t sm_seed = kDefaultSeed;
  sm->add_option("kind", sm_kind, "i|ii|iii|iv")->required();
  sm->add_flag("--probe", sm_probe, "run the randomized maximality probe");
  sm->add_option("--trials", sm_trials, "random adjunctions for the probe");
  sm->add_option("--seed", sm_seed, "seed for the probe");
  auto* ss = sub->add_subcommand("structure", "decomposition data of a distinguished subalgebra");
  std::string ss_kind;
  ss->add_option("kind", ss_kind, "i|ii|iii|iv")->required();
  auto* sj = sub->add_subcommand("conjugate", "verified map onto the standard description");
  std::string sj_kind;
  sj->add_option("kind", sj_kind, "ii|iii|iv")->required();

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the full claim-by-claim battery");
  uint64_t vp_seed = kDefaultSeed;
  std::string vp_fixtures = "fixtures";
  vp->add_option("--seed", vp_seed, "seed for all randomized checks");
  vp->add_option("--fixtures", vp_fixtures, "directory holding the shipped fixture files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  bool json_format = format == "json";
  try {
    if (b->parsed()) return cmd_builtin(b_which, b_t, b_n, b_gram);
    if (c->parsed()) return cmd_check(c_path, c_env, c_trials, c_seed, json_format);
    if (iv->parsed()) return cmd_iso_verify(iv_map, iv_from, iv_to, json_format);
    if (ap->parsed()) return cmd_aut_phi(ap_f, ap_g, ap_swap);
    if (af->parsed()) return cmd_aut_factor(af_matrix, json_format);
    if (sc->parsed()) return cmd_sub_closure(sc_path, sc_gens, json_format);
    if (sm->parsed()) return cmd_sub_maximal(sm_kind, sm_probe, sm_trials, sm_seed, json_format);
    if (ss->parsed()) return cmd_sub_structure(ss_kind, json_format);
    if (sj->parsed()) return cmd_sub_conjugate(sj_kind, json_format);
    if (vp->parsed()) return run_verify_paper(std::cout, vp_seed, vp_fixtures, json_format);
    std::cerr << "no command\n";
    return 2;
  } catch (const NotOrthogonal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const jord::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
