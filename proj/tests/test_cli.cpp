#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

#include "jord/catalog.hpp"
#include "jord/io.hpp"
#include "jord/morphisms.hpp"
#include "jord/subalgebras.hpp"

using namespace jord;
using nlohmann::json;

namespace {

const std::string kCli = JORD_CLI_PATH;
const std::string kFixtures = JORD_FIXTURES_DIR;
const std::string kTmp = JORD_TMP_DIR;

struct RunResult {
  int exit_code;
  std::string out;
};

int run_counter = 0;

RunResult run(const std::string& args, const std::string& env = "") {
  std::string out_path = kTmp + "/cli_out_" + std::to_string(run_counter++) + ".txt";
  std::string cmd = env + (env.empty() ? "" : " ") + "\"" + kCli + "\" " + args + " > \"" +
                    out_path + "\" 2>&1";
  int status = std::system(cmd.c_str());
  int code = -1;
  if (status != -1 && WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, read_file(out_path)};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = kTmp + "/" + name;
  write_file(path, content);
  return path;
}

}  // namespace

TEST_CASE("cli: builtin emits loadable algebras identical to the library") {
  RunResult r = run("builtin k10");
  REQUIRE(r.exit_code == 0);
  SuperAlgebra a = algebra_from_json_text(r.out);
  SuperAlgebra ref = make_k10_table();
  CHECK(a.basis == ref.basis);
  CHECK(a.prod == ref.prod);

  CHECK(run("builtin k3").exit_code == 0);
  CHECK(run("builtin k10-tensor").exit_code == 0);
  RunResult dt = run("builtin dt --t -3/2");
  REQUIRE(dt.exit_code == 0);
  SuperAlgebra d = algebra_from_json_text(dt.out);
  Element u = Element::basis(d, 2), v = Element::basis(d, 3);
  CHECK((u * v).v[1] == rat(-3, 2));
  CHECK(run("builtin grassmann --n 3").exit_code == 0);
}

TEST_CASE("cli: usage errors exit with code two") {
  CHECK(run("builtin dt --t 0").exit_code == 2);   // degenerate parameter
  CHECK(run("builtin dt").exit_code == 2);         // missing parameter
  CHECK(run("builtin nosuch").exit_code == 2);     // unknown algebra
  CHECK(run("nosuchcommand").exit_code == 2);      // unknown subcommand
  CHECK(run("check /nonexistent/file.json").exit_code == 2);
  CHECK(run("builtin grassmann").exit_code == 2);  // missing --n
  CHECK(run("--help").exit_code == 0);
  CHECK(run("sub maximal v").exit_code == 2);      // unknown kind
  CHECK(run("sub closure " + fixture("k10.json") + " --gens nosuchlabel").exit_code == 2);
}

TEST_CASE("cli: gram-driven builtins") {
  std::string gram = tmp_file("gram_bilinear.json", "{\"gram\": [[1, 0], [0, 1]]}\n");
  RunResult r = run("builtin bilinear --gram " + gram);
  REQUIRE(r.exit_code == 0);
  CHECK(algebra_from_json_text(r.out).dim() == 3);

  std::string sgram = tmp_file("gram_super.json",
                               "{\"gram_even\": [[1, 0], [0, 1]],"
                               " \"gram_odd\": [[0, 1], [-1, 0]]}\n");
  RunResult s = run("builtin superform --gram " + sgram);
  REQUIRE(s.exit_code == 0);
  SuperAlgebra sa = algebra_from_json_text(s.out);
  CHECK(sa.dim_even == 3);
  CHECK(sa.dim_odd == 2);
}

TEST_CASE("cli: check passes the genuine table and rejects the broken one") {
  RunResult good = run("check " + fixture("k10.json"));
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("result: PASS") != std::string::npos);

  RunResult bad = run("check " + fixture("k10-broken.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("super-jordan: FAIL (492 defects)") != std::string::npos);
  CHECK(bad.out.find("0=e,2=b,6=p1,9=q2") != std::string::npos);

  RunResult env = run("check " + fixture("k3.json") + " --envelope 2 --trials 20 --seed 3");
  CHECK(env.exit_code == 0);
  CHECK(env.out.find("envelope-jordan: PASS") != std::string::npos);

  RunResult benv =
      run("check " + fixture("k10-broken.json") + " --envelope 3 --trials 20 --seed 3");
  CHECK(benv.exit_code == 1);
}

TEST_CASE("cli: json format is parseable and carries the same verdict") {
  RunResult r = run("--format json check " + fixture("k10-broken.json"));
  CHECK(r.exit_code == 1);
  json j = json::parse(r.out);
  CHECK(j["pass"] == false);
  bool found = false;
  for (const auto& rep : j["reports"])
    if (rep["identity"] == "super-jordan") {
      found = true;
      CHECK(rep["total_defects"] == 492);
      CHECK(rep["witnesses"][0]["at"] == json::array({0, 2, 6, 9}));
    }
  CHECK(found);
}

TEST_CASE("cli: iso verify accepts the shipped map and rejects a corrupted one") {
  std::string args = " --from " + fixture("k10.json") + " --to " + fixture("k10-tensor.json");
  RunResult good = run("iso verify " + fixture("k10-to-tensor-map.json") + args);
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("result: ISOMORPHISM") != std::string::npos);

  // scale one image: still linear, no longer multiplicative
  json m = json::parse(read_file(fixture("k10-to-tensor-map.json")));
  m["images"][0][0] = "3";
  std::string badmap = tmp_file("bad_map.json", m.dump() + "\n");
  RunResult bad = run("iso verify " + badmap + args);
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("NOT AN ISOMORPHISM") != std::string::npos);
}

TEST_CASE("cli: wreath lift emits the library's automorphism matrix") {
  RunResult lift = run("aut phi --f \"0,1,-1,0\" --g \"1,0,0,1\"");
  REQUIRE(lift.exit_code == 0);
  std::string mfile = tmp_file("phi_out.json", lift.out);
  Matrix got = load_matrix(mfile);
  Matrix f(2, 2);
  f.at(0, 1) = rat(1);
  f.at(1, 0) = rat(-1);
  SuperAlgebra tensor = make_k10_tensor();
  Morphism expect = phi(tensor, WreathElement::make(f, Matrix::identity(2), false));
  CHECK(got == expect.m);
  // malformed 2x2 flags are usage errors
  CHECK(run("aut phi --f \"1,0,0\" --g \"1,0,0,1\"").exit_code == 2);
  CHECK(run("aut phi --f \"1,0,0,2\" --g \"1,0,0,1\"").exit_code == 2);  // det 2
}

TEST_CASE("cli: aut factor emits a wreath element or the non-square report") {
  // psi_tilde of a known element, written to a matrix file
  WreathElement w = WreathElement::make(
      [] {
        Matrix f(2, 2);
        f.at(0, 0) = rat(1);
        f.at(0, 1) = rat(2);
        f.at(1, 1) = rat(1);
        return f;
      }(),
      Matrix::identity(2), true);
  std::string mfile = tmp_file("orth.json", matrix_to_json_text(psi_tilde(w).m));
  RunResult ok = run("aut factor --matrix " + mfile);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("swapped=true") != std::string::npos);

  std::string dfile = tmp_file(
      "diag2.json", "{\"matrix\": [[1,0,0,0],[0,2,0,0],[0,0,\"1/2\",0],[0,0,0,1]]}\n");
  RunResult ns = run("aut factor --matrix " + dfile);
  CHECK(ns.exit_code == 1);
  CHECK(ns.out.find("not a rational square") != std::string::npos);
  RunResult nsj = run("--format json aut factor --matrix " + dfile);
  CHECK(nsj.exit_code == 1);
  json j = json::parse(nsj.out);
  CHECK(j["result"] == "non-square-scalar");
  CHECK(j["gamma"] == "2");

  std::string nfile = tmp_file(
      "notorth.json", "{\"matrix\": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}\n");
  CHECK(run("aut factor --matrix " + nfile).exit_code == 1);
}

TEST_CASE("cli: subalgebra commands") {
  RunResult cl = run("sub closure " + fixture("k10.json") + " --gens e,f,p1,q1");
  CHECK(cl.exit_code == 0);
  CHECK(cl.out.find("dimensions (3,2)") != std::string::npos);

  RunResult mx = run("sub maximal ii --probe --trials 10 --seed 3");
  CHECK(mx.exit_code == 0);
  CHECK(mx.out.find("probably maximal") != std::string::npos);

  RunResult st = run("sub structure ii");
  CHECK(st.exit_code == 0);
  CHECK(st.out.find("DEVIATION") != std::string::npos);
  CHECK(run("sub structure iii").exit_code == 0);

  RunResult cj = run("sub conjugate iii");
  CHECK(cj.exit_code == 0);
  CHECK(run("sub conjugate i").exit_code == 2);
}

TEST_CASE("cli: shipped fixtures equal freshly generated output") {
  CHECK(read_file(fixture("k10.json")) == algebra_to_json_text(make_k10_table()));
  CHECK(read_file(fixture("k10-tensor.json")) == algebra_to_json_text(make_k10_tensor()));
  CHECK(read_file(fixture("k3.json")) == algebra_to_json_text(make_k3()));
  CHECK(read_file(fixture("dt-minus3.json")) == algebra_to_json_text(make_dt(rat(-3))));

  // the subalgebra fixture rows agree with the computed spans
  SuperAlgebra k10 = make_k10_table();
  json sub3 = json::parse(read_file(fixture("sub-iii.json")));
  GradedSubspace s3 = maximal_subalgebra(k10, MaximalKind::iii);
  REQUIRE(sub3["dim_even"] == s3.even.dim());
  REQUIRE(sub3["dim_odd"] == s3.odd.dim());
  for (int r = 0; r < s3.even.dim(); ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(sub3["even"][size_t(r)][size_t(c)] == scalar_str(s3.even.basis.at(r, c)));

  // the shipped map file is the verified isomorphism, column by column
  SuperAlgebra tensor = make_k10_tensor();
  Morphism iso = k10_tensor_iso(k10, tensor);
  auto images = load_map_images(fixture("k10-to-tensor-map.json"));
  REQUIRE(images.size() == 10);
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) CHECK(images[size_t(j)][size_t(i)] == iso.m.at(i, j));
}

TEST_CASE("cli: the full battery is deterministic across runs and thread counts") {
  std::string args = "verify-paper --seed 42 --fixtures " + fixture("");
  RunResult a = run(args, "OMP_NUM_THREADS=4");
  RunResult b = run(args, "OMP_NUM_THREADS=1");
  RunResult c = run(args, "OMP_NUM_THREADS=4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("result: OK") != std::string::npos);

  // a different seed still passes but prints different trial data; the
  // missing-fixture path is a usage error
  CHECK(run("verify-paper --seed 7 --fixtures " + fixture("")).exit_code == 0);
  CHECK(run("verify-paper --fixtures /nonexistent-dir").exit_code == 2);

  RunResult js = run("--format json " + args);
  CHECK(js.exit_code == 0);
  json j = json::parse(js.out);
  CHECK(j["summary"]["fail"] == 0);
}
