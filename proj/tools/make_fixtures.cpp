// regenerates the shipped fixture files. run from the repository root:
//   ./build/make_fixtures [fixtures]
// every file is a deterministic function of the library, so the output is
// byte-stable; a unit test diffs the shipped files against fresh output.
#include <filesystem>
#include <iostream>
#include <string>

#include "json.hpp"

#include "jord/catalog.hpp"
#include "jord/io.hpp"
#include "jord/morphisms.hpp"
#include "jord/subalgebras.hpp"

using namespace jord;
using nlohmann::json;

namespace {

// the ten-dimensional table with the f-coefficient of p1*p2 negated (and the
// supercommuted row kept consistent): still graded and supercommutative, but
// the graded Jordan identity fails
SuperAlgebra make_k10_broken() {
  SuperAlgebra k10 = make_k10_table();
  const int p1 = k10.index_of("p1"), p2 = k10.index_of("p2"), f = k10.index_of("f");
  std::vector<TableEntry> entries = k10.entries();
  bool hit_fwd = false, hit_rev = false;
  for (auto& e : entries) {
    if (e.i == p1 && e.j == p2 && e.k == f) {
      e.c = -e.c;
      hit_fwd = true;
    }
    if (e.i == p2 && e.j == p1 && e.k == f) {
      e.c = -e.c;
      hit_rev = true;
    }
  }
  if (!hit_fwd || !hit_rev) throw Error("make_k10_broken: expected table entries are missing");
  // entries() drops the explicit zero rows, so rebuild with implicit zeros
  return SuperAlgebra::from_entries("k10-broken", k10.dim_even, k10.dim_odd, k10.basis, entries,
                                    /*implicit_zero_rows=*/true);
}

json subspace_json(const SuperAlgebra& a, const GradedSubspace& s, const std::string& kind) {
  json j;
  j["algebra"] = a.name;
  j["kind"] = kind;
  j["dim_even"] = s.even.dim();
  j["dim_odd"] = s.odd.dim();
  auto block = [&](const Subspace& b, int offset) {
    json rows = json::array();
    json printed = json::array();
    for (int r = 0; r < b.dim(); ++r) {
      json row = json::array();
      Vec amb(size_t(a.dim()));
      for (int c = 0; c < b.ambient; ++c) {
        row.push_back(scalar_str(b.basis.at(r, c)));
        amb[size_t(offset + c)] = b.basis.at(r, c);
      }
      rows.push_back(row);
      printed.push_back(format_element(a, amb));
    }
    return std::make_pair(rows, printed);
  };
  auto [er, ep] = block(s.even, 0);
  auto [orows, op] = block(s.odd, a.dim_even);
  j["even"] = er;
  j["even_printed"] = ep;
  j["odd"] = orows;
  j["odd_printed"] = op;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  try {
    std::filesystem::create_directories(dir);
    write_file(dir + "/k10.json", algebra_to_json_text(make_k10_table()));
    write_file(dir + "/k10-tensor.json", algebra_to_json_text(make_k10_tensor()));
    write_file(dir + "/k3.json", algebra_to_json_text(make_k3()));
    write_file(dir + "/dt-minus3.json", algebra_to_json_text(make_dt(rat(-3))));
    write_file(dir + "/k10-broken.json", algebra_to_json_text(make_k10_broken()));

    // the verified table-model -> tensor-model map, one image row per source
    // basis vector
    SuperAlgebra k10 = make_k10_table();
    SuperAlgebra tensor = make_k10_tensor();
    Morphism iso = k10_tensor_iso(k10, tensor);
    std::vector<Vec> images;
    for (int j = 0; j < iso.m.cols; ++j) {
      Vec img(size_t(iso.m.rows));
      for (int i = 0; i < iso.m.rows; ++i) img[size_t(i)] = iso.m.at(i, j);
      images.push_back(std::move(img));
    }
    write_file(dir + "/k10-to-tensor-map.json", map_images_to_json_text(images));

    const char* names[] = {"i", "ii", "iii", "iv"};
    const MaximalKind kinds[] = {MaximalKind::i, MaximalKind::ii, MaximalKind::iii,
                                 MaximalKind::iv};
    for (int k = 0; k < 4; ++k) {
      GradedSubspace s = maximal_subalgebra(k10, kinds[k]);
      write_file(dir + "/sub-" + names[k] + ".json",
                 subspace_json(k10, s, names[k]).dump(2) + "\n");
    }
    std::cout << "wrote fixtures to " << dir << "/\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
