#include "jord/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jord {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

static json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed json");
  return j;
}

static Scalar scalar_field(const json& j) {
  if (j.is_number_integer()) return Scalar(long(j.get<long long>()));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw std::invalid_argument("scalar must be an integer or a \"p/q\" string");
}

SuperAlgebra algebra_from_json_text(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("algebra file: not an object");
  for (const char* key : {"name", "dim_even", "dim_odd", "basis", "table"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("algebra file: missing field ") + key);
  std::vector<std::string> basis;
  for (const auto& b : j.at("basis")) basis.push_back(b.get<std::string>());
  std::vector<TableEntry> entries;
  for (const auto& e : j.at("table"))
    entries.push_back({e.at("i").get<int>(), e.at("j").get<int>(), e.at("k").get<int>(),
                       scalar_field(e.at("c"))});
  bool implicit = j.value("implicit_zero_rows", false);
  return SuperAlgebra::from_entries(j.at("name").get<std::string>(), j.at("dim_even").get<int>(),
                                    j.at("dim_odd").get<int>(), std::move(basis), entries, implicit);
}

SuperAlgebra load_algebra(const std::string& path) {
  return algebra_from_json_text(read_file(path));
}

std::string algebra_to_json_text(const SuperAlgebra& a) {
  json j;
  j["name"] = a.name;
  j["dim_even"] = a.dim_even;
  j["dim_odd"] = a.dim_odd;
  j["basis"] = a.basis;
  j["implicit_zero_rows"] = true;
  json table = json::array();
  for (const auto& e : a.entries()) {
    json row;
    row["i"] = e.i;
    row["j"] = e.j;
    row["k"] = e.k;
    row["c"] = scalar_str(e.c);
    table.push_back(row);
  }
  j["table"] = table;
  return j.dump(2) + "\n";
}

std::vector<Vec> load_map_images(const std::string& path) {
  json j = parse_json(read_file(path));
  if (!j.is_object() || !j.contains("images"))
    throw std::invalid_argument("map file: missing field images");
  std::vector<Vec> images;
  for (const auto& row : j.at("images")) {
    Vec v;
    for (const auto& c : row) v.push_back(scalar_field(c));
    images.push_back(std::move(v));
  }
  return images;
}

std::string map_images_to_json_text(const std::vector<Vec>& images) {
  json rows = json::array();
  for (const auto& v : images) {
    json row = json::array();
    for (const auto& c : v) row.push_back(scalar_str(c));
    rows.push_back(row);
  }
  json j;
  j["images"] = rows;
  return j.dump(2) + "\n";
}

static Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix: empty");
  Matrix m(int(rows.size()), int(rows.at(0).size()));
  for (int i = 0; i < m.rows; ++i) {
    const auto& row = rows.at(i);
    if (int(row.size()) != m.cols) throw std::invalid_argument("matrix: ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = scalar_field(row.at(j));
  }
  return m;
}

Matrix load_matrix(const std::string& path) {
  json j = parse_json(read_file(path));
  if (!j.is_object() || !j.contains("matrix"))
    throw std::invalid_argument("matrix file: missing field matrix");
  return matrix_from_json(j.at("matrix"));
}

std::string matrix_to_json_text(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(scalar_str(m.at(i, j)));
    rows.push_back(row);
  }
  json j;
  j["matrix"] = rows;
  return j.dump(2) + "\n";
}

Matrix load_gram(const std::string& path, const std::string& key) {
  json j = parse_json(read_file(path));
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument("gram file: missing field " + key);
  return matrix_from_json(j.at(key));
}

}  // namespace jord
