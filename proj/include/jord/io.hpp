#pragma once
#include <string>

#include "jord/linear.hpp"
#include "jord/superalgebra.hpp"

namespace jord {

// algebra files: { name, dim_even, dim_odd, basis, table: [{i,j,k,c}], implicit_zero_rows? }
// all scalars are "p/q" strings. throws std::invalid_argument on malformed input.
SuperAlgebra load_algebra(const std::string& path);
SuperAlgebra algebra_from_json_text(const std::string& text);
std::string algebra_to_json_text(const SuperAlgebra& a);

// map files: { images: [ per-source-basis coordinate row in target basis ] }
std::vector<Vec> load_map_images(const std::string& path);
std::string map_images_to_json_text(const std::vector<Vec>& images);

// matrix files: { matrix: [[...]] }
Matrix load_matrix(const std::string& path);
std::string matrix_to_json_text(const Matrix& m);

// gram files: bilinear { gram: [[...]] }, superform { gram_even, gram_odd }
Matrix load_gram(const std::string& path, const std::string& key);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace jord
