#pragma once
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "jord/linear.hpp"
#include "jord/scalar.hpp"

namespace jord {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// raised when a construction needs sqrt(gamma) and gamma is not a rational square
struct NonSquareScalar : Error {
  Scalar gamma;
  explicit NonSquareScalar(Scalar g)
      : Error("non-square scalar gamma=" + scalar_str(g)), gamma(std::move(g)) {}
};

struct NotOrthogonal : Error {
  explicit NotOrthogonal(const std::string& msg) : Error(msg) {}
};

struct TableEntry {
  int i, j, k;
  Scalar c;
};

// finite-dimensional Z2-graded algebra given by structure constants.
// basis is ordered even block first, then odd block. every ordered pair
// (i,j) must be covered by the table (possibly with an explicit zero row)
// unless implicit_zero_rows was set at load time. grading and
// supercommutativity are properties of the data, checked by the ops, not
// assumed at construction.
struct SuperAlgebra {
  std::string name;
  int dim_even = 0, dim_odd = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::pair<int, Scalar>>> prod;  // (i*dim+j) -> sorted sparse row

  int dim() const { return dim_even + dim_odd; }
  int parity(int k) const { return k >= dim_even ? 1 : 0; }
  int index_of(const std::string& label) const;
  const std::vector<std::pair<int, Scalar>>& row(int i, int j) const {
    return prod[size_t(i) * dim() + j];
  }

  static SuperAlgebra from_entries(std::string name, int dim_even, int dim_odd,
                                   std::vector<std::string> basis,
                                   const std::vector<TableEntry>& entries,
                                   bool implicit_zero_rows = false);
  // nonzero entries sorted by (i,j,k)
  std::vector<TableEntry> entries() const;
};

struct Element {
  const SuperAlgebra* alg = nullptr;
  Vec v;

  static Element zero(const SuperAlgebra& a) { return {&a, Vec(a.dim())}; }
  static Element basis(const SuperAlgebra& a, int k);
  static Element from(const SuperAlgebra& a, Vec coords);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // algebra product
  Element scaled(const Scalar& c) const;
  bool is_zero() const;
  bool operator==(const Element& o) const { return alg == o.alg && v == o.v; }
  // (even component, odd component)
  std::pair<Element, Element> parity_parts() const;
  // "a+2e-6f" style, fractional coefficients parenthesized
  std::string str() const;
};

Element multiply(const Element& x, const Element& y);
Element associator(const Element& x, const Element& y, const Element& z);

// block-diagonal sum; labels prefixed "l." and "r."
SuperAlgebra direct_sum(const SuperAlgebra& a, const SuperAlgebra& b);

struct DefectWitness {
  std::vector<int> at;  // index tuple (basis indices, or trial number)
  Vec defect;           // nonzero defect in algebra coordinates
  std::string kind;
};

struct IdentityReport {
  std::string identity;
  bool pass = true;
  long total_defects = 0;
  std::vector<DefectWitness> witnesses;  // sorted by `at`, possibly truncated
  std::string note;
};

// c(i,j,k) vanishes whenever parity(k) != parity(i)+parity(j)
IdentityReport check_grading(const SuperAlgebra& a);

std::string format_element(const SuperAlgebra& a, const Vec& v);

}  // namespace jord
