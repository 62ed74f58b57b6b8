#pragma once

#include <memory>
#include <optional>

#include "jord/morphisms.hpp"
#include "jord/superalgebra.hpp"

namespace jord {

// least graded subspace containing the generators: spanned by all their
// parity components
GradedSubspace graded_span(const SuperAlgebra& a, const std::vector<Element>& gens);
GradedSubspace full_graded(const SuperAlgebra& a);
// graded span of the named basis vectors
GradedSubspace label_span(const SuperAlgebra& a, const std::vector<std::string>& labels);

// echelon basis rows of s lifted back to ambient elements, even block first
std::vector<Element> graded_basis_elements(const SuperAlgebra& a, const GradedSubspace& s);

// image of a graded subspace under a graded map
GradedSubspace image_subspace(const Morphism& m, const GradedSubspace& s);

// least graded subalgebra containing the generators (fixed-point iteration:
// adjoin pairwise products, re-echelonize, repeat until the dimension stops)
GradedSubspace span_closure(const SuperAlgebra& a, const std::vector<Element>& gens);

bool is_subalgebra(const SuperAlgebra& a, const GradedSubspace& s);
// s absorbed by `within`: products of s against `within` stay in s.
// throws if s is not contained in `within`.
bool is_ideal(const SuperAlgebra& a, const GradedSubspace& s, const GradedSubspace& within);

// derived chain s, span(s*s), ... reaches zero within dim(s)+1 steps
bool is_solvable(const SuperAlgebra& a, const GradedSubspace& s);

// a product-closed graded subspace as a standalone structure-constant
// algebra. basis labels are the printed echelon rows ("a+b", "p2+q2");
// `embedding` maps it back into the parent (which must outlive the result).
struct SubAlgebra {
  std::shared_ptr<SuperAlgebra> alg;
  Morphism embedding;
};
SubAlgebra materialize(const SuperAlgebra& a, const GradedSubspace& s, const std::string& name);

struct QuotientPresentation {
  SubAlgebra sub;
  std::shared_ptr<SuperAlgebra> quotient;
  Morphism projection;  // sub.alg -> quotient; verified surjective with kernel r
};
// b must be product-closed, r a graded ideal of b
QuotientPresentation quotient(const SuperAlgebra& a, const GradedSubspace& b,
                              const GradedSubspace& r);

enum class MaximalKind { i, ii, iii, iv };
const char* kind_name(MaximalKind k);
std::optional<MaximalKind> kind_from_name(const std::string& s);

// the four distinguished proper subalgebras of the ten-dimensional table
// model; construction verifies closure, properness and that e+f lies inside
GradedSubspace maximal_subalgebra(const SuperAlgebra& k10, MaximalKind kind);

struct ProbeResult {
  bool probably_maximal = false;
  // first adjoined vector whose closure stayed proper (ambient coords)
  std::optional<Vec> witness;
  std::optional<GradedSubspace> witness_closure;
  // greedy saturation of b along the canonical complement while staying
  // proper; equals b itself when the verdict is probably-maximal
  GradedSubspace proper_envelope;
  int trials_run = 0;
};
// adjoins every canonical-complement basis vector and `trials` seeded random
// elements outside b, checking each closure regenerates the whole algebra.
// refutation-complete, not a maximality proof.
ProbeResult maximality_probe(const SuperAlgebra& a, const GradedSubspace& b, int trials,
                             std::uint64_t seed);

// the unordered pair {t, 1/t} read off a four-dimensional algebra with two
// orthogonal rational idempotents acting as one half on a two-dimensional
// odd part; degenerate (with a reason) when that shape is not met exactly
struct DtInvariant {
  bool degenerate = false;
  std::string reason;
  std::pair<Scalar, Scalar> t_pair;  // ascending

  std::string str() const;
};
DtInvariant dt_parameter(const SuperAlgebra& a);
DtInvariant dt_parameter(const SuperAlgebra& parent, const GradedSubspace& b);

// isometry of the form given by `gram` mapping v1 to v2 (equal nonzero
// norms required), a product of at most two reflections; throws Error
// "reflection-degenerate" when both candidate reflection vectors are
// isotropic
Matrix witt_map(const Matrix& gram, const Vec& v1, const Vec& v2);

// kernel of (m - identity) as a graded subspace; m must be a graded
// automorphism, and the result is verified product-closed
GradedSubspace fixed_subalgebra(const Morphism& m);

// the fixed subalgebra of the factor exchange pulled back through the
// table-to-tensor isomorphism
GradedSubspace exchange_fixed_span(const SuperAlgebra& k10, const SuperAlgebra& tensor);

// an explicit verified map carrying maximal_subalgebra(kind) onto its
// standard description: for ii an automorphism of the table model onto the
// exchange-fixed subalgebra; for iii/iv the table-to-tensor isomorphism
// onto the monomial span. throws Error if the image does not match.
Morphism conjugation_witness(const SuperAlgebra& k10, const SuperAlgebra& tensor,
                             MaximalKind kind);

enum class ClaimStatus { PASS, FAIL, DEVIATION };
struct ClaimRow {
  std::string claim;
  ClaimStatus status = ClaimStatus::FAIL;
  std::string detail;
};
struct StructureReport {
  MaximalKind kind;
  std::vector<ClaimRow> rows;
  bool ok() const;  // no FAIL rows
};
// verifies the decomposition data of each distinguished subalgebra:
// ideals, radicals, quotients, invariants, and explicit isomorphisms onto
// catalog algebras. one row per claim; deviations are reported, not hidden.
StructureReport structure_report(const SuperAlgebra& k10, MaximalKind kind);

}  // namespace jord
