#pragma once

#include "jord/superalgebra.hpp"

namespace jord {

// Execution strategy for the basis sweeps. Both produce identical reports
// (witnesses sorted by index tuple); parallel uses OpenMP over the outer loop.
enum class Exec { serial, parallel };

// x_i x_j = (-1)^{|i||j|} x_j x_i for all basis pairs.
IdentityReport check_supercommutativity(const SuperAlgebra& a, Exec ex = Exec::parallel);

// Cyclic identity over all basis quadruples (x,y,z,t):
//   (-1)^{(|x|+|z|)|t|} ((xy)z)t-cyclic sum with the graded associator; see the
// implementation for the exact sign convention. Requires a graded,
// supercommutative input (throws std::invalid_argument otherwise: without
// those preconditions the sweep proves nothing).
IdentityReport check_super_jordan(const SuperAlgebra& a, Exec ex = Exec::parallel);

// Plain Jordan axioms for a purely even algebra: commutativity plus the full
// linearization of (x^2 y) x = x^2 (y x) over basis quadruples. Equivalent to
// the quadratic axiom over the rationals. Throws if the algebra has odd part.
IdentityReport check_jordan(const SuperAlgebra& a, Exec ex = Exec::parallel);

// Tensor with the exterior algebra on n generators: even monomials pair with
// the even part, odd monomials with the odd part. The result is a purely even
// algebra of dimension 2^{n-1} (dim_even + dim_odd). Requires consistent
// grading on the input (throws otherwise). Labels are "monomial@label".
SuperAlgebra grassmann_envelope(const SuperAlgebra& a, int n);

// Checks the two defining Jordan identities on the envelope: commutativity
// exhaustively over basis pairs, and (x^2 y) x = x^2 (y x) on `trials` random
// elements with small integer coordinates drawn from the given seed.
IdentityReport check_envelope_jordan(const SuperAlgebra& a, int n, int trials,
                                     std::uint64_t seed, Exec ex = Exec::parallel);

}  // namespace jord
