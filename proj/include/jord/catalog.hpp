#pragma once
#include "jord/superalgebra.hpp"

namespace jord {

// Kaplansky superalgebra: basis e | x,y with e acting as 1/2 and x.y = e
SuperAlgebra make_k3();

// one-parameter family on e,f | u,v: orthogonal idempotents acting as 1/2
// on the odd part, u.v = e + t f; t must be nonzero
SuperAlgebra make_dt(const Scalar& t);

// the ten-dimensional exceptional algebra on e,a,b,c1,c2,f | p1,p2,q1,q2
SuperAlgebra make_k10_table();

// F.1 + (K3 (x) K3) with (a(x)b)(c(x)d) = (-1)^{|b||c|} (ac (x) bd - 3/4 (a|c)(b|d) 1)
SuperAlgebra make_k10_tensor();

// unital Jordan algebra of a symmetric bilinear form: basis 1, v1..vn,
// (a1 + v)(b1 + w) = (ab + (v,w))1 + aw + bv; gram must be symmetric invertible.
// gram may be 0x0 (the ground field as a one-dimensional algebra)
SuperAlgebra make_bilinear_jordan(const Matrix& gram);

// superform algebra: e unit, even part Fe + V0, odd part V1, v.w = (v,w)e.
// gram_even symmetric invertible, gram_odd alternating invertible
SuperAlgebra make_superform_algebra(const Matrix& gram_even, const Matrix& gram_odd);

// symmetrization a.b = (ab + (-1)^{|a||b|} ba)/2 of a graded associative table
SuperAlgebra make_plus(const SuperAlgebra& assoc);

// full matrix algebra on n x n matrix units (purely even, associative)
SuperAlgebra make_full_matrix_algebra(int n);

// exterior algebra on n anticommuting generators, 1 <= n <= 8,
// graded by monomial degree parity
SuperAlgebra make_grassmann(int n);

// the even part of the table model splits as span{f} (+) span{e,a,b,c1,c2}:
// returns the two ideals of the even part (as graded subspaces with zero odd
// component), verified: both absorb multiplication by the even part, cross
// products vanish, and e is the unit of the five-dimensional summand
std::pair<GradedSubspace, GradedSubspace> even_part_ideals(const SuperAlgebra& k10);

}  // namespace jord
