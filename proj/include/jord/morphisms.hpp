#pragma once

#include <optional>

#include "jord/identities.hpp"
#include "jord/rng.hpp"
#include "jord/superalgebra.hpp"

namespace jord {

// graded linear map between structure-constant algebras. matrix is
// (target dim) x (source dim); column j holds the image of source basis j
// in target coordinates.
struct Morphism {
  const SuperAlgebra* from = nullptr;
  const SuperAlgebra* to = nullptr;
  Matrix m;

  Element apply(const Element& x) const;
  // image of source basis vector j
  Element image_of(int j) const;
  static Morphism identity(const SuperAlgebra& a);
  // images[j] = coordinates of the image of source basis j
  static Morphism from_images(const SuperAlgebra& from, const SuperAlgebra& to,
                              const std::vector<Vec>& images);
};

// f after g (g first); requires g.to == f.from
Morphism compose(const Morphism& f, const Morphism& g);
std::optional<Morphism> inverse(const Morphism& m);

// multiplicativity on all source basis pairs plus parity preservation of
// every column. suffices by bilinearity.
IdentityReport is_homomorphism(const Morphism& m, Exec ex = Exec::parallel);
// defined below identities to avoid a cycle
bool is_isomorphism(const Morphism& m);

// z -> (-1)^{|z|} z; an automorphism of any graded supercommutative algebra
Morphism grading_automorphism(const SuperAlgebra& a);

// ---- the ten-dimensional models ----

// the verified isomorphism from the table model onto the tensor model
// (columns are the ten explicit images; e.g. e -> (3/2)1 - 2 e@e, c2 -> -2 y@x)
Morphism k10_tensor_iso(const SuperAlgebra& k10, const SuperAlgebra& tensor);

// pair of unimodular 2x2 matrices with an optional factor exchange; the
// normal form (f, g, swapped) acts as "apply the exchange first, then f on
// the left factor and g on the right factor".
struct WreathElement {
  Matrix f, g;  // 2x2, det 1
  bool swapped = false;

  static WreathElement make(Matrix f, Matrix g, bool swapped);
  static WreathElement identity();
  // resolves the +-(id,id) ambiguity of the V-action: negates both matrices
  // if the first nonzero entry of f is negative
  WreathElement canonical() const;
  bool operator==(const WreathElement& o) const {
    return f == o.f && g == o.g && swapped == o.swapped;
  }
};

// group law: (f1,g1,s1)*(f2,g2,s2) applies the right element first;
// the exchange moves past a pair by swapping it.
WreathElement wreath_compose(const WreathElement& a, const WreathElement& b);
WreathElement wreath_invert(const WreathElement& a);

// 4x4 matrix on V = span{x@x, x@y, y@x, y@y} preserving the pairing
// b(s@t, u@v) = (s|u)(t|v); construction validates the gram identity.
struct OrthogonalMap {
  Matrix m;  // 4x4
  static OrthogonalMap make(Matrix m);  // throws NotOrthogonal
};

// gram matrix of b on V in the order x@x, x@y, y@x, y@y
Matrix tensor_v_gram();

// the automorphism of the tensor model fixing the formal unit and sending
// a@b to (-1)^{|a||b|} b@a
Morphism tensor_exchange(const SuperAlgebra& tensor);

// automorphism of k3 fixing e and acting by the unimodular f on span{x,y}
Morphism lift_sp_to_k3(const SuperAlgebra& k3, const Matrix& f);

// automorphism of the tensor model induced by a wreath element: the
// exchange first if swapped, then the lifted pair acting factorwise
Morphism phi(const SuperAlgebra& tensor, const WreathElement& w);

// restriction of a tensor-model automorphism to V; throws if V is not
// invariant or the restriction does not preserve b
OrthogonalMap psi(const Morphism& m);

// direct V-action of a wreath element: kron(f,g), preceded by
// s@t -> -t@s when swapped
OrthogonalMap psi_tilde(const WreathElement& w);

// rank-1 factorization of an isotropic vector of V: returns (s, t) with
// s@t = v and the first nonzero coordinate of s equal to 1.
// throws Error when v is zero or not isotropic.
std::pair<Vec, Vec> factor_isotropic(const Vec& v);

// constructive preimage under psi_tilde, canonicalized; throws
// NonSquareScalar when the residual diagonal scalar is not a rational square
WreathElement factor_orthogonal(const OrthogonalMap& m);

// phi(factor_orthogonal(m)): tensor-model automorphism restricting to m on V
Morphism lift_orthogonal_to_aut(const SuperAlgebra& tensor, const OrthogonalMap& m);

// seeded wreath element: integer entries of height <= 5, determinant one in
// both factors, random exchange bit (rejection sampling on the rng stream)
WreathElement random_wreath(Lcg64& rng);

}  // namespace jord
