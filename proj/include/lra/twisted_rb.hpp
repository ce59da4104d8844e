#pragma once

#include <optional>

#include "lra/cochain.hpp"

namespace lra {

// Bundle of everything a twisted operator check needs: an algebra acting on a
// module, a degree-2 cocycle twist h, and a candidate operator k from the
// module to the algebra, stored target-major (dim_g x dim_v).
//
// Construction via make_twisted_rb validates shapes, the module axioms and
// the cocycle condition on the twist; whether k itself passes is a separate
// question answered by check_twisted_rb, so failing candidates are
// first-class data.
struct TwistedRBData {
  Representation rep;
  Bicochain twist;
  Matrix k;
  bool verified = false;  // set when check_twisted_rb has passed

  std::size_t dim_g() const { return rep.algebra.dim; }
  std::size_t dim_v() const { return rep.dim_v; }
  const LeibnizAlgebra& algebra() const { return rep.algebra; }

  Vector k_of(const Vector& u) const { return k.apply(u); }
};

TwistedRBData make_twisted_rb(Representation r, Bicochain twist, Matrix k);

// [Ku, Kv] = K(rho_l(Ku) v + rho_r(Kv) u + h(Ku, Kv)) on every module basis
// pair.
Report check_twisted_rb(const TwistedRBData& d);

// Same yes/no through a deliberately different code path: build the twisted
// semidirect sum, span the graph generators (Ku_a, u_a), and test closure of
// the span under the product by exact membership. Agreement of the two
// checkers on every instance is part of the acceptance gate.
Report graph_is_subalgebra(const TwistedRBData& d);

// Invertible degree-1 cochain h on the algebra (dim_v == dim_g): the inverse
// of h is an operator twisted by -dh. Returns a verified bundle.
TwistedRBData from_invertible_cochain(const Representation& r,
                                      const Matrix& h);

// Nijenhuis map N on g: the deformed algebra acts on the original space by
// x . y = [Nx, y] and y . x = [y, Nx], twisted by h(x,y) = -N[x,y]; the
// identity map is then a twisted operator. Returns a verified bundle.
TwistedRBData from_nijenhuis(const LeibnizAlgebra& g, const Matrix& n);

// Bracket the operator induces on the module:
//   [u,v]_K = rho_l(Ku) v + rho_r(Kv) u + h(Ku, Kv).
// Requires a bundle that passes check_twisted_rb; the result is verified.
LeibnizAlgebra induced_bracket(const TwistedRBData& d);

// Module structure the operator induces back on the algebra's space, over
// the induced bracket:
//   rho_l(u) x = [Ku, x] - K(rho_r(x) u) - K h(Ku, x)
//   rho_r(u) x = [x, Ku] - K(rho_l(x) u) - K h(x, Ku)
// Requires a verified bundle; the result passes check_representation.
Representation induced_representation(const TwistedRBData& d);

// Morphism of bundles (phi: algebra map, psi: module map). Report labels:
//   bracket-morphism        phi preserves brackets
//   operator-intertwine     phi K = K' psi
//   left-equivariance       psi rho_l(x) = rho_l'(phi x) psi
//   right-equivariance      psi rho_r(x) = rho_r'(phi x) psi
//   twist-compat            psi h = h'(phi x, phi y)
Report check_morphism(const TwistedRBData& src, const TwistedRBData& dst,
                      const Matrix& phi, const Matrix& psi);

// (x, u) |-> (x, u - b(x)) carries the sum twisted by h to the sum twisted
// by h + db, for any degree-1 cochain b. Returns both algebras and the map;
// the intertwining is re-verified exactly inside.
struct SemidirectShift {
  LeibnizAlgebra source;
  LeibnizAlgebra target;
  Matrix iso;       // (dim_g + dim_v) square
  Bicochain twist;  // h + db
};
SemidirectShift psi_h_isomorphism(const Representation& r, const Bicochain& h,
                                  const Matrix& b);

// Twist shift along a degree-1 cochain b: when Id - bK is invertible,
// K(Id - bK)^{-1} is an operator for the twist h + db. Absent when the
// inverse does not exist.
std::optional<TwistedRBData> shift_by_cochain(const TwistedRBData& d,
                                              const Matrix& b);

// Gauge action of a degree-1 cocycle b (PreconditionError when b is not a
// cocycle): when Id + bK is invertible, K(Id + bK)^{-1} is another operator
// for the same twist. Absent when b is a cocycle but Id + bK is singular.
std::optional<TwistedRBData> gauge_transform(const TwistedRBData& d,
                                             const Matrix& b);

// (Id + bK) intertwines the brackets induced by K and by its gauge
// transform, checked on every basis pair.
Report gauge_bracket_isomorphism(const TwistedRBData& d, const Matrix& b);

// Differential of the complex attached to the operator: f has arguments in
// the module and values in the algebra. Implemented from the explicit
// formula; must agree entry-for-entry with the generic coboundary over
// (induced_bracket, induced_representation), which the suite enforces.
Cochain dk_coboundary(const TwistedRBData& d, const Cochain& f);

// Kernel/image dimensions of the operator complex, delegated to the generic
// machinery over the induced structures.
CohomologyDims k_cohomology_dims(const TwistedRBData& d, std::size_t degree,
                                 std::size_t degree_cap = default_degree_cap);

void ensure_twisted_rb(const TwistedRBData& d);

}  // namespace lra
