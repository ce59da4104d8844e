#pragma once

#include "lra/twisted_rb.hpp"

namespace lra {

// K + t K1 over a verified base bundle.
struct LinearDeformation {
  TwistedRBData base;
  Matrix k1;
  bool verified = false;
};

// K + t K1 + ... + t^N KN; terms[i] is the coefficient of t^{i+1}.
struct TruncatedFormalDeformation {
  TwistedRBData base;
  std::vector<Matrix> terms;
  bool verified = false;

  std::size_t order() const { return terms.size(); }
  // coefficient of t^i, with term(0) = K
  const Matrix& term(std::size_t i) const;
};

LinearDeformation make_linear_deformation(TwistedRBData base, Matrix k1);
TruncatedFormalDeformation make_formal_deformation(TwistedRBData base,
                                                   std::vector<Matrix> terms);

// Data for an equivalence of deformations: the element x, plus optional
// higher-order correction maps (phi_higher[i] is the t^{i+2} coefficient of
// the algebra map, psi_higher[i] of the module map; the t^0 parts are
// identities and the t^1 parts are determined by x).
struct EquivalenceDatum {
  Vector x;
  std::vector<Matrix> phi_higher;
  std::vector<Matrix> psi_higher;
};

// K + t K1 stays a twisted operator for every t iff three tensor identities
// hold; checked on every module basis pair. Report labels: linear-term,
// quadratic-term, cubic-term. The linear-term identity is the statement that
// K1 is a 1-cocycle of the operator complex.
Report check_linear_deformation(const LinearDeformation& ld);

// Order-by-order identity for a truncated family, n = 0..N on module basis
// pairs:
//   sum_{i+j=n} [K_i u, K_j v]
//     = sum_{i+j=n} K_i(rho_l(K_j u) v + rho_r(K_j v) u)
//     + sum_{i+j+k=n} K_i h(K_j u, K_k v).
// Failure reports carry the order in the leading index slot.
Report check_formal_deformation(const TruncatedFormalDeformation& fd);

// Equivalence of two linear deformations of the same base along an element
// x, via the pair phi_t = Id + t[x,-], psi_t = Id + t(rho_l(x) + h(x, K-)).
// The morphism conditions split by t-power into the following checks,
// labelled in reports:
//   phi-morphism-quadratic       [[x,y],[x,z]] = 0
//   left-equivariance-linear     h(x, K rho_l(y) u) = rho_l(y) h(x, Ku)
//   left-equivariance-quadratic  rho_l([x,y]) (rho_l(x) u + h(x, Ku)) = 0
//   right-equivariance-linear    h(x, K rho_r(y) u) = rho_r(y) h(x, Ku)
//   right-equivariance-quadratic rho_r([x,y]) (rho_l(x) u + h(x, Ku)) = 0
//   twist-compat-linear          rho_l(x) h(y,z) + h(x, K h(y,z))
//                                  = h([x,y], z) + h(y, [x,z])
//   twist-compat-quadratic       h([x,y], [x,z]) = 0
//   intertwine-linear            K1 u + [x, Ku] = K(rho_l(x) u + h(x, Ku))
//                                  + K1' u
//   intertwine-quadratic         [x, K1 u] = K1'(rho_l(x) u + h(x, Ku))
// On success the difference K1 - K1' equals the degree-0 operator
// differential of x (asserted internally).
Report check_equivalence(const LinearDeformation& a,
                         const LinearDeformation& b, const Vector& x);

// Same notion for truncated families: the five bundle-morphism conditions
// imposed coefficient-wise in t up to the requested order. Higher phi/psi
// corrections must be supplied by the datum once the order exceeds 1.
Report check_formal_equivalence(const TruncatedFormalDeformation& a,
                                const TruncatedFormalDeformation& b,
                                const EquivalenceDatum& e, std::size_t order);

// x is Nijenhuis for the bundle when [x, rho_r-bar(u) x] = 0 for every u
// (rho-bar the induced module structure) together with the four structural
// condition groups above that do not mention K1. Such elements generate
// one-step trivializations.
Report check_nijenhuis_element(const TwistedRBData& d, const Vector& x);

// One rigidity step: given a verified truncated family whose linear term
// satisfies dK(x) = -K1 for a Nijenhuis element x, conjugate by the pair
// built from -x (phi_t = Id - t[x,-], psi_t = Id - t(rho_l(x) + h(x, K-)),
// the module map inverted as a truncated geometric series). The result has
// zero linear term and passes check_formal_deformation to the same order.
TruncatedFormalDeformation trivialization_step(
    const TruncatedFormalDeformation& fd, const Vector& x);

}  // namespace lra
