#pragma once

#include <optional>

#include "lra/twisted_rb.hpp"

namespace lra {

// One space carrying three bilinear products. The sum product
// x * y = (x tri y) + (x tli y) + (x dia y) is always derived on demand,
// never stored.
struct NSLeibnizAlgebra {
  std::size_t dim = 0;
  Tensor3 tri;  // x |> y
  Tensor3 tli;  // x <| y
  Tensor3 dia;  // x <> y
  bool verified = false;

  Tensor3 sum_product() const;  // structure constants of *
};

NSLeibnizAlgebra make_ns(std::size_t dim, Tensor3 tri, Tensor3 tli,
                         Tensor3 dia);

// The four axioms, on every basis triple (* the sum product):
//   A1: x |> (y * z)  = (x |> y) |> z + y <| (x |> z)
//   A2: x <| (y |> z) = (x <| y) |> z + y |> (x * z)
//   A3: x <| (y <| z) = (x * y) <| z + y <| (x <| z)
//   A4: x <| (y <> z) + x <> (y * z)
//         = (x <> y) |> z + (x * y) <> z + y <| (x <> z) + y <> (x * z)
Report check_ns_axioms(const NSLeibnizAlgebra& a);

// The sum product is a Leibniz bracket whenever the axioms hold; checked and
// returned verified.
LeibnizAlgebra subadjacent(const NSLeibnizAlgebra& a);

// Nijenhuis map N on a Leibniz algebra splits the deformed bracket:
//   x |> y = [x, Ny],  x <| y = [Nx, y],  x <> y = -N[x, y].
NSLeibnizAlgebra ns_from_nijenhuis(const LeibnizAlgebra& g, const Matrix& n);

// Every NS structure is the identity operator on its own subadjacent
// algebra: the algebra acts on itself by x . y = x <| y and y . x = y |> x,
// the twist is <>, and K = Id. Returns a verified bundle.
TwistedRBData canonical_trb(const NSLeibnizAlgebra& a);

// A verified bundle puts an NS structure on its module:
//   u |> v = rho_r(Kv) u,  u <| v = rho_l(Ku) v,  u <> v = h(Ku, Kv);
// the subadjacent bracket is the induced bracket.
NSLeibnizAlgebra ns_from_twisted_rb(const TwistedRBData& d);

// With K additionally invertible the NS structure transports to the algebra
// side: x |> y = K rho_r(y) K^{-1} x, x <| y = K rho_l(x) K^{-1} y,
// x <> y = K h(x, y); its subadjacent bracket is the original one. Absent
// when K is not invertible.
std::optional<NSLeibnizAlgebra> compatible_ns_from_invertible(
    const TwistedRBData& d);

// Deformation compatibility of a Nijenhuis map, on every basis triple:
//   [x,[y,z]_N] + [x,[y,z]]_N
//     = [[x,y],z]_N + [[x,y]_N,z] + [y,[x,z]]_N + [y,[x,z]_N].
Report nijenhuis_compatibility(const LeibnizAlgebra& g, const Matrix& n);

}  // namespace lra
