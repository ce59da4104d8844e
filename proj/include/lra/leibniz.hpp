#pragma once

#include <cstddef>
#include <vector>

#include "lra/linalg.hpp"
#include "lra/report.hpp"

namespace lra {

// Structure-constant table: entry(i,j,k) is the e_k coefficient of the
// product of e_i and e_j (output index last).
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }

  Rational& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  // product of e_i and e_j as a coordinate vector
  Vector product(std::size_t i, std::size_t j) const;

  bool operator==(const Tensor3& o) const = default;
  bool is_zero() const;

  Tensor3 operator+(const Tensor3& o) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

struct LeibnizAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;
  bool verified = false;

  Vector bracket_of(std::size_t i, std::size_t j) const {
    return bracket.product(i, j);
  }
  // bilinear expansion for arbitrary coordinate vectors
  Vector bracket_of(const Vector& x, const Vector& y) const;
};

LeibnizAlgebra make_algebra(std::size_t dim, Tensor3 bracket);
LeibnizAlgebra zero_algebra(std::size_t dim);

// Module data over a fixed algebra: rho_l[i] and rho_r[i] act on coordinate
// columns of the dim_v-dimensional space, entry (k, j) giving the k-th
// coefficient of the action of e_i on the j-th module basis vector.
struct Representation {
  LeibnizAlgebra algebra;
  std::size_t dim_v = 0;
  std::vector<Matrix> rho_l, rho_r;
  bool verified = false;

  Matrix rho_l_of(const Vector& x) const;  // sum_i x_i rho_l[i]
  Matrix rho_r_of(const Vector& x) const;
};

Representation make_representation(LeibnizAlgebra g, std::size_t dim_v,
                                   std::vector<Matrix> rho_l,
                                   std::vector<Matrix> rho_r);

// Module-valued bilinear table on the algebra.
struct Bicochain {
  std::size_t dim_g = 0, dim_v = 0;
  std::vector<Vector> values;  // index i * dim_g + j

  Vector& at(std::size_t i, std::size_t j) { return values[i * dim_g + j]; }
  const Vector& at(std::size_t i, std::size_t j) const {
    return values[i * dim_g + j];
  }
  // bilinear expansion
  Vector eval(const Vector& x, const Vector& y) const;
  bool is_zero() const;
};

Bicochain zero_bicochain(std::size_t dim_g, std::size_t dim_v);

// Identity [x,[y,z]] = [[x,y],z] + [y,[x,z]] on every basis triple. The
// failure report names the triple and carries both side values.
Report check_leibniz(const LeibnizAlgebra& g);

// The three module axioms, checked on every basis pair:
//   axiom-1: rho_l([x,y]) = rho_l(x) rho_l(y) - rho_l(y) rho_l(x)
//   axiom-2: rho_r([x,y]) = rho_l(x) rho_r(y) - rho_r(y) rho_l(x)
//   axiom-3: rho_r([x,y]) = rho_l(x) rho_r(y) + rho_r(y) rho_r(x)
Report check_representation(const Representation& r);

// rho_l(x) = left multiplication, rho_r(x) = right multiplication on the
// algebra itself. Requires the Leibniz identity (checked).
Representation regular_representation(const LeibnizAlgebra& g);

// [Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y]) on every basis pair.
Report check_nijenhuis(const LeibnizAlgebra& g, const Matrix& n);

// [x,y]_N = [Nx,y] + [x,Ny] - N[x,y]; requires N to pass check_nijenhuis so
// the result is again a Leibniz algebra (both checked).
LeibnizAlgebra deformed_bracket(const LeibnizAlgebra& g, const Matrix& n);

// Bracket on g (+) V:
//   [(x,u),(y,v)] = ([x,y], rho_l(x) v + rho_r(y) u + h(x,y)).
// The checked form requires h to pass the degree-2 cocycle test, which is
// exactly what makes the result Leibniz; the unchecked form exists so tests
// can witness the failure on a non-cocycle twist.
LeibnizAlgebra twisted_semidirect(const Representation& r, const Bicochain& h);
LeibnizAlgebra twisted_semidirect_unchecked(const Representation& r,
                                            const Bicochain& h);

// Throw PreconditionError unless the check passes; used as entry guards.
void ensure_leibniz(const LeibnizAlgebra& g);
void ensure_representation(const Representation& r);

}  // namespace lra
