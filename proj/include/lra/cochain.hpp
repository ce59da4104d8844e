#pragma once

#include <cstddef>
#include <optional>

#include "lra/leibniz.hpp"

namespace lra {

// n-argument cochain with arguments in an arg_dim-dimensional space and
// values in a val_dim-dimensional space, stored flat: lexicographic over the
// argument tuple, value index innermost.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t arg_dim, std::size_t val_dim);

  std::size_t degree() const { return degree_; }
  std::size_t arg_dim() const { return arg_dim_; }
  std::size_t val_dim() const { return val_dim_; }
  std::size_t tuple_count() const { return tuple_count_; }
  std::size_t size() const { return data_.size(); }  // tuple_count * val_dim

  // rank of the tuple in lexicographic order
  std::size_t tuple_index(const std::vector<std::size_t>& t) const;

  Vector value(std::size_t tuple_idx) const;
  void set_value(std::size_t tuple_idx, const Vector& v);
  void add_to_value(std::size_t tuple_idx, const Rational& s, const Vector& v);

  Rational& entry(std::size_t flat) { return data_[flat]; }
  const Rational& entry(std::size_t flat) const { return data_[flat]; }

  bool operator==(const Cochain& o) const = default;
  bool is_zero() const;

  Cochain operator+(const Cochain& o) const;
  Cochain operator-(const Cochain& o) const;
  Cochain scaled(const Rational& s) const;

 private:
  std::size_t degree_ = 0, arg_dim_ = 0, val_dim_ = 0, tuple_count_ = 1;
  std::vector<Rational> data_;
};

// Choice of degree-0 differential. The default sends v to x |-> -rho_r(x) v,
// the value of the general formula at n = 0; the alternative
// x |-> rho_l(x) v - rho_r(x) v is exposed because both appear in practice.
// Degrees >= 1 are identical under either choice.
enum class Degree0Convention { literal, left_minus_right };

inline constexpr std::size_t default_degree_cap = 3;

// Differential of an n-cochain on the algebra with module values:
//   (df)(x_1..x_{n+1}) = sum_{i<=n} (-1)^{i+1} rho_l(x_i) f(..x_i-hat..)
//                      + (-1)^{n+1} rho_r(x_{n+1}) f(x_1..x_n)
//                      + sum_{i<j} (-1)^i f(..x_i-hat.., [x_i,x_j] at j, ..)
Cochain coboundary(const Representation& r, const Cochain& f,
                   Degree0Convention conv = Degree0Convention::literal);

// Matrix of the differential from degree-n cochains to degree-(n+1) cochains
// in flattened coordinates.
Matrix coboundary_matrix(const Representation& r, std::size_t degree,
                         Degree0Convention conv = Degree0Convention::literal);

Report is_cocycle(const Representation& r, const Cochain& f,
                  Degree0Convention conv = Degree0Convention::literal);

// A preimage under the differential when one exists (free variables zero, so
// the answer is deterministic); absent when f is not a coboundary. Degree-0
// cochains are never coboundaries here.
std::optional<Cochain> coboundary_preimage(
    const Representation& r, const Cochain& f,
    Degree0Convention conv = Degree0Convention::literal);

struct CohomologyDims {
  std::size_t degree = 0;
  std::size_t z = 0;  // dim ker d_n
  std::size_t b = 0;  // dim im d_{n-1} (0 at degree 0)
  std::size_t h = 0;  // z - b
};

// Exact kernel/image dimensions at one degree. Degrees above the cap are a
// ShapeError: the flattened tensors grow as arg_dim^degree.
CohomologyDims cohomology_dims(const Representation& r, std::size_t degree,
                               std::size_t degree_cap = default_degree_cap,
                               Degree0Convention conv =
                                   Degree0Convention::literal);

// Direct evaluation of the degree-2 cocycle condition
//   rho_l(x) h(y,z) - rho_l(y) h(x,z) - rho_r(z) h(x,y)
//     - h([x,y],z) - h(y,[x,z]) + h(x,[y,z]) = 0
// on every basis triple. Written independently of `coboundary` on purpose:
// the two paths are cross-checked in the suite.
Report two_cocycle_condition(const Representation& r, const Bicochain& h);

Cochain to_cochain(const Bicochain& h);
Bicochain to_bicochain(const Cochain& f);  // requires degree 2

// A degree-1 cochain is the same data as a linear map: columns indexed by
// argument basis, rows by value basis.
Cochain matrix_to_cochain(const Matrix& m);
Matrix cochain_to_matrix(const Cochain& f);  // requires degree 1

}  // namespace lra
