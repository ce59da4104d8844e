#include "lra/leibniz.hpp"

#include <utility>

#include "lra/cochain.hpp"
#include "lra/errors.hpp"

namespace lra {

Vector Tensor3::product(std::size_t i, std::size_t j) const {
  Vector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = at(i, j, k);
  return out;
}

bool Tensor3::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  if (dim_ != o.dim_) throw ShapeError("tensor dim mismatch in add");
  Tensor3 out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

Vector LeibnizAlgebra::bracket_of(const Vector& x, const Vector& y) const {
  if (x.size() != dim || y.size() != dim) {
    throw ShapeError("bracket argument size mismatch");
  }
  Vector out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Rational& s = bracket.at(i, j, k);
        if (s != 0) out[k] += c * s;
      }
    }
  }
  return out;
}

LeibnizAlgebra make_algebra(std::size_t dim, Tensor3 bracket) {
  if (bracket.dim() != dim) throw ShapeError("structure tensor dim mismatch");
  LeibnizAlgebra g;
  g.dim = dim;
  g.bracket = std::move(bracket);
  return g;
}

LeibnizAlgebra zero_algebra(std::size_t dim) {
  LeibnizAlgebra g = make_algebra(dim, Tensor3(dim));
  g.verified = true;
  return g;
}

Matrix Representation::rho_l_of(const Vector& x) const {
  Matrix out(dim_v, dim_v);
  for (std::size_t i = 0; i < algebra.dim; ++i) {
    if (x[i] == 0) continue;
    out = out + rho_l[i].scaled(x[i]);
  }
  return out;
}

Matrix Representation::rho_r_of(const Vector& x) const {
  Matrix out(dim_v, dim_v);
  for (std::size_t i = 0; i < algebra.dim; ++i) {
    if (x[i] == 0) continue;
    out = out + rho_r[i].scaled(x[i]);
  }
  return out;
}

Representation make_representation(LeibnizAlgebra g, std::size_t dim_v,
                                   std::vector<Matrix> rho_l,
                                   std::vector<Matrix> rho_r) {
  if (rho_l.size() != g.dim || rho_r.size() != g.dim) {
    throw ShapeError("action family size must equal algebra dim");
  }
  for (const auto& m : rho_l) {
    if (m.rows() != dim_v || m.cols() != dim_v) {
      throw ShapeError("left action matrix must be dim_v x dim_v");
    }
  }
  for (const auto& m : rho_r) {
    if (m.rows() != dim_v || m.cols() != dim_v) {
      throw ShapeError("right action matrix must be dim_v x dim_v");
    }
  }
  Representation r;
  r.algebra = std::move(g);
  r.dim_v = dim_v;
  r.rho_l = std::move(rho_l);
  r.rho_r = std::move(rho_r);
  return r;
}

Vector Bicochain::eval(const Vector& x, const Vector& y) const {
  if (x.size() != dim_g || y.size() != dim_g) {
    throw ShapeError("bicochain argument size mismatch");
  }
  Vector out(dim_v);
  for (std::size_t i = 0; i < dim_g; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_g; ++j) {
      if (y[j] == 0) continue;
      vec_axpy(out, x[i] * y[j], at(i, j));
    }
  }
  return out;
}

bool Bicochain::is_zero() const {
  for (const auto& v : values) {
    if (!vec_is_zero(v)) return false;
  }
  return true;
}

Bicochain zero_bicochain(std::size_t dim_g, std::size_t dim_v) {
  Bicochain h;
  h.dim_g = dim_g;
  h.dim_v = dim_v;
  h.values.assign(dim_g * dim_g, Vector(dim_v));
  return h;
}

Report check_leibniz(const LeibnizAlgebra& g) {
  const std::size_t d = g.dim;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Vector lhs = g.bracket_of(unit_vector(d, i), g.bracket_of(j, k));
        Vector rhs = vec_add(g.bracket_of(g.bracket_of(i, j), unit_vector(d, k)),
                             g.bracket_of(unit_vector(d, j), g.bracket_of(i, k)));
        if (lhs != rhs) {
          return fail_report("leibniz-identity", {i, j, k}, std::move(lhs),
                             std::move(rhs), degenerate_note(d, d));
        }
      }
    }
  }
  return pass_report(degenerate_note(d, d));
}

namespace {

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  }
  return out;
}

}  // namespace

Report check_representation(const Representation& r) {
  const std::size_t d = r.algebra.dim;
  const std::string note = degenerate_note(d, r.dim_v);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector br = r.algebra.bracket_of(i, j);
      Matrix left_of_bracket = r.rho_l_of(br);
      Matrix right_of_bracket = r.rho_r_of(br);
      Matrix ll = r.rho_l[i] * r.rho_l[j];
      Matrix lr = r.rho_l[i] * r.rho_r[j];
      Matrix axiom1 = ll - r.rho_l[j] * r.rho_l[i];
      if (left_of_bracket != axiom1) {
        return fail_report("axiom-1", {i, j}, flatten(left_of_bracket),
                           flatten(axiom1), note);
      }
      Matrix axiom2 = lr - r.rho_r[j] * r.rho_l[i];
      if (right_of_bracket != axiom2) {
        return fail_report("axiom-2", {i, j}, flatten(right_of_bracket),
                           flatten(axiom2), note);
      }
      Matrix axiom3 = lr + r.rho_r[j] * r.rho_r[i];
      if (right_of_bracket != axiom3) {
        return fail_report("axiom-3", {i, j}, flatten(right_of_bracket),
                           flatten(axiom3), note);
      }
    }
  }
  return pass_report(note);
}

Representation regular_representation(const LeibnizAlgebra& g) {
  ensure_leibniz(g);
  const std::size_t d = g.dim;
  std::vector<Matrix> rho_l(d), rho_r(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(d, d), r(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        l.at(k, j) = g.bracket.at(i, j, k);
        r.at(k, j) = g.bracket.at(j, i, k);
      }
    }
    rho_l[i] = std::move(l);
    rho_r[i] = std::move(r);
  }
  LeibnizAlgebra base = g;
  base.verified = true;
  Representation rep = make_representation(std::move(base), d, std::move(rho_l),
                                           std::move(rho_r));
  rep.verified = true;
  return rep;
}

Report check_nijenhuis(const LeibnizAlgebra& g, const Matrix& n) {
  if (n.rows() != g.dim || n.cols() != g.dim) {
    throw ShapeError("nijenhuis candidate must be dim x dim");
  }
  const std::size_t d = g.dim;
  for (std::size_t i = 0; i < d; ++i) {
    Vector ni = n.col(i);
    for (std::size_t j = 0; j < d; ++j) {
      Vector nj = n.col(j);
      Vector lhs = g.bracket_of(ni, nj);
      Vector inner = vec_add(g.bracket_of(ni, unit_vector(d, j)),
                             g.bracket_of(unit_vector(d, i), nj));
      inner = vec_sub(inner, n.apply(g.bracket_of(i, j)));
      Vector rhs = n.apply(inner);
      if (lhs != rhs) {
        return fail_report("nijenhuis-identity", {i, j}, std::move(lhs),
                           std::move(rhs), degenerate_note(d, d));
      }
    }
  }
  return pass_report(degenerate_note(d, d));
}

LeibnizAlgebra deformed_bracket(const LeibnizAlgebra& g, const Matrix& n) {
  ensure_leibniz(g);
  if (Report r = check_nijenhuis(g, n); !r) {
    throw PreconditionError("deformed_bracket: map fails the Nijenhuis check");
  }
  const std::size_t d = g.dim;
  Tensor3 c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector v = vec_add(g.bracket_of(n.col(i), unit_vector(d, j)),
                         g.bracket_of(unit_vector(d, i), n.col(j)));
      v = vec_sub(v, n.apply(g.bracket_of(i, j)));
      for (std::size_t k = 0; k < d; ++k) c.at(i, j, k) = v[k];
    }
  }
  LeibnizAlgebra out = make_algebra(d, std::move(c));
  if (!check_leibniz(out)) {
    throw std::logic_error("deformed bracket failed the Leibniz check");
  }
  out.verified = true;
  return out;
}

LeibnizAlgebra twisted_semidirect_unchecked(const Representation& r,
                                            const Bicochain& h) {
  if (h.dim_g != r.algebra.dim || h.dim_v != r.dim_v) {
    throw ShapeError("twist shape does not match the representation");
  }
  const std::size_t d = r.algebra.dim;
  const std::size_t m = r.dim_v;
  Tensor3 c(d + m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) c.at(i, j, k) = r.algebra.bracket.at(i, j, k);
      const Vector& tw = h.at(i, j);
      for (std::size_t a = 0; a < m; ++a) c.at(i, j, d + a) = tw[a];
    }
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t a = 0; a < m; ++a) {
        c.at(i, d + b, d + a) = r.rho_l[i].at(a, b);
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        c.at(d + a, j, d + k) = r.rho_r[j].at(k, a);
      }
    }
  }
  return make_algebra(d + m, std::move(c));
}

LeibnizAlgebra twisted_semidirect(const Representation& r, const Bicochain& h) {
  ensure_representation(r);
  if (Report c = is_cocycle(r, to_cochain(h)); !c) {
    throw PreconditionError(
        "twisted_semidirect: twist fails the degree-2 cocycle check");
  }
  LeibnizAlgebra out = twisted_semidirect_unchecked(r, h);
  if (!check_leibniz(out)) {
    throw std::logic_error("twisted sum failed the Leibniz check");
  }
  out.verified = true;
  return out;
}

void ensure_leibniz(const LeibnizAlgebra& g) {
  if (g.verified) return;
  if (Report r = check_leibniz(g); !r) {
    throw PreconditionError("algebra fails the Leibniz identity");
  }
}

void ensure_representation(const Representation& r) {
  ensure_leibniz(r.algebra);
  if (r.verified) return;
  if (Report rep = check_representation(r); !rep) {
    throw PreconditionError("module data fails axiom " + rep.failed_condition);
  }
}

}  // namespace lra
