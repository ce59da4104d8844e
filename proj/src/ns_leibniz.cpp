#include "lra/ns_leibniz.hpp"

#include <utility>

#include "lra/errors.hpp"

namespace lra {

namespace {

// product of a coordinate vector with a basis element, and the mirror case
Vector mul_vb(const Tensor3& t, const Vector& x, std::size_t j) {
  Vector out = zero_vector(t.dim());
  for (std::size_t i = 0; i < t.dim(); ++i) {
    if (x[i] == 0) continue;
    vec_axpy(out, x[i], t.product(i, j));
  }
  return out;
}

Vector mul_bv(const Tensor3& t, std::size_t i, const Vector& y) {
  Vector out = zero_vector(t.dim());
  for (std::size_t j = 0; j < t.dim(); ++j) {
    if (y[j] == 0) continue;
    vec_axpy(out, y[j], t.product(i, j));
  }
  return out;
}

void require_dim(const Tensor3& t, std::size_t dim, const char* which) {
  if (t.dim() != dim) {
    throw ShapeError(std::string("product table ") + which +
                     " does not match the declared dimension");
  }
}

}  // namespace

Tensor3 NSLeibnizAlgebra::sum_product() const { return tri + tli + dia; }

NSLeibnizAlgebra make_ns(std::size_t dim, Tensor3 tri, Tensor3 tli,
                         Tensor3 dia) {
  require_dim(tri, dim, "|>");
  require_dim(tli, dim, "<|");
  require_dim(dia, dim, "<>");
  NSLeibnizAlgebra a;
  a.dim = dim;
  a.tri = std::move(tri);
  a.tli = std::move(tli);
  a.dia = std::move(dia);
  return a;
}

Report check_ns_axioms(const NSLeibnizAlgebra& a) {
  const std::size_t n = a.dim;
  const std::string note = n == 0 ? "zero-dimensional space: nothing to check"
                                  : std::string();
  Tensor3 s = a.sum_product();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = mul_bv(a.tri, i, s.product(j, k));
        Vector rhs = vec_add(mul_vb(a.tri, a.tri.product(i, j), k),
                             mul_bv(a.tli, j, a.tri.product(i, k)));
        if (lhs != rhs) {
          return fail_report("axiom-A1", {i, j, k}, std::move(lhs),
                             std::move(rhs), note);
        }
        lhs = mul_bv(a.tli, i, a.tri.product(j, k));
        rhs = vec_add(mul_vb(a.tri, a.tli.product(i, j), k),
                      mul_bv(a.tri, j, s.product(i, k)));
        if (lhs != rhs) {
          return fail_report("axiom-A2", {i, j, k}, std::move(lhs),
                             std::move(rhs), note);
        }
        lhs = mul_bv(a.tli, i, a.tli.product(j, k));
        rhs = vec_add(mul_vb(a.tli, s.product(i, j), k),
                      mul_bv(a.tli, j, a.tli.product(i, k)));
        if (lhs != rhs) {
          return fail_report("axiom-A3", {i, j, k}, std::move(lhs),
                             std::move(rhs), note);
        }
        lhs = vec_add(mul_bv(a.tli, i, a.dia.product(j, k)),
                      mul_bv(a.dia, i, s.product(j, k)));
        rhs = vec_add(mul_vb(a.tri, a.dia.product(i, j), k),
                      mul_vb(a.dia, s.product(i, j), k));
        rhs = vec_add(rhs, mul_bv(a.tli, j, a.dia.product(i, k)));
        rhs = vec_add(rhs, mul_bv(a.dia, j, s.product(i, k)));
        if (lhs != rhs) {
          return fail_report("axiom-A4", {i, j, k}, std::move(lhs),
                             std::move(rhs), note);
        }
      }
    }
  }
  return pass_report(note);
}

LeibnizAlgebra subadjacent(const NSLeibnizAlgebra& a) {
  if (!check_ns_axioms(a)) {
    throw PreconditionError("product tables fail the split axioms");
  }
  LeibnizAlgebra g = make_algebra(a.dim, a.sum_product());
  if (!check_leibniz(g)) {
    throw std::logic_error("sum product of a valid split failed the identity");
  }
  g.verified = true;
  return g;
}

NSLeibnizAlgebra ns_from_nijenhuis(const LeibnizAlgebra& g, const Matrix& n) {
  ensure_leibniz(g);
  if (n.rows() != g.dim || n.cols() != g.dim) {
    throw ShapeError("operator must be a square matrix of the algebra size");
  }
  if (!check_nijenhuis(g, n)) {
    throw PreconditionError("operator fails the Nijenhuis identity");
  }
  const std::size_t dim = g.dim;
  Tensor3 tri(dim), tli(dim), dia(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vector ni = n.col(i);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector t = g.bracket_of(unit_vector(dim, i), n.col(j));
      Vector l = g.bracket_of(ni, unit_vector(dim, j));
      Vector d = vec_scale(-1, n.apply(g.bracket_of(i, j)));
      for (std::size_t k = 0; k < dim; ++k) {
        tri.at(i, j, k) = t[k];
        tli.at(i, j, k) = l[k];
        dia.at(i, j, k) = d[k];
      }
    }
  }
  NSLeibnizAlgebra a = make_ns(dim, std::move(tri), std::move(tli),
                               std::move(dia));
  if (!check_ns_axioms(a)) {
    throw std::logic_error("Nijenhuis split failed the axioms");
  }
  a.verified = true;
  return a;
}

TwistedRBData canonical_trb(const NSLeibnizAlgebra& a) {
  LeibnizAlgebra sub = subadjacent(a);  // validates the axioms
  const std::size_t dim = a.dim;
  std::vector<Matrix> rho_l(dim), rho_r(dim);
  Bicochain twist = zero_bicochain(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Matrix l(dim, dim), r(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        l.at(k, j) = a.tli.at(i, j, k);  // L(e_i) e_j = e_i <| e_j
        r.at(k, j) = a.tri.at(j, i, k);  // R(e_i) e_j = e_j |> e_i
      }
      twist.at(i, j) = a.dia.product(i, j);
    }
    rho_l[i] = std::move(l);
    rho_r[i] = std::move(r);
  }
  Representation rep =
      make_representation(std::move(sub), dim, std::move(rho_l),
                          std::move(rho_r));
  if (!check_representation(rep)) {
    throw std::logic_error("split action failed the module axioms");
  }
  rep.verified = true;
  TwistedRBData d =
      make_twisted_rb(std::move(rep), std::move(twist), Matrix::identity(dim));
  if (!check_twisted_rb(d)) {
    throw std::logic_error("identity operator failed on a split structure");
  }
  d.verified = true;
  return d;
}

NSLeibnizAlgebra ns_from_twisted_rb(const TwistedRBData& d) {
  ensure_twisted_rb(d);
  const std::size_t m = d.dim_v();
  Tensor3 tri(m), tli(m), dia(m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    Matrix l_ka = d.rep.rho_l_of(ka);
    for (std::size_t b = 0; b < m; ++b) {
      Vector kb = d.k.col(b);
      Vector t = d.rep.rho_r_of(kb).apply(unit_vector(m, a));
      Vector l = l_ka.apply(unit_vector(m, b));
      Vector di = d.twist.eval(ka, kb);
      for (std::size_t k = 0; k < m; ++k) {
        tri.at(a, b, k) = t[k];
        tli.at(a, b, k) = l[k];
        dia.at(a, b, k) = di[k];
      }
    }
  }
  NSLeibnizAlgebra out = make_ns(m, std::move(tri), std::move(tli),
                                 std::move(dia));
  if (!check_ns_axioms(out)) {
    throw std::logic_error("module split of a valid operator failed");
  }
  out.verified = true;
  return out;
}

std::optional<NSLeibnizAlgebra> compatible_ns_from_invertible(
    const TwistedRBData& d) {
  ensure_twisted_rb(d);
  if (d.dim_g() != d.dim_v()) return std::nullopt;
  auto inv = invert(d.k);
  if (!inv) return std::nullopt;
  const std::size_t n = d.dim_g();
  Tensor3 tri(n), tli(n), dia(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector ki = inv->col(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector t = d.k.apply(d.rep.rho_r[j].apply(ki));
      Vector l = d.k.apply(d.rep.rho_l[i].apply(inv->col(j)));
      Vector di = d.k.apply(d.twist.at(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        tri.at(i, j, k) = t[k];
        tli.at(i, j, k) = l[k];
        dia.at(i, j, k) = di[k];
      }
    }
  }
  NSLeibnizAlgebra out = make_ns(n, std::move(tri), std::move(tli),
                                 std::move(dia));
  if (!check_ns_axioms(out)) {
    throw std::logic_error("transported split of an invertible operator failed");
  }
  out.verified = true;
  return out;
}

Report nijenhuis_compatibility(const LeibnizAlgebra& g, const Matrix& n) {
  ensure_leibniz(g);
  if (n.rows() != g.dim || n.cols() != g.dim) {
    throw ShapeError("operator must be a square matrix of the algebra size");
  }
  const std::size_t dim = g.dim;
  const std::string note = dim == 0 ? "zero-dimensional algebra" : "";
  Tensor3 def(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vector v = g.bracket_of(n.col(i), unit_vector(dim, j));
      v = vec_add(v, g.bracket_of(unit_vector(dim, i), n.col(j)));
      v = vec_sub(v, n.apply(g.bracket_of(i, j)));
      for (std::size_t k = 0; k < dim; ++k) def.at(i, j, k) = v[k];
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        Vector lhs = vec_add(mul_bv(def, i, g.bracket_of(j, k)),
                             g.bracket_of(unit_vector(dim, i),
                                          def.product(j, k)));
        Vector rhs = vec_add(mul_vb(def, g.bracket_of(i, j), k),
                             g.bracket_of(def.product(i, j),
                                          unit_vector(dim, k)));
        rhs = vec_add(rhs, mul_bv(def, j, g.bracket_of(i, k)));
        rhs = vec_add(rhs, g.bracket_of(unit_vector(dim, j),
                                        def.product(i, k)));
        if (lhs != rhs) {
          return fail_report("deformed-compatibility", {i, j, k},
                             std::move(lhs), std::move(rhs), note);
        }
      }
    }
  }
  return pass_report(note);
}

}  // namespace lra
