#include "lra/twisted_rb.hpp"

#include <utility>

#include "lra/errors.hpp"

namespace lra {

namespace {

bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (++t[pos] < base) return true;
    t[pos] = 0;
  }
  return false;
}

}  // namespace

TwistedRBData make_twisted_rb(Representation r, Bicochain twist, Matrix k) {
  if (twist.dim_g != r.algebra.dim || twist.dim_v != r.dim_v) {
    throw ShapeError("twist shape does not match the representation");
  }
  if (k.rows() != r.algebra.dim || k.cols() != r.dim_v) {
    throw ShapeError("operator must be dim_g x dim_v");
  }
  ensure_representation(r);
  if (Report c = is_cocycle(r, to_cochain(twist)); !c) {
    throw PreconditionError("bundle twist fails the degree-2 cocycle check");
  }
  TwistedRBData d;
  d.rep = std::move(r);
  d.twist = std::move(twist);
  d.k = std::move(k);
  return d;
}

Report check_twisted_rb(const TwistedRBData& d) {
  const std::size_t m = d.dim_v();
  const std::string note = degenerate_note(d.dim_g(), m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    for (std::size_t b = 0; b < m; ++b) {
      Vector kb = d.k.col(b);
      Vector lhs = d.algebra().bracket_of(ka, kb);
      Vector inner = d.rep.rho_l_of(ka).apply(unit_vector(m, b));
      inner = vec_add(inner, d.rep.rho_r_of(kb).apply(unit_vector(m, a)));
      inner = vec_add(inner, d.twist.eval(ka, kb));
      Vector rhs = d.k.apply(inner);
      if (lhs != rhs) {
        return fail_report("twisted-operator", {a, b}, std::move(lhs),
                           std::move(rhs), note);
      }
    }
  }
  return pass_report(note);
}

Report graph_is_subalgebra(const TwistedRBData& d) {
  const std::size_t n = d.dim_g();
  const std::size_t m = d.dim_v();
  LeibnizAlgebra sum = twisted_semidirect(d.rep, d.twist);
  // graph generators (Ku_a, u_a) as columns
  Matrix gen(n + m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t i = 0; i < n; ++i) gen.at(i, a) = d.k.at(i, a);
    gen.at(n + a, a) = 1;
  }
  const std::string note = degenerate_note(n, m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector wa = gen.col(a);
    for (std::size_t b = 0; b < m; ++b) {
      Vector prod = sum.bracket_of(wa, gen.col(b));
      if (!solve(gen, prod)) {
        // outside the span; the two halves below disagree exactly then
        Vector head(prod.begin(), prod.begin() + n);
        Vector tail(prod.begin() + n, prod.end());
        return fail_report("graph-closure", {a, b}, std::move(head),
                           d.k.apply(tail), note);
      }
    }
  }
  return pass_report(note);
}

TwistedRBData from_invertible_cochain(const Representation& r,
                                      const Matrix& h) {
  ensure_representation(r);
  if (r.dim_v != r.algebra.dim) {
    throw ShapeError("invertible-cochain construction needs dim_v == dim_g");
  }
  if (h.rows() != r.dim_v || h.cols() != r.algebra.dim) {
    throw ShapeError("cochain matrix must be dim_v x dim_g");
  }
  auto h_inv = invert(h);
  if (!h_inv) {
    throw PreconditionError("from_invertible_cochain: cochain is singular");
  }
  Cochain dh = coboundary(r, matrix_to_cochain(h));
  Bicochain twist = to_bicochain(dh.scaled(-1));
  TwistedRBData d = make_twisted_rb(r, std::move(twist), std::move(*h_inv));
  if (!check_twisted_rb(d)) {
    throw std::logic_error("inverse of an invertible cochain failed the check");
  }
  d.verified = true;
  return d;
}

TwistedRBData from_nijenhuis(const LeibnizAlgebra& g, const Matrix& n) {
  LeibnizAlgebra deformed = deformed_bracket(g, n);  // checks g and n
  const std::size_t dim = g.dim;
  std::vector<Matrix> rho_l(dim), rho_r(dim);
  Bicochain twist = zero_bicochain(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vector ni = n.col(i);
    Matrix l(dim, dim), r(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Vector lv = g.bracket_of(ni, unit_vector(dim, j));
      Vector rv = g.bracket_of(unit_vector(dim, j), ni);
      for (std::size_t k = 0; k < dim; ++k) {
        l.at(k, j) = lv[k];
        r.at(k, j) = rv[k];
      }
      twist.at(i, j) = vec_scale(-1, n.apply(g.bracket_of(i, j)));
    }
    rho_l[i] = std::move(l);
    rho_r[i] = std::move(r);
  }
  Representation rep = make_representation(std::move(deformed), dim,
                                           std::move(rho_l), std::move(rho_r));
  if (!check_representation(rep)) {
    throw std::logic_error("deformed-algebra action failed the module axioms");
  }
  rep.verified = true;
  TwistedRBData d =
      make_twisted_rb(std::move(rep), std::move(twist), Matrix::identity(dim));
  if (!check_twisted_rb(d)) {
    throw std::logic_error("identity operator failed on a Nijenhuis bundle");
  }
  d.verified = true;
  return d;
}

LeibnizAlgebra induced_bracket(const TwistedRBData& d) {
  ensure_twisted_rb(d);
  const std::size_t m = d.dim_v();
  Tensor3 c(m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    for (std::size_t b = 0; b < m; ++b) {
      Vector kb = d.k.col(b);
      Vector v = d.rep.rho_l_of(ka).apply(unit_vector(m, b));
      v = vec_add(v, d.rep.rho_r_of(kb).apply(unit_vector(m, a)));
      v = vec_add(v, d.twist.eval(ka, kb));
      for (std::size_t k = 0; k < m; ++k) c.at(a, b, k) = v[k];
    }
  }
  LeibnizAlgebra out = make_algebra(m, std::move(c));
  if (!check_leibniz(out)) {
    throw std::logic_error("induced bracket failed the Leibniz check");
  }
  out.verified = true;
  return out;
}

Representation induced_representation(const TwistedRBData& d) {
  LeibnizAlgebra module_algebra = induced_bracket(d);  // ensures d
  const std::size_t n = d.dim_g();
  const std::size_t m = d.dim_v();
  std::vector<Matrix> rho_l(m), rho_r(m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    Matrix l(n, n), r(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Vector ej = unit_vector(n, j);
      Vector lv = d.algebra().bracket_of(ka, ej);
      lv = vec_sub(lv, d.k.apply(d.rep.rho_r[j].apply(unit_vector(m, a))));
      lv = vec_sub(lv, d.k.apply(d.twist.eval(ka, ej)));
      Vector rv = d.algebra().bracket_of(ej, ka);
      rv = vec_sub(rv, d.k.apply(d.rep.rho_l[j].apply(unit_vector(m, a))));
      rv = vec_sub(rv, d.k.apply(d.twist.eval(ej, ka)));
      for (std::size_t k = 0; k < n; ++k) {
        l.at(k, j) = lv[k];
        r.at(k, j) = rv[k];
      }
    }
    rho_l[a] = std::move(l);
    rho_r[a] = std::move(r);
  }
  Representation rep = make_representation(std::move(module_algebra), n,
                                           std::move(rho_l), std::move(rho_r));
  if (!check_representation(rep)) {
    throw std::logic_error("induced action failed the module axioms");
  }
  rep.verified = true;
  return rep;
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

Report check_morphism(const TwistedRBData& src, const TwistedRBData& dst,
                      const Matrix& phi, const Matrix& psi) {
  const std::size_t n = src.dim_g();
  const std::size_t m = src.dim_v();
  if (phi.rows() != dst.dim_g() || phi.cols() != n) {
    throw ShapeError("algebra map must be dst-dim_g x src-dim_g");
  }
  if (psi.rows() != dst.dim_v() || psi.cols() != m) {
    throw ShapeError("module map must be dst-dim_v x src-dim_v");
  }
  const std::string note = degenerate_note(n, m);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = phi.apply(src.algebra().bracket_of(i, j));
      Vector rhs = dst.algebra().bracket_of(phi.col(i), phi.col(j));
      if (lhs != rhs) {
        return fail_report("bracket-morphism", {i, j}, std::move(lhs),
                           std::move(rhs), note);
      }
    }
  }
  {
    Matrix lhs = phi * src.k;
    Matrix rhs = dst.k * psi;
    if (lhs != rhs) {
      return fail_report("operator-intertwine", {}, flatten(lhs), flatten(rhs),
                         note);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Matrix dst_l = dst.rep.rho_l_of(phi.col(i));
    Matrix dst_r = dst.rep.rho_r_of(phi.col(i));
    for (std::size_t b = 0; b < m; ++b) {
      Vector psi_ub = psi.col(b);
      Vector lhs = psi.apply(src.rep.rho_l[i].apply(unit_vector(m, b)));
      Vector rhs = dst_l.apply(psi_ub);
      if (lhs != rhs) {
        return fail_report("left-equivariance", {i, b}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = psi.apply(src.rep.rho_r[i].apply(unit_vector(m, b)));
      rhs = dst_r.apply(psi_ub);
      if (lhs != rhs) {
        return fail_report("right-equivariance", {i, b}, std::move(lhs),
                           std::move(rhs), note);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = psi.apply(src.twist.at(i, j));
      Vector rhs = dst.twist.eval(phi.col(i), phi.col(j));
      if (lhs != rhs) {
        return fail_report("twist-compat", {i, j}, std::move(lhs),
                           std::move(rhs), note);
      }
    }
  }
  return pass_report(note);
}

SemidirectShift psi_h_isomorphism(const Representation& r, const Bicochain& h,
                                  const Matrix& b) {
  if (b.rows() != r.dim_v || b.cols() != r.algebra.dim) {
    throw ShapeError("cochain matrix must be dim_v x dim_g");
  }
  const std::size_t n = r.algebra.dim;
  const std::size_t m = r.dim_v;
  SemidirectShift out;
  out.source = twisted_semidirect(r, h);
  Cochain shifted = to_cochain(h) + coboundary(r, matrix_to_cochain(b));
  out.twist = to_bicochain(shifted);
  out.target = twisted_semidirect(r, out.twist);
  Matrix iso(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) iso.at(i, i) = 1;
  for (std::size_t a = 0; a < m; ++a) {
    iso.at(n + a, n + a) = 1;
    for (std::size_t i = 0; i < n; ++i) iso.at(n + a, i) = -b.at(a, i);
  }
  out.iso = std::move(iso);
  for (std::size_t p = 0; p < n + m; ++p) {
    for (std::size_t q = 0; q < n + m; ++q) {
      Vector lhs = out.iso.apply(out.source.bracket_of(p, q));
      Vector rhs = out.target.bracket_of(out.iso.col(p), out.iso.col(q));
      if (lhs != rhs) {
        throw std::logic_error("semidirect shift failed to intertwine");
      }
    }
  }
  return out;
}

std::optional<TwistedRBData> shift_by_cochain(const TwistedRBData& d,
                                              const Matrix& b) {
  ensure_twisted_rb(d);
  if (b.rows() != d.dim_v() || b.cols() != d.dim_g()) {
    throw ShapeError("cochain matrix must be dim_v x dim_g");
  }
  const std::size_t m = d.dim_v();
  Matrix inner = Matrix::identity(m) - b * d.k;
  auto inv = invert(inner);
  if (!inv) return std::nullopt;
  Cochain shifted = to_cochain(d.twist) + coboundary(d.rep, matrix_to_cochain(b));
  TwistedRBData out =
      make_twisted_rb(d.rep, to_bicochain(shifted), d.k * (*inv));
  if (!check_twisted_rb(out)) {
    throw std::logic_error("shifted operator failed the check");
  }
  out.verified = true;
  return out;
}

std::optional<TwistedRBData> gauge_transform(const TwistedRBData& d,
                                             const Matrix& b) {
  ensure_twisted_rb(d);
  if (b.rows() != d.dim_v() || b.cols() != d.dim_g()) {
    throw ShapeError("cochain matrix must be dim_v x dim_g");
  }
  if (Report c = is_cocycle(d.rep, matrix_to_cochain(b)); !c) {
    throw PreconditionError("gauge cochain is not a degree-1 cocycle");
  }
  const std::size_t m = d.dim_v();
  Matrix inner = Matrix::identity(m) + b * d.k;
  auto inv = invert(inner);
  if (!inv) return std::nullopt;
  TwistedRBData out = make_twisted_rb(d.rep, d.twist, d.k * (*inv));
  if (!check_twisted_rb(out)) {
    throw std::logic_error("gauge-transformed operator failed the check");
  }
  out.verified = true;
  return out;
}

Report gauge_bracket_isomorphism(const TwistedRBData& d, const Matrix& b) {
  auto gauged = gauge_transform(d, b);
  if (!gauged) {
    throw PreconditionError("gauge cochain is not admissible for this operator");
  }
  const std::size_t m = d.dim_v();
  Matrix t = Matrix::identity(m) + b * d.k;
  LeibnizAlgebra before = induced_bracket(d);
  LeibnizAlgebra after = induced_bracket(*gauged);
  const std::string note = degenerate_note(d.dim_g(), m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      Vector lhs = t.apply(before.bracket_of(a, c));
      Vector rhs = after.bracket_of(t.col(a), t.col(c));
      if (lhs != rhs) {
        return fail_report("gauge-bracket-isomorphism", {a, c}, std::move(lhs),
                           std::move(rhs), note);
      }
    }
  }
  return pass_report(note);
}

Cochain dk_coboundary(const TwistedRBData& d, const Cochain& f) {
  ensure_twisted_rb(d);
  const std::size_t n_g = d.dim_g();
  const std::size_t m = d.dim_v();
  if (f.arg_dim() != m || f.val_dim() != n_g) {
    throw ShapeError("operator cochain must map module tuples to the algebra");
  }
  const std::size_t n = f.degree();
  Cochain out(n + 1, m, n_g);
  if (m == 0) return out;

  // structure constants of the bracket the operator induces on the module,
  // needed for the argument-substitution terms
  std::vector<Vector> ind(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    for (std::size_t b = 0; b < m; ++b) {
      Vector kb = d.k.col(b);
      Vector v = d.rep.rho_l_of(ka).apply(unit_vector(m, b));
      v = vec_add(v, d.rep.rho_r_of(kb).apply(unit_vector(m, a)));
      v = vec_add(v, d.twist.eval(ka, kb));
      ind[a * m + b] = std::move(v);
    }
  }

  std::vector<std::size_t> t(n + 1, 0);
  std::vector<std::size_t> sub(n);
  do {
    const std::size_t out_idx = out.tuple_index(t);
    Vector acc(n_g);

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t p = 0, q = 0; p < n + 1; ++p) {
        if (p != i - 1) sub[q++] = t[p];
      }
      Vector fv = f.value(f.tuple_index(sub));
      Vector ku = d.k.col(t[i - 1]);
      const Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
      // [Ku_i, f(..)] - K(rho_r(f(..)) u_i) - K h(Ku_i, f(..))
      vec_axpy(acc, sign, d.algebra().bracket_of(ku, fv));
      vec_axpy(acc, -sign,
               d.k.apply(d.rep.rho_r_of(fv).apply(unit_vector(m, t[i - 1]))));
      vec_axpy(acc, -sign, d.k.apply(d.twist.eval(ku, fv)));
    }

    {
      for (std::size_t p = 0; p < n; ++p) sub[p] = t[p];
      Vector fv = f.value(f.tuple_index(sub));
      Vector ku = d.k.col(t[n]);
      const Rational tail_sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
      // (-1)^{n+1} [f(..), Ku] + (-1)^n K(rho_l(f(..)) u) + (-1)^n K h(f(..), Ku)
      vec_axpy(acc, -tail_sign, d.algebra().bracket_of(fv, ku));
      vec_axpy(acc, tail_sign,
               d.k.apply(d.rep.rho_l_of(fv).apply(unit_vector(m, t[n]))));
      vec_axpy(acc, tail_sign, d.k.apply(d.twist.eval(fv, ku)));
    }

    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        const Vector& w = ind[t[i - 1] * m + t[j - 1]];
        for (std::size_t k = 0; k < m; ++k) {
          if (w[k] == 0) continue;
          for (std::size_t p = 0, q = 0; p < n + 1; ++p) {
            if (p == i - 1) continue;
            sub[q++] = (p == j - 1) ? k : t[p];
          }
          vec_axpy(acc, sign * w[k], f.value(f.tuple_index(sub)));
        }
      }
    }

    out.set_value(out_idx, acc);
  } while (next_tuple(t, m));
  return out;
}

CohomologyDims k_cohomology_dims(const TwistedRBData& d, std::size_t degree,
                                 std::size_t degree_cap) {
  return cohomology_dims(induced_representation(d), degree, degree_cap,
                         Degree0Convention::literal);
}

void ensure_twisted_rb(const TwistedRBData& d) {
  if (d.verified) return;
  if (Report r = check_twisted_rb(d); !r) {
    throw PreconditionError("bundle operator fails the twisted check");
  }
}

}  // namespace lra
