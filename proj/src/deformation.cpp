#include "lra/deformation.hpp"

#include <utility>

#include "lra/errors.hpp"

namespace lra {

namespace {

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j));
  }
  return out;
}

bool same_base(const TwistedRBData& a, const TwistedRBData& b) {
  const std::size_t n = a.dim_g();
  const std::size_t m = a.dim_v();
  if (n != b.dim_g() || m != b.dim_v()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.algebra().bracket.at(i, j, k) != b.algebra().bracket.at(i, j, k))
          return false;
      }
      if (a.twist.at(i, j) != b.twist.at(i, j)) return false;
    }
    if (a.rep.rho_l[i] != b.rep.rho_l[i]) return false;
    if (a.rep.rho_r[i] != b.rep.rho_r[i]) return false;
  }
  return a.k == b.k;
}

// matrix of y |-> [x, y]
Matrix ad_matrix(const LeibnizAlgebra& g, const Vector& x) {
  Matrix out(g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j) {
    Vector c = g.bracket_of(x, unit_vector(g.dim, j));
    for (std::size_t i = 0; i < g.dim; ++i) out.at(i, j) = c[i];
  }
  return out;
}

// matrix of u |-> rho_l(x) u + h(x, Ku)
Matrix module_shift_matrix(const TwistedRBData& d, const Vector& x) {
  const std::size_t m = d.dim_v();
  Matrix rho = d.rep.rho_l_of(x);
  Matrix out(m, m);
  for (std::size_t b = 0; b < m; ++b) {
    Vector c = vec_add(rho.apply(unit_vector(m, b)),
                       d.twist.eval(x, d.k.col(b)));
    for (std::size_t i = 0; i < m; ++i) out.at(i, b) = c[i];
  }
  return out;
}

// degree-0 cochain of the operator complex holding x
Cochain element_cochain(const TwistedRBData& d, const Vector& x) {
  Cochain f(0, d.dim_v(), d.dim_g());
  f.set_value(0, x);
  return f;
}

// the seven conditions on an element x that involve neither deformation term;
// shared between equivalence and Nijenhuis-element checks
Report structural_conditions(const TwistedRBData& d, const Vector& x) {
  const std::size_t n = d.dim_g();
  const std::size_t m = d.dim_v();
  const LeibnizAlgebra& g = d.algebra();
  const std::string note = degenerate_note(n, m);
  Matrix xl = d.rep.rho_l_of(x);

  for (std::size_t j = 0; j < n; ++j) {
    Vector xj = g.bracket_of(x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) {
      Vector lhs = g.bracket_of(xj, g.bracket_of(x, unit_vector(n, k)));
      if (!vec_is_zero(lhs)) {
        return fail_report("phi-morphism-quadratic", {j, k}, std::move(lhs),
                           zero_vector(n), note);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vector xi = g.bracket_of(x, unit_vector(n, i));
    Matrix l_of_xi = d.rep.rho_l_of(xi);
    Matrix r_of_xi = d.rep.rho_r_of(xi);
    for (std::size_t b = 0; b < m; ++b) {
      Vector ub = unit_vector(m, b);
      Vector h_x_kub = d.twist.eval(x, d.k.col(b));
      Vector w = vec_add(xl.apply(ub), h_x_kub);

      Vector lhs = d.twist.eval(x, d.k.apply(d.rep.rho_l[i].apply(ub)));
      Vector rhs = d.rep.rho_l[i].apply(h_x_kub);
      if (lhs != rhs) {
        return fail_report("left-equivariance-linear", {i, b}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = l_of_xi.apply(w);
      if (!vec_is_zero(lhs)) {
        return fail_report("left-equivariance-quadratic", {i, b},
                           std::move(lhs), zero_vector(m), note);
      }
      lhs = d.twist.eval(x, d.k.apply(d.rep.rho_r[i].apply(ub)));
      rhs = d.rep.rho_r[i].apply(h_x_kub);
      if (lhs != rhs) {
        return fail_report("right-equivariance-linear", {i, b}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = r_of_xi.apply(w);
      if (!vec_is_zero(lhs)) {
        return fail_report("right-equivariance-quadratic", {i, b},
                           std::move(lhs), zero_vector(m), note);
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(n, i);
    Vector xi = g.bracket_of(x, ei);
    for (std::size_t j = 0; j < n; ++j) {
      Vector ej = unit_vector(n, j);
      Vector hij = d.twist.at(i, j);
      Vector lhs =
          vec_add(xl.apply(hij), d.twist.eval(x, d.k.apply(hij)));
      Vector rhs = vec_add(d.twist.eval(xi, ej),
                           d.twist.eval(ei, g.bracket_of(x, ej)));
      if (lhs != rhs) {
        return fail_report("twist-compat-linear", {i, j}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = d.twist.eval(xi, g.bracket_of(x, ej));
      if (!vec_is_zero(lhs)) {
        return fail_report("twist-compat-quadratic", {i, j}, std::move(lhs),
                           zero_vector(m), note);
      }
    }
  }
  return pass_report(note);
}

}  // namespace

const Matrix& TruncatedFormalDeformation::term(std::size_t i) const {
  if (i == 0) return base.k;
  return terms.at(i - 1);
}

LinearDeformation make_linear_deformation(TwistedRBData base, Matrix k1) {
  ensure_twisted_rb(base);
  base.verified = true;
  if (k1.rows() != base.dim_g() || k1.cols() != base.dim_v()) {
    throw ShapeError("deformation term must be dim_g x dim_v");
  }
  LinearDeformation ld;
  ld.base = std::move(base);
  ld.k1 = std::move(k1);
  return ld;
}

TruncatedFormalDeformation make_formal_deformation(TwistedRBData base,
                                                   std::vector<Matrix> terms) {
  ensure_twisted_rb(base);
  base.verified = true;
  for (const Matrix& t : terms) {
    if (t.rows() != base.dim_g() || t.cols() != base.dim_v()) {
      throw ShapeError("every deformation term must be dim_g x dim_v");
    }
  }
  TruncatedFormalDeformation fd;
  fd.base = std::move(base);
  fd.terms = std::move(terms);
  return fd;
}

Report check_linear_deformation(const LinearDeformation& ld) {
  const TwistedRBData& d = ld.base;
  const std::size_t n = d.dim_g();
  const std::size_t m = d.dim_v();
  const std::string note = degenerate_note(n, m);
  const LeibnizAlgebra& g = d.algebra();
  for (std::size_t a = 0; a < m; ++a) {
    Vector ka = d.k.col(a);
    Vector k1a = ld.k1.col(a);
    Vector ua = unit_vector(m, a);
    for (std::size_t b = 0; b < m; ++b) {
      Vector kb = d.k.col(b);
      Vector k1b = ld.k1.col(b);
      Vector ub = unit_vector(m, b);

      Vector inner0 = vec_add(d.rep.rho_l_of(ka).apply(ub),
                              d.rep.rho_r_of(kb).apply(ua));
      inner0 = vec_add(inner0, d.twist.eval(ka, kb));
      Vector inner1 = vec_add(d.rep.rho_l_of(k1a).apply(ub),
                              d.rep.rho_r_of(k1b).apply(ua));
      inner1 = vec_add(inner1, d.twist.eval(k1a, kb));
      inner1 = vec_add(inner1, d.twist.eval(ka, k1b));
      Vector inner2 = d.twist.eval(k1a, k1b);

      Vector lhs = vec_add(g.bracket_of(k1a, kb), g.bracket_of(ka, k1b));
      Vector rhs = vec_add(d.k.apply(inner1), ld.k1.apply(inner0));
      if (lhs != rhs) {
        return fail_report("linear-term", {a, b}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = g.bracket_of(k1a, k1b);
      rhs = vec_add(ld.k1.apply(inner1), d.k.apply(inner2));
      if (lhs != rhs) {
        return fail_report("quadratic-term", {a, b}, std::move(lhs),
                           std::move(rhs), note);
      }
      lhs = ld.k1.apply(inner2);
      if (!vec_is_zero(lhs)) {
        return fail_report("cubic-term", {a, b}, std::move(lhs),
                           zero_vector(n), note);
      }
    }
  }
  return pass_report(note);
}

Report check_formal_deformation(const TruncatedFormalDeformation& fd) {
  const TwistedRBData& d = fd.base;
  const std::size_t n_g = d.dim_g();
  const std::size_t m = d.dim_v();
  const std::size_t order = fd.order();
  const std::string note = degenerate_note(n_g, m);
  const LeibnizAlgebra& g = d.algebra();
  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t a = 0; a < m; ++a) {
      Vector ua = unit_vector(m, a);
      for (std::size_t b = 0; b < m; ++b) {
        Vector ub = unit_vector(m, b);
        Vector lhs = zero_vector(n_g);
        Vector rhs = zero_vector(n_g);
        for (std::size_t i = 0; i <= n; ++i) {
          const Matrix& ki = fd.term(i);
          const Matrix& kj = fd.term(n - i);
          lhs = vec_add(lhs, g.bracket_of(ki.col(a), kj.col(b)));
          Vector inner = vec_add(d.rep.rho_l_of(kj.col(a)).apply(ub),
                                 d.rep.rho_r_of(kj.col(b)).apply(ua));
          rhs = vec_add(rhs, ki.apply(inner));
          for (std::size_t j = 0; i + j <= n; ++j) {
            const Matrix& kk = fd.term(n - i - j);
            rhs = vec_add(rhs, ki.apply(d.twist.eval(fd.term(j).col(a),
                                                     kk.col(b))));
          }
        }
        if (lhs != rhs) {
          return fail_report("formal-order", {n, a, b}, std::move(lhs),
                             std::move(rhs), note);
        }
      }
    }
  }
  return pass_report(note);
}

Report check_equivalence(const LinearDeformation& a,
                         const LinearDeformation& b, const Vector& x) {
  if (x.size() != a.base.dim_g()) {
    throw ShapeError("element must live in the algebra");
  }
  if (!same_base(a.base, b.base)) {
    throw PreconditionError("deformations do not share a base bundle");
  }
  const TwistedRBData& d = a.base;
  const std::size_t m = d.dim_v();
  const LeibnizAlgebra& g = d.algebra();
  const std::string note = degenerate_note(d.dim_g(), m);

  if (Report s = structural_conditions(d, x); !s) return s;

  Matrix xl = d.rep.rho_l_of(x);
  for (std::size_t c = 0; c < m; ++c) {
    Vector uc = unit_vector(m, c);
    Vector w = vec_add(xl.apply(uc), d.twist.eval(x, d.k.col(c)));
    Vector lhs = vec_add(a.k1.col(c), g.bracket_of(x, d.k.col(c)));
    Vector rhs = vec_add(d.k.apply(w), b.k1.col(c));
    if (lhs != rhs) {
      return fail_report("intertwine-linear", {c}, std::move(lhs),
                         std::move(rhs), note);
    }
    lhs = g.bracket_of(x, a.k1.col(c));
    rhs = b.k1.apply(w);
    if (lhs != rhs) {
      return fail_report("intertwine-quadratic", {c}, std::move(lhs),
                         std::move(rhs), note);
    }
  }

  Cochain dkx = dk_coboundary(d, element_cochain(d, x));
  if (cochain_to_matrix(dkx) != a.k1 - b.k1) {
    throw std::logic_error(
        "equivalence held but the terms do not differ by the differential");
  }
  return pass_report(note);
}

Report check_formal_equivalence(const TruncatedFormalDeformation& a,
                                const TruncatedFormalDeformation& b,
                                const EquivalenceDatum& e, std::size_t order) {
  const TwistedRBData& d = a.base;
  const std::size_t n_g = d.dim_g();
  const std::size_t m = d.dim_v();
  if (e.x.size() != n_g) throw ShapeError("element must live in the algebra");
  for (const Matrix& p : e.phi_higher) {
    if (p.rows() != n_g || p.cols() != n_g) {
      throw ShapeError("algebra corrections must be dim_g square");
    }
  }
  for (const Matrix& p : e.psi_higher) {
    if (p.rows() != m || p.cols() != m) {
      throw ShapeError("module corrections must be dim_v square");
    }
  }
  if (!same_base(a.base, b.base)) {
    throw PreconditionError("deformations do not share a base bundle");
  }
  const LeibnizAlgebra& g = d.algebra();
  const std::string note = degenerate_note(n_g, m);

  const Matrix zero_phi(n_g, n_g);
  const Matrix zero_psi(m, m);
  const Matrix zero_k(n_g, m);
  const Matrix phi1 = ad_matrix(g, e.x);
  const Matrix psi1 = module_shift_matrix(d, e.x);
  const Matrix id_phi = Matrix::identity(n_g);
  const Matrix id_psi = Matrix::identity(m);
  auto phi = [&](std::size_t i) -> const Matrix& {
    if (i == 0) return id_phi;
    if (i == 1) return phi1;
    return i - 2 < e.phi_higher.size() ? e.phi_higher[i - 2] : zero_phi;
  };
  auto psi = [&](std::size_t i) -> const Matrix& {
    if (i == 0) return id_psi;
    if (i == 1) return psi1;
    return i - 2 < e.psi_higher.size() ? e.psi_higher[i - 2] : zero_psi;
  };
  auto k_of = [&](const TruncatedFormalDeformation& fd,
                  std::size_t i) -> const Matrix& {
    return i <= fd.order() ? fd.term(i) : zero_k;
  };

  for (std::size_t n = 0; n <= order; ++n) {
    for (std::size_t j = 0; j < n_g; ++j) {
      for (std::size_t k = 0; k < n_g; ++k) {
        Vector lhs = phi(n).apply(g.bracket_of(j, k));
        Vector rhs = zero_vector(n_g);
        for (std::size_t p = 0; p <= n; ++p) {
          rhs = vec_add(rhs,
                        g.bracket_of(phi(p).col(j), phi(n - p).col(k)));
        }
        if (lhs != rhs) {
          return fail_report("bracket-morphism", {n, j, k}, std::move(lhs),
                             std::move(rhs), note);
        }
      }
    }
    {
      Matrix lhs(n_g, m), rhs(n_g, m);
      for (std::size_t p = 0; p <= n; ++p) {
        lhs = lhs + phi(p) * k_of(a, n - p);
        rhs = rhs + k_of(b, p) * psi(n - p);
      }
      if (lhs != rhs) {
        return fail_report("operator-intertwine", {n}, flatten(lhs),
                           flatten(rhs), note);
      }
    }
    for (std::size_t i = 0; i < n_g; ++i) {
      for (std::size_t c = 0; c < m; ++c) {
        Vector ub = unit_vector(m, c);
        Vector lhs = psi(n).apply(d.rep.rho_l[i].apply(ub));
        Vector rhs = zero_vector(m);
        for (std::size_t p = 0; p <= n; ++p) {
          rhs = vec_add(rhs, d.rep.rho_l_of(phi(p).col(i))
                                 .apply(psi(n - p).col(c)));
        }
        if (lhs != rhs) {
          return fail_report("left-equivariance", {n, i, c}, std::move(lhs),
                             std::move(rhs), note);
        }
        lhs = psi(n).apply(d.rep.rho_r[i].apply(ub));
        rhs = zero_vector(m);
        for (std::size_t p = 0; p <= n; ++p) {
          rhs = vec_add(rhs, d.rep.rho_r_of(phi(p).col(i))
                                 .apply(psi(n - p).col(c)));
        }
        if (lhs != rhs) {
          return fail_report("right-equivariance", {n, i, c}, std::move(lhs),
                             std::move(rhs), note);
        }
      }
    }
    for (std::size_t i = 0; i < n_g; ++i) {
      for (std::size_t j = 0; j < n_g; ++j) {
        Vector lhs = psi(n).apply(d.twist.at(i, j));
        Vector rhs = zero_vector(m);
        for (std::size_t p = 0; p <= n; ++p) {
          rhs = vec_add(rhs, d.twist.eval(phi(p).col(i), phi(n - p).col(j)));
        }
        if (lhs != rhs) {
          return fail_report("twist-compat", {n, i, j}, std::move(lhs),
                             std::move(rhs), note);
        }
      }
    }
  }
  return pass_report(note);
}

Report check_nijenhuis_element(const TwistedRBData& d, const Vector& x) {
  if (x.size() != d.dim_g()) {
    throw ShapeError("element must live in the algebra");
  }
  ensure_twisted_rb(d);
  const std::size_t m = d.dim_v();
  const std::string note = degenerate_note(d.dim_g(), m);
  Representation ir = induced_representation(d);
  for (std::size_t a = 0; a < m; ++a) {
    Vector lhs = d.algebra().bracket_of(x, ir.rho_r[a].apply(x));
    if (!vec_is_zero(lhs)) {
      return fail_report("nijenhuis-element-bracket", {a}, std::move(lhs),
                         zero_vector(d.dim_g()), note);
    }
  }
  return structural_conditions(d, x);
}

TruncatedFormalDeformation trivialization_step(
    const TruncatedFormalDeformation& fd, const Vector& x) {
  const TwistedRBData& d = fd.base;
  const std::size_t n_g = d.dim_g();
  const std::size_t m = d.dim_v();
  if (x.size() != n_g) throw ShapeError("element must live in the algebra");
  if (fd.order() < 1) {
    throw PreconditionError("trivialization needs at least one term");
  }
  if (Report r = check_formal_deformation(fd); !r) {
    throw PreconditionError("family fails the order-by-order identity");
  }
  if (Report r = check_nijenhuis_element(d, x); !r) {
    throw PreconditionError("element fails the Nijenhuis conditions");
  }
  Cochain dkx = dk_coboundary(d, element_cochain(d, x));
  if (cochain_to_matrix(dkx) != fd.terms[0].scaled(-1)) {
    throw PreconditionError(
        "linear term is not the negated differential of the element");
  }

  // conjugate by the pair built from -x: phi_t = Id - t[x,-],
  // psi_t = Id - t(rho_l(x) + h(x, K-)); the module map is inverted as a
  // truncated geometric series, so psi_t^{-1} has t^k coefficient B^k
  const Matrix a_mat = ad_matrix(d.algebra(), x);
  const Matrix b_mat = module_shift_matrix(d, x);
  const std::size_t order = fd.order();
  std::vector<Matrix> b_pow(order + 1, Matrix::identity(m));
  for (std::size_t k = 1; k <= order; ++k) b_pow[k] = b_pow[k - 1] * b_mat;

  std::vector<Matrix> out_terms(order, Matrix(n_g, m));
  for (std::size_t n = 1; n <= order; ++n) {
    Matrix acc(n_g, m);
    for (std::size_t j = 0; j <= n; ++j) {
      const std::size_t k = n - j;
      // phi_0 K_j B^k contribution
      if (j <= order) acc = acc + fd.term(j) * b_pow[k];
      // phi_1 = -A at t^1: A K_j B^{k-1} subtracted
      if (k >= 1 && j <= order) acc = acc - a_mat * (fd.term(j) * b_pow[k - 1]);
    }
    out_terms[n - 1] = std::move(acc);
  }

  TruncatedFormalDeformation out =
      make_formal_deformation(fd.base, std::move(out_terms));
  if (!out.terms[0].is_zero()) {
    throw std::logic_error("conjugation failed to cancel the linear term");
  }
  if (!check_formal_deformation(out)) {
    throw std::logic_error("conjugated family fails the identity");
  }
  out.verified = true;
  return out;
}

}  // namespace lra
