#include "lra/cochain.hpp"

#include "lra/errors.hpp"

namespace lra {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

// lexicographic odometer over tuples with entries in [0, base)
bool next_tuple(std::vector<std::size_t>& t, std::size_t base) {
  for (std::size_t pos = t.size(); pos-- > 0;) {
    if (++t[pos] < base) return true;
    t[pos] = 0;
  }
  return false;
}

}  // namespace

Cochain::Cochain(std::size_t degree, std::size_t arg_dim, std::size_t val_dim)
    : degree_(degree),
      arg_dim_(arg_dim),
      val_dim_(val_dim),
      tuple_count_(pow_size(arg_dim, degree)),
      data_(tuple_count_ * val_dim) {}

std::size_t Cochain::tuple_index(const std::vector<std::size_t>& t) const {
  if (t.size() != degree_) throw ShapeError("tuple length does not match degree");
  std::size_t idx = 0;
  for (std::size_t p : t) {
    if (p >= arg_dim_) throw ShapeError("tuple entry out of range");
    idx = idx * arg_dim_ + p;
  }
  return idx;
}

Vector Cochain::value(std::size_t tuple_idx) const {
  Vector out(val_dim_);
  for (std::size_t a = 0; a < val_dim_; ++a) out[a] = data_[tuple_idx * val_dim_ + a];
  return out;
}

void Cochain::set_value(std::size_t tuple_idx, const Vector& v) {
  if (v.size() != val_dim_) throw ShapeError("cochain value size mismatch");
  for (std::size_t a = 0; a < val_dim_; ++a) data_[tuple_idx * val_dim_ + a] = v[a];
}

void Cochain::add_to_value(std::size_t tuple_idx, const Rational& s,
                           const Vector& v) {
  if (s == 0) return;
  for (std::size_t a = 0; a < val_dim_; ++a) data_[tuple_idx * val_dim_ + a] += s * v[a];
}

bool Cochain::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (degree_ != o.degree_ || arg_dim_ != o.arg_dim_ || val_dim_ != o.val_dim_) {
    throw ShapeError("cochain shape mismatch in add");
  }
  Cochain out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
  if (degree_ != o.degree_ || arg_dim_ != o.arg_dim_ || val_dim_ != o.val_dim_) {
    throw ShapeError("cochain shape mismatch in sub");
  }
  Cochain out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Cochain Cochain::scaled(const Rational& s) const {
  Cochain out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Cochain coboundary(const Representation& r, const Cochain& f,
                   Degree0Convention conv) {
  const std::size_t d = r.algebra.dim;
  const std::size_t m = r.dim_v;
  if (f.arg_dim() != d || f.val_dim() != m) {
    throw ShapeError("cochain shape does not match the representation");
  }
  const std::size_t n = f.degree();
  Cochain out(n + 1, d, m);
  if (d == 0) return out;

  std::vector<std::size_t> t(n + 1, 0);
  std::vector<std::size_t> sub(n >= 1 ? n : 0);
  do {
    const std::size_t out_idx = out.tuple_index(t);
    Vector acc(m);

    // sum_{i=1..n} (-1)^{i+1} rho_l(x_i) f(.. x_i-hat ..)
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t p = 0, q = 0; p < n + 1; ++p) {
        if (p != i - 1) sub[q++] = t[p];
      }
      Vector fv = f.value(f.tuple_index(sub));
      Vector acted = r.rho_l[t[i - 1]].apply(fv);
      vec_axpy(acc, (i % 2 == 1) ? Rational(1) : Rational(-1), acted);
    }

    // (-1)^{n+1} rho_r(x_{n+1}) f(x_1 .. x_n)
    {
      for (std::size_t p = 0; p < n; ++p) sub[p] = t[p];
      Vector fv = f.value(f.tuple_index(sub));
      Vector acted = r.rho_r[t[n]].apply(fv);
      vec_axpy(acc, (n % 2 == 0) ? Rational(-1) : Rational(1), acted);
      if (n == 0 && conv == Degree0Convention::left_minus_right) {
        vec_axpy(acc, 1, r.rho_l[t[0]].apply(fv));
      }
    }

    // sum_{i<j} (-1)^i f(.. x_i-hat .., [x_i, x_j] at slot j, ..)
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n + 1; ++j) {
        const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
        for (std::size_t k = 0; k < d; ++k) {
          const Rational& coeff = r.algebra.bracket.at(t[i - 1], t[j - 1], k);
          if (coeff == 0) continue;
          for (std::size_t p = 0, q = 0; p < n + 1; ++p) {
            if (p == i - 1) continue;
            sub[q++] = (p == j - 1) ? k : t[p];
          }
          Vector fv = f.value(f.tuple_index(sub));
          vec_axpy(acc, sign * coeff, fv);
        }
      }
    }

    out.set_value(out_idx, acc);
  } while (next_tuple(t, d));
  return out;
}

Matrix coboundary_matrix(const Representation& r, std::size_t degree,
                         Degree0Convention conv) {
  const std::size_t d = r.algebra.dim;
  const std::size_t m = r.dim_v;
  const std::size_t src = pow_size(d, degree) * m;
  const std::size_t dst = pow_size(d, degree + 1) * m;
  Matrix out(dst, src);
  Cochain basis(degree, d, m);
  for (std::size_t c = 0; c < src; ++c) {
    basis.entry(c) = 1;
    Cochain image = coboundary(r, basis, conv);
    for (std::size_t row = 0; row < dst; ++row) out.at(row, c) = image.entry(row);
    basis.entry(c) = 0;
  }
  return out;
}

namespace {

std::vector<std::size_t> unflatten_tuple(std::size_t idx, std::size_t degree,
                                         std::size_t base) {
  std::vector<std::size_t> t(degree, 0);
  for (std::size_t p = degree; p-- > 0;) {
    t[p] = idx % base;
    idx /= base;
  }
  return t;
}

}  // namespace

Report is_cocycle(const Representation& r, const Cochain& f,
                  Degree0Convention conv) {
  Cochain df = coboundary(r, f, conv);
  const std::string note = degenerate_note(r.algebra.dim, r.dim_v);
  for (std::size_t ti = 0; ti < df.tuple_count(); ++ti) {
    Vector v = df.value(ti);
    if (!vec_is_zero(v)) {
      return fail_report("cocycle", unflatten_tuple(ti, f.degree() + 1, f.arg_dim()),
                         std::move(v), Vector(df.val_dim()), note);
    }
  }
  return pass_report(note);
}

std::optional<Cochain> coboundary_preimage(const Representation& r,
                                           const Cochain& f,
                                           Degree0Convention conv) {
  if (f.arg_dim() != r.algebra.dim || f.val_dim() != r.dim_v) {
    throw ShapeError("cochain shape does not match the representation");
  }
  if (f.degree() == 0) return std::nullopt;
  const std::size_t n = f.degree() - 1;
  Matrix d = coboundary_matrix(r, n, conv);
  Vector rhs(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) rhs[i] = f.entry(i);
  auto sol = solve(d, rhs);
  if (!sol) return std::nullopt;
  Cochain g(n, f.arg_dim(), f.val_dim());
  for (std::size_t i = 0; i < sol->size(); ++i) g.entry(i) = (*sol)[i];
  return g;
}

CohomologyDims cohomology_dims(const Representation& r, std::size_t degree,
                               std::size_t degree_cap, Degree0Convention conv) {
  if (degree > degree_cap) {
    throw ShapeError("cohomology degree above the configured cap");
  }
  const std::size_t d = r.algebra.dim;
  const std::size_t m = r.dim_v;
  CohomologyDims out;
  out.degree = degree;
  const std::size_t dim_cn = pow_size(d, degree) * m;
  out.z = dim_cn - rank(coboundary_matrix(r, degree, conv));
  out.b = degree == 0 ? 0 : rank(coboundary_matrix(r, degree - 1, conv));
  out.h = out.z - out.b;
  return out;
}

Report two_cocycle_condition(const Representation& r, const Bicochain& h) {
  const std::size_t d = r.algebra.dim;
  if (h.dim_g != d || h.dim_v != r.dim_v) {
    throw ShapeError("bicochain shape does not match the representation");
  }
  const std::string note = degenerate_note(d, r.dim_v);
  for (std::size_t i = 0; i < d; ++i) {
    Vector ei = unit_vector(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      Vector ej = unit_vector(d, j);
      for (std::size_t k = 0; k < d; ++k) {
        Vector ek = unit_vector(d, k);
        Vector acc = r.rho_l[i].apply(h.at(j, k));
        acc = vec_sub(acc, r.rho_l[j].apply(h.at(i, k)));
        acc = vec_sub(acc, r.rho_r[k].apply(h.at(i, j)));
        acc = vec_sub(acc, h.eval(r.algebra.bracket_of(i, j), ek));
        acc = vec_sub(acc, h.eval(ej, r.algebra.bracket_of(i, k)));
        acc = vec_add(acc, h.eval(ei, r.algebra.bracket_of(j, k)));
        if (!vec_is_zero(acc)) {
          return fail_report("two-cocycle", {i, j, k}, std::move(acc),
                             Vector(r.dim_v), note);
        }
      }
    }
  }
  return pass_report(note);
}

Cochain to_cochain(const Bicochain& h) {
  Cochain f(2, h.dim_g, h.dim_v);
  for (std::size_t i = 0; i < h.dim_g; ++i) {
    for (std::size_t j = 0; j < h.dim_g; ++j) {
      f.set_value(i * h.dim_g + j, h.at(i, j));
    }
  }
  return f;
}

Bicochain to_bicochain(const Cochain& f) {
  if (f.degree() != 2) throw ShapeError("bicochain conversion needs degree 2");
  Bicochain h = zero_bicochain(f.arg_dim(), f.val_dim());
  for (std::size_t i = 0; i < f.arg_dim(); ++i) {
    for (std::size_t j = 0; j < f.arg_dim(); ++j) {
      h.at(i, j) = f.value(i * f.arg_dim() + j);
    }
  }
  return h;
}

Cochain matrix_to_cochain(const Matrix& m) {
  Cochain f(1, m.cols(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) f.set_value(j, m.col(j));
  return f;
}

Matrix cochain_to_matrix(const Cochain& f) {
  if (f.degree() != 1) throw ShapeError("matrix conversion needs degree 1");
  Matrix m(f.val_dim(), f.arg_dim());
  for (std::size_t j = 0; j < f.arg_dim(); ++j) {
    Vector v = f.value(j);
    for (std::size_t i = 0; i < f.val_dim(); ++i) m.at(i, j) = v[i];
  }
  return m;
}

}  // namespace lra
