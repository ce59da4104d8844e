#include "lra/instance_gen.hpp"

#include <utility>

#include "lra/errors.hpp"

namespace lra {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  return next() % bound;
}

long SplitMix64::range(long lo, long hi) {
  if (hi <= lo) return lo;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(span));
}

Rational gen_rational(SplitMix64& rng, const GenProfile& p) {
  const long mn = p.max_numerator < 0 ? 0 : p.max_numerator;
  const long md = p.max_denominator < 1 ? 1 : p.max_denominator;
  return rat(rng.range(-mn, mn), rng.range(1, md));
}

Matrix gen_matrix(SplitMix64& rng, const GenProfile& p, std::size_t rows,
                  std::size_t cols) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = gen_rational(rng, p);
  }
  return out;
}

namespace {

LeibnizAlgebra finish_algebra(LeibnizAlgebra g) {
  if (!check_leibniz(g)) {
    throw std::logic_error("generated product table failed the identity");
  }
  g.verified = true;
  return g;
}

// brackets of the leading basis vectors landing in the trailing ones; every
// such table satisfies the identity because all nested brackets vanish
LeibnizAlgebra gen_tail_nilpotent(SplitMix64& rng, const GenProfile& p,
                                  std::size_t dim) {
  const std::size_t head = (dim + 1) / 2;
  Tensor3 c(dim);
  for (std::size_t i = 0; i < head; ++i) {
    for (std::size_t j = 0; j < head; ++j) {
      for (std::size_t t = head; t < dim; ++t) {
        c.at(i, j, t) = gen_rational(rng, p);
      }
    }
  }
  return finish_algebra(make_algebra(dim, std::move(c)));
}

LeibnizAlgebra gen_basic_leibniz(SplitMix64& rng, const GenProfile& p,
                                 std::size_t dim) {
  const std::uint64_t which = rng.below(4);
  if (dim < 2 || which == 0) return finish_algebra(zero_algebra(dim));
  if (which == 1) {
    Tensor3 c(dim);
    c.at(0, 0, 1) = 1;  // square of the first basis vector is the second
    return finish_algebra(make_algebra(dim, std::move(c)));
  }
  if (which == 2) {
    Tensor3 c(dim);
    c.at(1, 0, 0) = 1;  // second basis vector acts on the first
    return finish_algebra(make_algebra(dim, std::move(c)));
  }
  return gen_tail_nilpotent(rng, p, dim);
}

// indices of basis vectors annihilated by and annihilating everything
std::vector<std::size_t> annihilator_indices(const LeibnizAlgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < g.dim; ++k) {
    bool ann = true;
    for (std::size_t j = 0; j < g.dim && ann; ++j) {
      ann = vec_is_zero(g.bracket_of(k, j)) && vec_is_zero(g.bracket_of(j, k));
    }
    if (ann) out.push_back(k);
  }
  return out;
}

// scalar plus a square-zero map through the annihilator; always passes the
// Nijenhuis identity
Matrix nijenhuis_for(SplitMix64& rng, const GenProfile& p,
                     const LeibnizAlgebra& g) {
  const std::size_t dim = g.dim;
  Matrix n = Matrix::identity(dim).scaled(gen_rational(rng, p));
  std::vector<std::size_t> ann = annihilator_indices(g);
  if (!ann.empty()) {
    std::vector<bool> is_ann(dim, false);
    for (std::size_t k : ann) is_ann[k] = true;
    for (std::size_t r : ann) {
      for (std::size_t c = 0; c < dim; ++c) {
        if (!is_ann[c]) n.at(r, c) = n.at(r, c) + gen_rational(rng, p);
      }
    }
  }
  return n;
}

Representation trivial_representation(const LeibnizAlgebra& g,
                                      std::size_t dim_v) {
  std::vector<Matrix> zeros(g.dim, Matrix(dim_v, dim_v));
  Representation r = make_representation(g, dim_v, zeros, zeros);
  r.verified = true;  // all-zero action satisfies every axiom
  return r;
}

}  // namespace

LeibnizAlgebra gen_leibniz(std::uint64_t seed, const GenProfile& p) {
  SplitMix64 rng(seed);
  const std::size_t dim = p.dim_g;
  const std::uint64_t which = rng.below(6);
  if (which < 4 || dim < 2) return gen_basic_leibniz(rng, p, dim);
  if (which == 4) {
    LeibnizAlgebra base = gen_basic_leibniz(rng, p, dim);
    Matrix n = nijenhuis_for(rng, p, base);
    LeibnizAlgebra out = deformed_bracket(base, n);
    return finish_algebra(std::move(out));
  }
  // twisted semidirect sum of a smaller algebra with a trivially-acted
  // module, twisted by the differential of a random degree-1 cochain
  const std::size_t head = dim - dim / 2;
  GenProfile sub = p;
  sub.dim_g = head;
  LeibnizAlgebra base = gen_basic_leibniz(rng, sub, head);
  Representation r = trivial_representation(base, dim - head);
  Matrix b = gen_matrix(rng, p, dim - head, head);
  Cochain db = coboundary(r, matrix_to_cochain(b));
  return finish_algebra(twisted_semidirect(r, to_bicochain(db)));
}

Representation gen_representation(const LeibnizAlgebra& g, std::uint64_t seed,
                                  const GenProfile& p) {
  ensure_leibniz(g);
  SplitMix64 rng(seed);
  if (rng.below(2) == 0) return trivial_representation(g, p.dim_v);
  return regular_representation(g);
}

Matrix gen_nijenhuis(const LeibnizAlgebra& g, std::uint64_t seed,
                     const GenProfile& p) {
  ensure_leibniz(g);
  SplitMix64 rng(seed);
  Matrix n = nijenhuis_for(rng, p, g);
  if (!check_nijenhuis(g, n)) {
    throw std::logic_error("generated operator failed the Nijenhuis identity");
  }
  return n;
}

Cochain gen_cocycle(const Representation& r, std::size_t degree,
                    std::uint64_t seed, Degree0Convention conv) {
  ensure_representation(r);
  SplitMix64 rng(seed);
  const GenProfile coeffs;
  Matrix d = coboundary_matrix(r, degree, conv);
  std::vector<Vector> basis = kernel_basis(d);
  Cochain out(degree, r.algebra.dim, r.dim_v);
  for (const Vector& v : basis) {
    const Rational c = gen_rational(rng, coeffs);
    if (c == 0) continue;
    for (std::size_t f = 0; f < v.size(); ++f) {
      if (v[f] != 0) out.entry(f) += c * v[f];
    }
  }
  return out;
}

TwistedRBData gen_twisted_rb(std::uint64_t seed, const GenProfile& p) {
  SplitMix64 rng(seed);
  const std::uint64_t which = rng.below(3);
  if (which == 0) {
    // zero operator with a random cocycle twist
    LeibnizAlgebra g = gen_leibniz(rng.next(), p);
    Representation r = gen_representation(g, rng.next(), p);
    Bicochain twist = to_bicochain(gen_cocycle(r, 2, rng.next()));
    const std::size_t n = g.dim;
    const std::size_t m = r.dim_v;
    TwistedRBData d =
        make_twisted_rb(std::move(r), std::move(twist), Matrix(n, m));
    if (!check_twisted_rb(d)) {
      throw std::logic_error("zero operator failed the twisted check");
    }
    d.verified = true;
    return d;
  }
  if (which == 1) {
    // inverse of an invertible degree-1 cochain over a square module
    LeibnizAlgebra g = gen_leibniz(rng.next(), p);
    Representation r = rng.below(2) == 0 ? trivial_representation(g, g.dim)
                                         : regular_representation(g);
    Matrix h = gen_matrix(rng, p, g.dim, g.dim);
    for (long t = 0;; ++t) {
      Matrix cand = h + Matrix::identity(g.dim).scaled(rat(t));
      if (invert(cand)) {
        h = std::move(cand);
        break;
      }
    }
    return from_invertible_cochain(r, h);
  }
  LeibnizAlgebra g = gen_leibniz(rng.next(), p);
  return from_nijenhuis(g, gen_nijenhuis(g, rng.next(), p));
}

TwistedRBData gen_failing_twisted_rb(std::uint64_t seed, const GenProfile& p) {
  SplitMix64 rng(seed);
  for (int round = 0; round < 8; ++round) {
    TwistedRBData base = gen_twisted_rb(rng.next(), p);
    const std::size_t n = base.dim_g();
    const std::size_t m = base.dim_v();
    if (n == 0 || m == 0) continue;  // every operator passes vacuously
    for (int attempt = 0; attempt < 8; ++attempt) {
      Matrix k = base.k;
      Rational delta = gen_rational(rng, p);
      if (delta == 0) delta = 1;
      k.at(rng.below(n), rng.below(m)) += delta;
      TwistedRBData cand = make_twisted_rb(base.rep, base.twist, std::move(k));
      if (!check_twisted_rb(cand)) return cand;
    }
  }
  // some bases accept every operator (for instance, all-zero structure), so
  // fall back to a fixed witness: the identity on a solvable algebra with
  // its regular module and no twist overshoots by a factor of two
  Tensor3 c(2);
  c.at(1, 0, 0) = 1;
  LeibnizAlgebra g = finish_algebra(make_algebra(2, std::move(c)));
  Representation r = regular_representation(g);
  TwistedRBData d = make_twisted_rb(std::move(r), zero_bicochain(2, 2),
                                    Matrix::identity(2));
  if (check_twisted_rb(d)) {
    throw std::logic_error("fallback witness unexpectedly passed");
  }
  return d;
}

}  // namespace lra
