#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lra {

// Exact rational scalar. GMP keeps arithmetic results canonical (gcd-reduced,
// denominator > 0); the helpers below canonicalize raw constructions so every
// Rational in the library is canonical at all times.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after reduction.
// Throws ShapeError on anything else (including "1/0").
Rational rat_from_string(std::string_view s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool vec_is_zero(const Vector& v);
Vector vec_add(const Vector& a, const Vector& b);
Vector vec_sub(const Vector& a, const Vector& b);
Vector vec_scale(const Rational& s, const Vector& v);
// a += s * b, avoiding temporaries in inner loops
void vec_axpy(Vector& a, const Rational& s, const Vector& b);

}  // namespace lra
