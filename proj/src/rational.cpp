#include "lra/rational.hpp"

#include <cctype>

#include "lra/errors.hpp"

namespace lra {

Rational rat(long num, long den) {
  if (den == 0) throw ShapeError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rat_from_string(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw ShapeError("bad rational literal: '" + std::string(s) + "'");
  }
  Rational q(std::string(num) + "/" + std::string(den));
  if (q.get_den() == 0) {
    throw ShapeError("rational with zero denominator: '" + std::string(s) + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool vec_is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Vector vec_add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch in add");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector vec_sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch in sub");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector vec_scale(const Rational& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void vec_axpy(Vector& a, const Rational& s, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch in axpy");
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

}  // namespace lra
