// Small fixture builders shared by the test suites.
#pragma once

#include <initializer_list>
#include <vector>

#include "lra/leibniz.hpp"

namespace lra::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(rat(x));
  return v;
}

inline Matrix mat(std::size_t rows, std::size_t cols,
                  std::initializer_list<long> entries) {
  Matrix m(rows, cols);
  std::size_t f = 0;
  for (long e : entries) {
    m.at(f / cols, f % cols) = rat(e);
    ++f;
  }
  return m;
}

// [e0, e0] = e1, everything else zero
inline LeibnizAlgebra nilpotent2() {
  Tensor3 c(2);
  c.at(0, 0, 1) = rat(1);
  return make_algebra(2, std::move(c));
}

// [e1, e0] = e0, everything else zero (left-Leibniz, not Lie)
inline LeibnizAlgebra solvable2() {
  Tensor3 c(2);
  c.at(1, 0, 0) = rat(1);
  return make_algebra(2, std::move(c));
}

// one-generator non-example: [e0, e0] = e0 breaks the bracket identity
inline LeibnizAlgebra bad1() {
  Tensor3 c(1);
  c.at(0, 0, 0) = rat(1);
  return make_algebra(1, std::move(c));
}

}  // namespace lra::testing
