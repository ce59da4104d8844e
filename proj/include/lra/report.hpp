#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lra/rational.hpp"

namespace lra {

// Outcome of a basis-tuple verification sweep. On failure the first
// counterexample encountered in lexicographic order is recorded: the name of
// the condition that broke, the basis indices, and both side values.
struct Report {
  bool holds = true;
  std::string failed_condition;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
  std::string note;

  explicit operator bool() const { return holds; }
};

Report pass_report(std::string note = "");
Report fail_report(std::string condition, std::vector<std::size_t> indices,
                   Vector lhs, Vector rhs, std::string note = "");

// Degenerate-input annotation: algebras of dimension <= 1 and zero-dimensional
// modules are legal but flagged so reports are explicit about near-vacuous
// sweeps.
std::string degenerate_note(std::size_t dim_g, std::size_t dim_v);

}  // namespace lra
