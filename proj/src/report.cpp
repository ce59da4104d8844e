#include "lra/report.hpp"

namespace lra {

Report pass_report(std::string note) {
  Report r;
  r.note = std::move(note);
  return r;
}

Report fail_report(std::string condition, std::vector<std::size_t> indices,
                   Vector lhs, Vector rhs, std::string note) {
  Report r;
  r.holds = false;
  r.failed_condition = std::move(condition);
  r.indices = std::move(indices);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.note = std::move(note);
  return r;
}

std::string degenerate_note(std::size_t dim_g, std::size_t dim_v) {
  if (dim_g == 0 && dim_v == 0) return "degenerate: zero-dimensional data";
  if (dim_g <= 1 && dim_v == 0) return "degenerate: zero-dimensional module";
  if (dim_g == 0) return "degenerate: zero-dimensional algebra";
  if (dim_g == 1) return "degenerate: one-dimensional algebra";
  if (dim_v == 0) return "degenerate: zero-dimensional module";
  return "";
}

}  // namespace lra
