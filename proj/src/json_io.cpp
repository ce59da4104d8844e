#include "lra/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "lra/errors.hpp"

namespace lra {

namespace {

std::string ctx_msg(const char* ctx, const std::string& what) {
  return std::string(ctx) + ": " + what;
}

const Json& field(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object()) throw ShapeError(ctx_msg(ctx, "expected an object"));
  auto it = j.find(key);
  if (it == j.end()) {
    throw ShapeError(ctx_msg(ctx, std::string("missing field \"") + key +
                                      "\""));
  }
  return *it;
}

std::size_t size_field(const Json& j, const char* key, const char* ctx) {
  const Json& f = field(j, key, ctx);
  const bool ok = f.is_number_unsigned() ||
                  (f.is_number_integer() && f.get<long long>() >= 0);
  if (!ok) {
    throw ShapeError(ctx_msg(ctx, std::string("field \"") + key +
                                      "\" must be a non-negative integer"));
  }
  return f.get<std::size_t>();
}

const Json& array_field(const Json& j, const char* key, const char* ctx,
                        std::size_t expect) {
  const Json& f = field(j, key, ctx);
  if (!f.is_array() || f.size() != expect) {
    throw ShapeError(ctx_msg(ctx, std::string("field \"") + key +
                                      "\" must be an array of length " +
                                      std::to_string(expect)));
  }
  return f;
}

}  // namespace

Json to_json(const Rational& q) { return rat_to_string(q); }

Json to_json(const Vector& v) {
  Json a = Json::array();
  for (const Rational& q : v) a.push_back(to_json(q));
  return a;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_json(const Tensor3& t) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json plane = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      plane.push_back(to_json(t.product(i, j)));
    }
    entries.push_back(std::move(plane));
  }
  return Json{{"dim", t.dim()}, {"entries", std::move(entries)}};
}

Json to_json(const LeibnizAlgebra& g) {
  return Json{{"dim", g.dim}, {"bracket", to_json(g.bracket)}};
}

Json to_json(const Representation& r) {
  Json l = Json::array(), rr = Json::array();
  for (const Matrix& m : r.rho_l) l.push_back(to_json(m));
  for (const Matrix& m : r.rho_r) rr.push_back(to_json(m));
  return Json{{"algebra", to_json(r.algebra)},
              {"dim_v", r.dim_v},
              {"rho_l", std::move(l)},
              {"rho_r", std::move(rr)}};
}

Json to_json(const Bicochain& h) {
  Json values = Json::array();
  for (std::size_t i = 0; i < h.dim_g; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < h.dim_g; ++j) row.push_back(to_json(h.at(i, j)));
    values.push_back(std::move(row));
  }
  return Json{{"dim_g", h.dim_g}, {"dim_v", h.dim_v}, {"values", std::move(values)}};
}

Json to_json(const Cochain& f) {
  Json values = Json::array();
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    values.push_back(to_json(f.value(t)));
  }
  return Json{{"degree", f.degree()},
              {"arg_dim", f.arg_dim()},
              {"val_dim", f.val_dim()},
              {"values", std::move(values)}};
}

Json to_json(const TwistedRBData& d) {
  return Json{{"representation", to_json(d.rep)},
              {"twist", to_json(d.twist)},
              {"k", to_json(d.k)}};
}

Json to_json(const LinearDeformation& ld) {
  return Json{{"base", to_json(ld.base)}, {"k1", to_json(ld.k1)}};
}

Json to_json(const TruncatedFormalDeformation& fd) {
  Json terms = Json::array();
  for (const Matrix& m : fd.terms) terms.push_back(to_json(m));
  return Json{{"base", to_json(fd.base)}, {"terms", std::move(terms)}};
}

Json to_json(const EquivalenceDatum& e) {
  Json phis = Json::array(), psis = Json::array();
  for (const Matrix& m : e.phi_higher) phis.push_back(to_json(m));
  for (const Matrix& m : e.psi_higher) psis.push_back(to_json(m));
  return Json{{"x", to_json(e.x)},
              {"phi_higher", std::move(phis)},
              {"psi_higher", std::move(psis)}};
}

Json to_json(const NSLeibnizAlgebra& a) {
  return Json{{"dim", a.dim},
              {"tri", to_json(a.tri)},
              {"tli", to_json(a.tli)},
              {"dia", to_json(a.dia)}};
}

Json to_json(const Report& r) {
  Json j{{"holds", r.holds}};
  if (!r.holds) {
    j["failed_condition"] = r.failed_condition;
    Json idx = Json::array();
    for (std::size_t i : r.indices) idx.push_back(i);
    j["indices"] = std::move(idx);
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const CohomologyDims& c) {
  return Json{{"degree", c.degree}, {"z", c.z}, {"b", c.b}, {"h", c.h}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw ShapeError("rational: expected an integer or a \"p/q\" string");
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ShapeError("vector: expected an array");
  Vector v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(rational_from_json(e));
  return v;
}

Matrix matrix_from_json(const Json& j) {
  const char* ctx = "matrix";
  const std::size_t rows = size_field(j, "rows", ctx);
  const std::size_t cols = size_field(j, "cols", ctx);
  const Json& entries = array_field(j, "entries", ctx, rows);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    Vector row = vector_from_json(entries[i]);
    if (row.size() != cols) {
      throw ShapeError(ctx_msg(ctx, "row " + std::to_string(i) +
                                        " has the wrong length"));
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = std::move(row[c]);
  }
  return m;
}

Tensor3 tensor3_from_json(const Json& j) {
  const char* ctx = "product table";
  const std::size_t dim = size_field(j, "dim", ctx);
  const Json& entries = array_field(j, "entries", ctx, dim);
  Tensor3 t(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!entries[i].is_array() || entries[i].size() != dim) {
      throw ShapeError(ctx_msg(ctx, "entries must be dim x dim x dim"));
    }
    for (std::size_t jj = 0; jj < dim; ++jj) {
      Vector v = vector_from_json(entries[i][jj]);
      if (v.size() != dim) {
        throw ShapeError(ctx_msg(ctx, "entries must be dim x dim x dim"));
      }
      for (std::size_t k = 0; k < dim; ++k) t.at(i, jj, k) = std::move(v[k]);
    }
  }
  return t;
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  const char* ctx = "algebra";
  const std::size_t dim = size_field(j, "dim", ctx);
  Tensor3 t = tensor3_from_json(field(j, "bracket", ctx));
  if (t.dim() != dim) {
    throw ShapeError(ctx_msg(ctx, "bracket table does not match dim"));
  }
  return make_algebra(dim, std::move(t));
}

Representation representation_from_json(const Json& j) {
  const char* ctx = "representation";
  LeibnizAlgebra g = algebra_from_json(field(j, "algebra", ctx));
  const std::size_t dim_v = size_field(j, "dim_v", ctx);
  const Json& l = array_field(j, "rho_l", ctx, g.dim);
  const Json& r = array_field(j, "rho_r", ctx, g.dim);
  std::vector<Matrix> rho_l, rho_r;
  rho_l.reserve(g.dim);
  rho_r.reserve(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    rho_l.push_back(matrix_from_json(l[i]));
    rho_r.push_back(matrix_from_json(r[i]));
  }
  return make_representation(std::move(g), dim_v, std::move(rho_l),
                             std::move(rho_r));
}

Bicochain bicochain_from_json(const Json& j) {
  const char* ctx = "twist";
  const std::size_t dim_g = size_field(j, "dim_g", ctx);
  const std::size_t dim_v = size_field(j, "dim_v", ctx);
  const Json& values = array_field(j, "values", ctx, dim_g);
  Bicochain h = zero_bicochain(dim_g, dim_v);
  for (std::size_t i = 0; i < dim_g; ++i) {
    if (!values[i].is_array() || values[i].size() != dim_g) {
      throw ShapeError(ctx_msg(ctx, "values must be dim_g x dim_g vectors"));
    }
    for (std::size_t jj = 0; jj < dim_g; ++jj) {
      Vector v = vector_from_json(values[i][jj]);
      if (v.size() != dim_v) {
        throw ShapeError(ctx_msg(ctx, "twist values must have length dim_v"));
      }
      h.at(i, jj) = std::move(v);
    }
  }
  return h;
}

Cochain cochain_from_json(const Json& j) {
  const char* ctx = "cochain";
  const std::size_t degree = size_field(j, "degree", ctx);
  const std::size_t arg_dim = size_field(j, "arg_dim", ctx);
  const std::size_t val_dim = size_field(j, "val_dim", ctx);
  Cochain f(degree, arg_dim, val_dim);
  const Json& values = array_field(j, "values", ctx, f.tuple_count());
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    Vector v = vector_from_json(values[t]);
    if (v.size() != val_dim) {
      throw ShapeError(ctx_msg(ctx, "cochain values must have length val_dim"));
    }
    f.set_value(t, v);
  }
  return f;
}

TwistedRBData twisted_rb_from_json(const Json& j) {
  const char* ctx = "operator bundle";
  Representation r = representation_from_json(field(j, "representation", ctx));
  Bicochain twist = bicochain_from_json(field(j, "twist", ctx));
  Matrix k = matrix_from_json(field(j, "k", ctx));
  return make_twisted_rb(std::move(r), std::move(twist), std::move(k));
}

LinearDeformation linear_deformation_from_json(const Json& j) {
  const char* ctx = "linear deformation";
  TwistedRBData base = twisted_rb_from_json(field(j, "base", ctx));
  Matrix k1 = matrix_from_json(field(j, "k1", ctx));
  return make_linear_deformation(std::move(base), std::move(k1));
}

TruncatedFormalDeformation formal_deformation_from_json(const Json& j) {
  const char* ctx = "formal deformation";
  TwistedRBData base = twisted_rb_from_json(field(j, "base", ctx));
  const Json& terms_j = field(j, "terms", ctx);
  if (!terms_j.is_array()) {
    throw ShapeError(ctx_msg(ctx, "field \"terms\" must be an array"));
  }
  std::vector<Matrix> terms;
  terms.reserve(terms_j.size());
  for (const Json& t : terms_j) terms.push_back(matrix_from_json(t));
  return make_formal_deformation(std::move(base), std::move(terms));
}

EquivalenceDatum equivalence_datum_from_json(const Json& j) {
  const char* ctx = "equivalence datum";
  EquivalenceDatum e;
  e.x = vector_from_json(field(j, "x", ctx));
  if (j.contains("phi_higher")) {
    const Json& arr = field(j, "phi_higher", ctx);
    if (!arr.is_array()) {
      throw ShapeError(ctx_msg(ctx, "field \"phi_higher\" must be an array"));
    }
    for (const Json& m : arr) e.phi_higher.push_back(matrix_from_json(m));
  }
  if (j.contains("psi_higher")) {
    const Json& arr = field(j, "psi_higher", ctx);
    if (!arr.is_array()) {
      throw ShapeError(ctx_msg(ctx, "field \"psi_higher\" must be an array"));
    }
    for (const Json& m : arr) e.psi_higher.push_back(matrix_from_json(m));
  }
  return e;
}

NSLeibnizAlgebra ns_from_json(const Json& j) {
  const char* ctx = "split algebra";
  const std::size_t dim = size_field(j, "dim", ctx);
  Tensor3 tri = tensor3_from_json(field(j, "tri", ctx));
  Tensor3 tli = tensor3_from_json(field(j, "tli", ctx));
  Tensor3 dia = tensor3_from_json(field(j, "dia", ctx));
  return make_ns(dim, std::move(tri), std::move(tli), std::move(dia));
}

namespace {

Json resolve_refs_depth(const Json& j, const std::filesystem::path& base_dir,
                        int depth);

Json load_and_resolve(const std::filesystem::path& path, int depth) {
  std::ifstream in(path);
  if (!in) {
    throw ShapeError("cannot open file: " + path.string());
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ShapeError("invalid JSON in " + path.string() + ": " + e.what());
  }
  return resolve_refs_depth(j, path.parent_path(), depth);
}

Json resolve_refs_depth(const Json& j, const std::filesystem::path& base_dir,
                        int depth) {
  if (depth > 16) {
    throw ShapeError("file reference chain too deep");
  }
  if (j.is_object()) {
    if (j.size() == 1 && j.contains("file") && j["file"].is_string()) {
      std::filesystem::path target = j["file"].get<std::string>();
      if (target.is_relative()) target = base_dir / target;
      return load_and_resolve(target, depth + 1);
    }
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      out[it.key()] = resolve_refs_depth(it.value(), base_dir, depth);
    }
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const Json& e : j) out.push_back(resolve_refs_depth(e, base_dir, depth));
    return out;
  }
  return j;
}

}  // namespace

Json load_json(const std::string& path_or_dash) {
  if (path_or_dash == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    Json j;
    try {
      j = Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
      throw ShapeError(std::string("invalid JSON on stdin: ") + e.what());
    }
    return resolve_refs_depth(j, std::filesystem::current_path(), 0);
  }
  return load_and_resolve(path_or_dash, 0);
}

Json resolve_refs(const Json& j, const std::filesystem::path& base_dir) {
  return resolve_refs_depth(j, base_dir, 0);
}

std::string dump_sorted(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace lra
