#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "lra/deformation.hpp"
#include "lra/instance_gen.hpp"
#include "lra/ns_leibniz.hpp"

namespace lra {

using Json = nlohmann::json;

// All readers validate shapes and throw ShapeError with a field path on any
// mismatch; writers emit rationals as canonical "p" / "p/q" strings and rely
// on nlohmann's key-sorted objects for deterministic bytes.

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Tensor3& t);
Json to_json(const LeibnizAlgebra& g);
Json to_json(const Representation& r);
Json to_json(const Bicochain& h);
Json to_json(const Cochain& f);
Json to_json(const TwistedRBData& d);
Json to_json(const LinearDeformation& ld);
Json to_json(const TruncatedFormalDeformation& fd);
Json to_json(const EquivalenceDatum& e);
Json to_json(const NSLeibnizAlgebra& a);
Json to_json(const Report& r);
Json to_json(const CohomologyDims& c);

Rational rational_from_json(const Json& j);
Vector vector_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
Tensor3 tensor3_from_json(const Json& j);
LeibnizAlgebra algebra_from_json(const Json& j);
Representation representation_from_json(const Json& j);
Bicochain bicochain_from_json(const Json& j);
Cochain cochain_from_json(const Json& j);
TwistedRBData twisted_rb_from_json(const Json& j);
LinearDeformation linear_deformation_from_json(const Json& j);
TruncatedFormalDeformation formal_deformation_from_json(const Json& j);
EquivalenceDatum equivalence_datum_from_json(const Json& j);
NSLeibnizAlgebra ns_from_json(const Json& j);

// File loading with one level of indirection: any object may be replaced by
// {"file": "relative/path"}, resolved against the referencing file's
// directory. "-" reads stdin.
Json load_json(const std::string& path_or_dash);
Json resolve_refs(const Json& j, const std::filesystem::path& base_dir);

std::string dump_sorted(const Json& j);  // 2-space indent, trailing newline

}  // namespace lra
