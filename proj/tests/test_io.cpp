#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "lra/cochain.hpp"
#include "lra/errors.hpp"
#include "lra/instance_gen.hpp"
#include "lra/json_io.hpp"

using namespace lra;
using lra::testing::mat;
using lra::testing::nilpotent2;
using lra::testing::solvable2;
using lra::testing::vec;

namespace fs = std::filesystem;

namespace {

std::string dumped(const Json& j) { return dump_sorted(j); }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("rationals accept canonical strings and plain integers") {
  CHECK(rational_from_json(to_json(rat(3, 4))) == rat(3, 4));
  CHECK(to_json(rat(-3, 4)) == Json("-3/4"));
  CHECK(to_json(rat(5)) == Json("5"));
  CHECK(rational_from_json(Json(5)) == rat(5));
  CHECK(rational_from_json(Json(-2)) == rat(-2));
  CHECK(rational_from_json(Json("2/4")) == rat(1, 2));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ShapeError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), ShapeError);
  CHECK_THROWS_AS(rational_from_json(Json::object()), ShapeError);
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), ShapeError);
}

TEST_CASE("vectors and matrices round-trip") {
  Vector v = {rat(1, 2), rat(-3), rat(0)};
  CHECK(vector_from_json(to_json(v)) == v);
  CHECK_THROWS_AS(vector_from_json(Json::object()), ShapeError);

  Matrix m(2, 3);
  m.at(0, 0) = rat(1, 2);
  m.at(1, 2) = rat(-7, 3);
  CHECK(matrix_from_json(to_json(m)) == m);

  Json bad = to_json(m);
  bad["entries"][1] = Json::array({"1", "2"});  // row too short
  CHECK_THROWS_AS(matrix_from_json(bad), ShapeError);
  Json missing = to_json(m);
  missing.erase("cols");
  CHECK_THROWS_WITH_AS(matrix_from_json(missing),
                       "matrix: missing field \"cols\"", ShapeError);
  CHECK_THROWS_AS(matrix_from_json(Json(3)), ShapeError);
}

TEST_CASE("product tables and algebras round-trip") {
  LeibnizAlgebra g = nilpotent2();
  CHECK(tensor3_from_json(to_json(g.bracket)) == g.bracket);

  LeibnizAlgebra back = algebra_from_json(to_json(g));
  CHECK(back.dim == 2);
  CHECK(back.bracket == g.bracket);
  CHECK_FALSE(back.verified);  // verification never travels through files

  Json bad = to_json(g);
  bad["dim"] = 3;
  CHECK_THROWS_WITH_AS(algebra_from_json(bad),
                       "algebra: bracket table does not match dim", ShapeError);
  Json lump = to_json(g.bracket);
  lump["entries"][0][1] = Json::array({"1"});
  CHECK_THROWS_AS(tensor3_from_json(lump), ShapeError);
}

TEST_CASE("representations round-trip") {
  Representation r = regular_representation(solvable2());
  Representation back = representation_from_json(to_json(r));
  CHECK(back.dim_v == r.dim_v);
  CHECK(back.algebra.bracket == r.algebra.bracket);
  CHECK(back.rho_l == r.rho_l);
  CHECK(back.rho_r == r.rho_r);
  CHECK(dumped(to_json(back)) == dumped(to_json(r)));

  Json bad = to_json(r);
  bad["rho_l"].erase(1);  // one action matrix per basis vector
  CHECK_THROWS_AS(representation_from_json(bad), ShapeError);
}

TEST_CASE("cochains and twists round-trip") {
  Representation reg = regular_representation(nilpotent2());
  Cochain f = gen_cocycle(reg, 2, 3);
  CHECK(cochain_from_json(to_json(f)) == f);

  Cochain f1 = gen_cocycle(reg, 1, 5);
  CHECK(cochain_from_json(to_json(f1)) == f1);

  TwistedRBData d = from_nijenhuis(nilpotent2(), mat(2, 2, {1, 0, 1, 1}));
  Bicochain back = bicochain_from_json(to_json(d.twist));
  CHECK(back.dim_g == d.twist.dim_g);
  CHECK(back.dim_v == d.twist.dim_v);
  CHECK(back.values == d.twist.values);

  Json bad = to_json(d.twist);
  bad["values"][0][0] = Json::array({"1"});  // value of the wrong length
  CHECK_THROWS_WITH_AS(bicochain_from_json(bad),
                       "twist: twist values must have length dim_v",
                       ShapeError);

  Json short_list = to_json(f);
  short_list["values"].erase(0);
  CHECK_THROWS_AS(cochain_from_json(short_list), ShapeError);
}

TEST_CASE("operator bundles round-trip and stay validated") {
  GenProfile p;
  TwistedRBData d = gen_twisted_rb(5, p);
  TwistedRBData back = twisted_rb_from_json(to_json(d));
  CHECK(dumped(to_json(back)) == dumped(to_json(d)));
  CHECK_FALSE(back.verified);

  // reading re-runs the cheap structural validation: a tampered twist that is
  // no longer a 2-cocycle is rejected
  Representation reg = regular_representation(nilpotent2());
  Bicochain slanted = zero_bicochain(2, 2);
  slanted.at(1, 1) = vec({1, 0});
  REQUIRE_FALSE(two_cocycle_condition(reg, slanted).holds);
  Json bundle = Json{{"representation", to_json(reg)},
                     {"twist", to_json(slanted)},
                     {"k", to_json(Matrix(2, 2))}};
  CHECK_THROWS_AS(twisted_rb_from_json(bundle), PreconditionError);

  Json misshapen = to_json(d);
  misshapen["k"]["rows"] = 7;
  CHECK_THROWS_AS(twisted_rb_from_json(misshapen), ShapeError);
}

TEST_CASE("deformation records round-trip") {
  TwistedRBData base = from_nijenhuis(nilpotent2(), mat(2, 2, {2, 0, 0, 2}));
  Matrix k1 = mat(2, 2, {0, 0, -2, 0});

  LinearDeformation ld = make_linear_deformation(base, k1);
  LinearDeformation ld2 = linear_deformation_from_json(to_json(ld));
  CHECK(dumped(to_json(ld2)) == dumped(to_json(ld)));
  CHECK(ld2.k1 == k1);

  TruncatedFormalDeformation fd =
      make_formal_deformation(base, {k1, Matrix(2, 2)});
  TruncatedFormalDeformation fd2 = formal_deformation_from_json(to_json(fd));
  CHECK(dumped(to_json(fd2)) == dumped(to_json(fd)));
  CHECK(fd2.terms.size() == 2);

  EquivalenceDatum e;
  e.x = vec({1, -2});
  e.phi_higher.push_back(mat(2, 2, {0, 1, 0, 0}));
  EquivalenceDatum e2 = equivalence_datum_from_json(to_json(e));
  CHECK(e2.x == e.x);
  CHECK(e2.phi_higher == e.phi_higher);
  CHECK(e2.psi_higher.empty());

  // the correction lists are optional on input
  EquivalenceDatum bare =
      equivalence_datum_from_json(Json{{"x", Json::array({"3"})}});
  CHECK(bare.x == vec({3}));
  CHECK(bare.phi_higher.empty());
  CHECK_THROWS_AS(equivalence_datum_from_json(Json::object()), ShapeError);
}

TEST_CASE("split structures round-trip") {
  NSLeibnizAlgebra a = ns_from_nijenhuis(nilpotent2(), mat(2, 2, {1, 0, 1, 1}));
  NSLeibnizAlgebra back = ns_from_json(to_json(a));
  CHECK(back.dim == a.dim);
  CHECK(back.tri == a.tri);
  CHECK(back.tli == a.tli);
  CHECK(back.dia == a.dia);
  CHECK_FALSE(back.verified);

  Json bad = to_json(a);
  bad["dim"] = 3;
  CHECK_THROWS_AS(ns_from_json(bad), ShapeError);
}

TEST_CASE("reports and dimension counts serialize one way") {
  Json pass = to_json(pass_report("all good"));
  CHECK(pass["holds"] == Json(true));
  CHECK(pass["note"] == Json("all good"));
  CHECK_FALSE(pass.contains("failed_condition"));

  Tensor3 z1(1), d1(1);
  d1.at(0, 0, 0) = 1;
  Json fail = to_json(check_ns_axioms(make_ns(1, z1, z1, d1)));
  CHECK(fail["holds"] == Json(false));
  CHECK(fail["failed_condition"] == Json("axiom-A4"));
  CHECK(fail["indices"] == Json::array({0, 0, 0}));
  CHECK(fail["lhs"] == Json::array({"1"}));
  CHECK(fail["rhs"] == Json::array({"2"}));

  Representation reg = regular_representation(nilpotent2());
  Json dims = to_json(cohomology_dims(reg, 1));
  CHECK(dims["degree"] == Json(1));
  CHECK(dims["z"] == Json(2));
  CHECK(dims["b"] == Json(1));
  CHECK(dims["h"] == Json(1));
}

TEST_CASE("dump_sorted is deterministic and human-diffable") {
  Json j = Json{{"zeta", 1}, {"alpha", Json::array({1, 2})}};
  CHECK(dump_sorted(j) ==
        "{\n  \"alpha\": [\n    1,\n    2\n  ],\n  \"zeta\": 1\n}\n");
  CHECK(dump_sorted(j) == dump_sorted(Json{{"alpha", Json::array({1, 2})},
                                           {"zeta", 1}}));
}

TEST_CASE("file references resolve against the referencing file") {
  const fs::path dir = fs::temp_directory_path() / "lra_io_refs";
  fs::remove_all(dir);
  fs::create_directories(dir / "sub");

  write_file(dir / "sub" / "algebra.json",
             dump_sorted(to_json(nilpotent2())));
  write_file(dir / "main.json",
             "{\"outer\": {\"file\": \"sub/algebra.json\"}, \"tag\": 7}");
  Json resolved = load_json((dir / "main.json").string());
  CHECK(resolved["tag"] == Json(7));
  CHECK(algebra_from_json(resolved["outer"]).bracket == nilpotent2().bracket);

  // a chain of references resolves link by link, relative to each file
  write_file(dir / "sub" / "one.json", "{\"file\": \"two.json\"}");
  write_file(dir / "sub" / "two.json", "[1, 2]");
  write_file(dir / "chain.json", "{\"file\": \"sub/one.json\"}");
  CHECK(load_json((dir / "chain.json").string()) == Json::array({1, 2}));

  // a self-reference trips the depth guard instead of looping
  write_file(dir / "loop.json", "{\"file\": \"loop.json\"}");
  CHECK_THROWS_AS(load_json((dir / "loop.json").string()), ShapeError);

  // only single-key {"file": "..."} objects are references
  write_file(dir / "notref.json",
             "{\"file\": \"nowhere.json\", \"extra\": 1}");
  Json notref = load_json((dir / "notref.json").string());
  CHECK(notref["file"] == Json("nowhere.json"));
  write_file(dir / "numfile.json", "{\"file\": 3}");
  CHECK(load_json((dir / "numfile.json").string())["file"] == Json(3));

  CHECK_THROWS_AS(load_json((dir / "missing.json").string()), ShapeError);
  write_file(dir / "broken.json", "{(");
  CHECK_THROWS_AS(load_json((dir / "broken.json").string()), ShapeError);

  fs::remove_all(dir);
}
