#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "lra/instance_gen.hpp"
#include "lra/twisted_rb.hpp"

using namespace lra;
using lra::testing::mat;
using lra::testing::nilpotent2;
using lra::testing::solvable2;
using lra::testing::vec;

namespace {

Bicochain neg_bracket_twist(const LeibnizAlgebra& g) {
  Bicochain h = zero_bicochain(g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = 0; j < g.dim; ++j) {
      h.at(i, j) = vec_scale(rat(-1), g.bracket_of(i, j));
    }
  }
  return h;
}

}  // namespace

TEST_CASE("bundle construction validates shapes and the twist") {
  Representation r = regular_representation(nilpotent2());
  CHECK_THROWS_AS(make_twisted_rb(r, zero_bicochain(2, 2), Matrix(3, 2)),
                  ShapeError);
  Bicochain bad = zero_bicochain(2, 2);
  bad.at(1, 1) = vec({1, 0});  // not a 2-cocycle for this module
  CHECK_THROWS_AS(make_twisted_rb(r, bad, Matrix(2, 2)), PreconditionError);
}

TEST_CASE("zero operator is always twisted by any cocycle") {
  Representation r = regular_representation(nilpotent2());
  TwistedRBData d = make_twisted_rb(r, neg_bracket_twist(nilpotent2()),
                                    Matrix(2, 2));
  CHECK(check_twisted_rb(d).holds);
  CHECK(graph_is_subalgebra(d).holds);
}

TEST_CASE("inverse of an invertible 1-cochain, twisted by minus its boundary") {
  Representation r = regular_representation(nilpotent2());
  Matrix h = mat(2, 2, {1, 0, 1, 1});
  TwistedRBData d = from_invertible_cochain(r, h);
  CHECK(d.verified);
  CHECK(check_twisted_rb(d).holds);
  CHECK(graph_is_subalgebra(d).holds);

  auto hi = invert(h);
  REQUIRE(hi.has_value());
  CHECK(d.k == *hi);
  // the twist is minus the coboundary of h, and is itself a cocycle
  Bicochain expect = to_bicochain(coboundary(r, matrix_to_cochain(h)));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(d.twist.at(i, j) == vec_scale(rat(-1), expect.at(i, j)));
    }
  }
  CHECK(two_cocycle_condition(r, d.twist).holds);

  CHECK_THROWS_AS(from_invertible_cochain(r, mat(2, 2, {1, 2, 2, 4})),
                  PreconditionError);
}

TEST_CASE("identity as operator for a deformed algebra") {
  LeibnizAlgebra g = nilpotent2();
  Matrix n = mat(2, 2, {1, 0, 1, 1});
  TwistedRBData d = from_nijenhuis(g, n);
  CHECK(d.verified);
  CHECK(check_twisted_rb(d).holds);
  CHECK(graph_is_subalgebra(d).holds);
  CHECK(d.k == Matrix::identity(2));
  // twist h(x,y) = -N[x,y] over the deformed algebra
  CHECK(d.twist.at(0, 0) == vec({0, -1}));
  CHECK(two_cocycle_condition(d.rep, d.twist).holds);

  Matrix bad(2, 2);
  bad.at(1, 1) = rat(1);
  CHECK_THROWS_AS(from_nijenhuis(g, bad), PreconditionError);
}

TEST_CASE("direct check and graph membership always agree") {
  GenProfile p;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SplitMix64 rng(seed * 1201);
    p.dim_g = 1 + rng.below(3);
    p.dim_v = 1 + rng.below(3);
    TwistedRBData good = gen_twisted_rb(rng.next(), p);
    CHECK(check_twisted_rb(good).holds);
    CHECK(graph_is_subalgebra(good).holds);
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SplitMix64 rng(seed * 3331);
    p.dim_g = 2;
    p.dim_v = 2;
    TwistedRBData badd = gen_failing_twisted_rb(rng.next(), p);
    Report direct = check_twisted_rb(badd);
    Report graph = graph_is_subalgebra(badd);
    CHECK_FALSE(direct.holds);
    CHECK_FALSE(graph.holds);
    CHECK(graph.failed_condition == "graph-closure");
    CHECK_THROWS_AS(ensure_twisted_rb(badd), PreconditionError);
  }
}

TEST_CASE("induced bracket of a deformation bundle is the deformed bracket") {
  LeibnizAlgebra g = nilpotent2();
  Matrix n = mat(2, 2, {2, 0, 0, 2});
  TwistedRBData d = from_nijenhuis(g, n);
  LeibnizAlgebra ind = induced_bracket(d);
  CHECK(ind.verified);
  CHECK(ind.bracket == deformed_bracket(g, n).bracket);
}

TEST_CASE("induced structures satisfy their axioms on generated bundles") {
  GenProfile p;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    SplitMix64 rng(seed * 509);
    p.dim_g = 1 + rng.below(3);
    p.dim_v = 1 + rng.below(3);
    TwistedRBData d = gen_twisted_rb(rng.next(), p);
    LeibnizAlgebra ind = induced_bracket(d);
    CHECK(check_leibniz(ind).holds);
    Representation back = induced_representation(d);
    CHECK(check_representation(back).holds);
    CHECK(back.algebra.bracket == ind.bracket);
  }
}

TEST_CASE("operator differential: dual paths agree and square to zero") {
  GenProfile p;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SplitMix64 rng(seed * 13007);
    p.dim_g = 1 + rng.below(2);
    p.dim_v = 1 + rng.below(2);
    TwistedRBData d = gen_twisted_rb(rng.next(), p);
    Representation ind = induced_representation(d);
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      Cochain f(deg, d.dim_v(), d.dim_g());
      for (std::size_t e = 0; e < f.size(); ++e) {
        f.entry(e) = gen_rational(rng, p);
      }
      Cochain direct = dk_coboundary(d, f);
      Cochain generic = coboundary(ind, f);
      CHECK(direct == generic);
      CHECK(dk_coboundary(d, direct).is_zero());
    }
  }
}

TEST_CASE("operator cohomology dims match the frozen table") {
  std::ifstream in(std::string(LRA_TEST_DIR) + "/oracles/frozen_dims.json");
  REQUIRE(in.good());
  nlohmann::json frozen = nlohmann::json::parse(in);

  LeibnizAlgebra g = nilpotent2();
  struct Case {
    const char* key;
    Matrix n;
  };
  for (const Case& c : {Case{"nilpotent2_nijenhuis_2id_operator",
                             mat(2, 2, {2, 0, 0, 2})},
                        Case{"nilpotent2_nijenhuis_unipotent_operator",
                             mat(2, 2, {1, 0, 1, 1})}}) {
    TwistedRBData d = from_nijenhuis(g, c.n);
    const auto& expected = frozen.at(c.key);
    for (std::size_t n = 0; n <= 3; ++n) {
      CohomologyDims dims = k_cohomology_dims(d, n);
      const auto& e = expected.at(std::to_string(n));
      CHECK(dims.z == e.at("z").get<std::size_t>());
      CHECK(dims.b == e.at("b").get<std::size_t>());
      CHECK(dims.h == e.at("h").get<std::size_t>());
    }
  }
}

TEST_CASE("morphism conditions: identity passes, scaling fails") {
  TwistedRBData d = from_nijenhuis(nilpotent2(), mat(2, 2, {1, 0, 1, 1}));
  CHECK(check_morphism(d, d, Matrix::identity(2), Matrix::identity(2)).holds);

  Report r = check_morphism(d, d, Matrix::identity(2).scaled(rat(2)),
                            Matrix::identity(2).scaled(rat(2)));
  CHECK_FALSE(r.holds);
  CHECK(r.failed_condition == "bracket-morphism");
}

TEST_CASE("semidirect shift isomorphism") {
  Representation r = regular_representation(solvable2());
  Bicochain h = zero_bicochain(2, 2);
  Matrix b = mat(2, 2, {1, 0, 0, 0});
  SemidirectShift s = psi_h_isomorphism(r, h, b);

  CHECK(s.source.bracket == twisted_semidirect(r, h).bracket);
  Bicochain shifted = to_bicochain(coboundary(r, matrix_to_cochain(b)));
  CHECK(s.twist.values == shifted.values);  // h = 0 here, so twist = db
  CHECK(s.target.bracket == twisted_semidirect(r, shifted).bracket);

  // explicit intertwining on every basis pair of the sum
  const std::size_t dim = 4;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vector lhs = s.iso.apply(s.source.bracket_of(i, j));
      Vector rhs = s.target.bracket_of(s.iso.col(i), s.iso.col(j));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("twist shift along a 1-cochain") {
  Representation r = regular_representation(nilpotent2());
  TwistedRBData d = from_invertible_cochain(r, Matrix::identity(2));
  // K = Id, twist = -bracket

  Matrix b = mat(2, 2, {-1, 0, 0, 0});
  auto out = shift_by_cochain(d, b);
  REQUIRE(out.has_value());
  CHECK(out->verified);
  CHECK(check_twisted_rb(*out).holds);
  // twist picked up db: (db)(e0,e0) = -2 e1 on top of -e1
  CHECK(out->twist.at(0, 0) == vec({0, -3}));
  // K (Id - bK)^{-1} = (Id + E00)^{-1}
  CHECK(out->k == mat(2, 2, {1, 0, 0, 2}).scaled(rat(1, 2)));

  // Id - bK singular: b = Id against K = Id
  CHECK_FALSE(shift_by_cochain(d, Matrix::identity(2)).has_value());
}

TEST_CASE("gauge action of a 1-cocycle") {
  Representation r = regular_representation(nilpotent2());
  TwistedRBData d = from_invertible_cochain(r, Matrix::identity(2));

  Matrix b = mat(2, 2, {0, 0, 1, 0});  // b(e0) = e1, a 1-cocycle here
  CHECK(is_cocycle(r, matrix_to_cochain(b)).holds);
  auto out = gauge_transform(d, b);
  REQUIRE(out.has_value());
  CHECK(out->verified);
  CHECK(check_twisted_rb(*out).holds);
  // same twist, new operator K(Id + bK)^{-1} = Id - E10
  CHECK(out->twist.values == d.twist.values);
  CHECK(out->k == mat(2, 2, {1, 0, -1, 1}));
  CHECK(gauge_bracket_isomorphism(d, b).holds);

  // not a cocycle -> precondition, not a silent wrong answer
  CHECK_THROWS_AS(gauge_transform(d, mat(2, 2, {1, 0, 0, 0})),
                  PreconditionError);
}
