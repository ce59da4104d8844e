// Command-line front end: loads JSON inputs, dispatches to the library, and
// prints one report object per invocation.
//
// Exit codes: 0 = check passed / construction succeeded, 1 = a mathematical
// check failed (or a mathematical precondition was violated), 2 = unusable
// input (bad flags, unreadable file, malformed JSON, wrong shapes).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "lra/errors.hpp"
#include "lra/json_io.hpp"

namespace {

using lra::Json;

struct Outcome {
  int code = 0;
  std::optional<bool> holds;
  Json details;
};

struct Ctx {
  bool quiet = false;
  bool stable = false;
  std::string command;
  std::function<Outcome()> run;
};

std::size_t degree_cap_from_env() {
  const char* env = std::getenv("LRA_DEGREE_CAP");
  if (env == nullptr || *env == '\0') return lra::default_degree_cap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw lra::ShapeError("LRA_DEGREE_CAP must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

lra::Degree0Convention convention_from_name(const std::string& name) {
  if (name == "literal") return lra::Degree0Convention::literal;
  if (name == "left-minus-right") {
    return lra::Degree0Convention::left_minus_right;
  }
  throw lra::ShapeError("--degree0 must be literal or left-minus-right");
}

// Inputs may be raw objects, report wrappers produced by this tool (the
// payload lives under "details"), or containers holding the wanted object
// under its usual key; peel until the expected keys appear.
Json load_input(const std::string& path) {
  Json j = lra::load_json(path);
  while (j.is_object() && j.contains("command") && j.contains("details")) {
    j = j["details"];
  }
  return j;
}

Json peel(Json j, std::initializer_list<const char*> want_keys,
          std::initializer_list<const char*> container_keys,
          const char* what) {
  for (int depth = 0; depth < 8; ++depth) {
    if (!j.is_object()) break;
    for (const char* k : want_keys) {
      if (j.contains(k)) return j;
    }
    bool descended = false;
    for (const char* k : container_keys) {
      if (j.contains(k)) {
        j = j[k];
        descended = true;
        break;
      }
    }
    if (!descended) break;
  }
  if (j.is_object()) return j;
  throw lra::ShapeError(std::string(what) + ": unrecognized input layout");
}

lra::LeibnizAlgebra load_algebra(const std::string& path) {
  return lra::algebra_from_json(
      peel(load_input(path), {"bracket"}, {"algebra"}, "algebra"));
}

lra::Representation load_representation(const std::string& path) {
  return lra::representation_from_json(
      peel(load_input(path), {"rho_l"}, {"representation"}, "representation"));
}

lra::TwistedRBData load_bundle(const std::string& path) {
  return lra::twisted_rb_from_json(
      peel(load_input(path), {"k"}, {"bundle", "base"}, "operator bundle"));
}

lra::Cochain load_cochain(const std::string& path) {
  return lra::cochain_from_json(
      peel(load_input(path), {"degree"}, {"cochain"}, "cochain"));
}

lra::NSLeibnizAlgebra load_ns(const std::string& path) {
  return lra::ns_from_json(
      peel(load_input(path), {"tri"}, {"ns"}, "split algebra"));
}

lra::Matrix load_matrix(const std::string& path) {
  Json j = load_input(path);
  j = peel(std::move(j), {"rows", "degree"}, {"matrix", "cochain", "operator"},
           "matrix");
  if (j.contains("degree")) {
    lra::Cochain f = lra::cochain_from_json(j);
    if (f.degree() != 1) {
      throw lra::ShapeError("expected a matrix or a degree-1 cochain");
    }
    return lra::cochain_to_matrix(f);
  }
  return lra::matrix_from_json(j);
}

lra::Vector load_vector(const std::string& path) {
  Json j = load_input(path);
  if (j.is_object() && j.contains("x")) j = j["x"];
  return lra::vector_from_json(j);
}

lra::Bicochain load_bicochain(const std::string& path) {
  Json j = load_input(path);
  j = peel(std::move(j), {"values", "degree"}, {"twist"}, "twist");
  if (j.contains("degree")) {
    lra::Cochain f = lra::cochain_from_json(j);
    return lra::to_bicochain(f);  // shape-checked inside
  }
  return lra::bicochain_from_json(j);
}

lra::TruncatedFormalDeformation load_formal(const std::string& path) {
  Json j = peel(load_input(path), {"terms", "k1"}, {"deformation"},
                "deformation");
  if (j.contains("k1") && !j.contains("terms")) {
    lra::LinearDeformation ld = lra::linear_deformation_from_json(j);
    return lra::make_formal_deformation(std::move(ld.base), {ld.k1});
  }
  return lra::formal_deformation_from_json(j);
}

Outcome from_report(const lra::Report& r) {
  Outcome o;
  o.holds = r.holds;
  o.code = r.holds ? 0 : 1;
  o.details = lra::to_json(r);
  return o;
}

Outcome from_object(Json j) {
  Outcome o;
  o.details = std::move(j);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for Leibniz algebra structures"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_flag("--quiet", ctx.quiet, "suppress the report; exit code only");
  app.add_flag("--stable", ctx.stable,
               "omit elapsed_ms so identical inputs give identical bytes");
  // let --quiet / --stable also appear after the subcommand; subcommands
  // created below inherit this setting
  app.fallthrough();

  // shared option storage; each leaf reads the ones it declared
  std::string arg_algebra, arg_rep, arg_bundle, arg_cochain, arg_twist;
  std::string arg_ns, arg_src, arg_dst, arg_phi, arg_psi, arg_operator;
  std::string arg_x, arg_deformation, arg_a, arg_b, arg_datum, arg_kind;
  std::string arg_degree0 = "literal";
  std::size_t arg_degree = 0;
  std::size_t arg_gen_degree = 2;
  std::size_t arg_order = 1;
  bool arg_of_k = false;
  std::uint64_t arg_seed = 0;
  lra::GenProfile profile;

  auto* check = app.add_subcommand("check", "evaluate one of the checkers");
  check->require_subcommand(1);
  auto* build = app.add_subcommand("build", "run one of the constructions");
  build->require_subcommand(1);
  auto* deform = app.add_subcommand("deform", "deformation-theory checks");
  deform->require_subcommand(1);

  {
    auto* c = check->add_subcommand("leibniz", "bracket identity");
    c->add_option("--algebra", arg_algebra, "algebra JSON")->required();
    c->callback([&] {
      ctx.command = "check leibniz";
      ctx.run = [&] { return from_report(check_leibniz(load_algebra(arg_algebra))); };
    });
  }
  {
    auto* c = check->add_subcommand("rep", "module axioms");
    c->add_option("--rep", arg_rep, "representation JSON")->required();
    c->callback([&] {
      ctx.command = "check rep";
      ctx.run = [&] {
        return from_report(check_representation(load_representation(arg_rep)));
      };
    });
  }
  {
    auto* c = check->add_subcommand("nijenhuis", "Nijenhuis identity");
    c->add_option("--algebra", arg_algebra, "algebra JSON")->required();
    c->add_option("--operator", arg_operator, "matrix JSON")->required();
    c->callback([&] {
      ctx.command = "check nijenhuis";
      ctx.run = [&] {
        return from_report(
            check_nijenhuis(load_algebra(arg_algebra), load_matrix(arg_operator)));
      };
    });
  }
  {
    auto* c = check->add_subcommand("cocycle", "differential vanishes");
    c->add_option("--rep", arg_rep, "representation JSON")->required();
    c->add_option("--cochain", arg_cochain, "cochain JSON")->required();
    c->add_option("--degree0", arg_degree0,
                  "degree-0 convention: literal | left-minus-right");
    c->callback([&] {
      ctx.command = "check cocycle";
      ctx.run = [&] {
        return from_report(is_cocycle(load_representation(arg_rep),
                                      load_cochain(arg_cochain),
                                      convention_from_name(arg_degree0)));
      };
    });
  }
  {
    auto* c = check->add_subcommand("trb", "twisted operator identity");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "check trb";
      ctx.run = [&] { return from_report(check_twisted_rb(load_bundle(arg_bundle))); };
    });
  }
  {
    auto* c = check->add_subcommand("graph", "graph closure in the sum");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "check graph";
      ctx.run = [&] {
        return from_report(graph_is_subalgebra(load_bundle(arg_bundle)));
      };
    });
  }
  {
    auto* c = check->add_subcommand("morphism", "bundle morphism conditions");
    c->add_option("--src", arg_src, "source bundle JSON")->required();
    c->add_option("--dst", arg_dst, "target bundle JSON")->required();
    c->add_option("--phi", arg_phi, "algebra map matrix JSON")->required();
    c->add_option("--psi", arg_psi, "module map matrix JSON")->required();
    c->callback([&] {
      ctx.command = "check morphism";
      ctx.run = [&] {
        return from_report(check_morphism(load_bundle(arg_src),
                                          load_bundle(arg_dst),
                                          load_matrix(arg_phi),
                                          load_matrix(arg_psi)));
      };
    });
  }
  {
    auto* c = check->add_subcommand("ns", "split-product axioms");
    c->add_option("--ns", arg_ns, "split algebra JSON")->required();
    c->callback([&] {
      ctx.command = "check ns";
      ctx.run = [&] { return from_report(check_ns_axioms(load_ns(arg_ns))); };
    });
  }
  {
    auto* c = check->add_subcommand("nijenhuis-element",
                                    "one-step trivializing element");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->add_option("--x", arg_x, "element JSON (coordinate array)")->required();
    c->callback([&] {
      ctx.command = "check nijenhuis-element";
      ctx.run = [&] {
        return from_report(
            check_nijenhuis_element(load_bundle(arg_bundle), load_vector(arg_x)));
      };
    });
  }

  {
    auto* c = build->add_subcommand("regular-rep", "algebra acting on itself");
    c->add_option("--algebra", arg_algebra, "algebra JSON")->required();
    c->callback([&] {
      ctx.command = "build regular-rep";
      ctx.run = [&] {
        return from_object(
            to_json(regular_representation(load_algebra(arg_algebra))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("semidirect", "twisted semidirect sum");
    c->add_option("--rep", arg_rep, "representation JSON")->required();
    c->add_option("--twist", arg_twist, "twist JSON")->required();
    c->callback([&] {
      ctx.command = "build semidirect";
      ctx.run = [&] {
        return from_object(to_json(twisted_semidirect(
            load_representation(arg_rep), load_bicochain(arg_twist))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("deformed", "bracket deformed by an operator");
    c->add_option("--algebra", arg_algebra, "algebra JSON")->required();
    c->add_option("--operator", arg_operator, "matrix JSON")->required();
    c->callback([&] {
      ctx.command = "build deformed";
      ctx.run = [&] {
        return from_object(to_json(
            deformed_bracket(load_algebra(arg_algebra), load_matrix(arg_operator))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("induce-bracket", "bracket on the module");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "build induce-bracket";
      ctx.run = [&] {
        return from_object(to_json(induced_bracket(load_bundle(arg_bundle))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("induce-rep", "module structure on the algebra");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "build induce-rep";
      ctx.run = [&] {
        return from_object(to_json(induced_representation(load_bundle(arg_bundle))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("ns-from-nijenhuis",
                                    "split products from a Nijenhuis map");
    c->add_option("--algebra", arg_algebra, "algebra JSON")->required();
    c->add_option("--operator", arg_operator, "matrix JSON")->required();
    c->callback([&] {
      ctx.command = "build ns-from-nijenhuis";
      ctx.run = [&] {
        return from_object(to_json(ns_from_nijenhuis(load_algebra(arg_algebra),
                                                     load_matrix(arg_operator))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("ns-from-trb",
                                    "split products on the module");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "build ns-from-trb";
      ctx.run = [&] {
        return from_object(to_json(ns_from_twisted_rb(load_bundle(arg_bundle))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("canonical-trb",
                                    "identity operator of a split algebra");
    c->add_option("--ns", arg_ns, "split algebra JSON")->required();
    c->callback([&] {
      ctx.command = "build canonical-trb";
      ctx.run = [&] {
        return from_object(to_json(canonical_trb(load_ns(arg_ns))));
      };
    });
  }
  {
    auto* c = build->add_subcommand("compatible-ns",
                                    "split products on the algebra side");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->callback([&] {
      ctx.command = "build compatible-ns";
      ctx.run = [&] {
        auto out = compatible_ns_from_invertible(load_bundle(arg_bundle));
        if (!out) {
          throw lra::PreconditionError("operator is not invertible");
        }
        return from_object(to_json(*out));
      };
    });
  }
  {
    auto* c = build->add_subcommand("shift", "twist shift along a cochain");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->add_option("--cochain", arg_cochain, "degree-1 cochain or matrix JSON")
        ->required();
    c->callback([&] {
      ctx.command = "build shift";
      ctx.run = [&] {
        auto out = shift_by_cochain(load_bundle(arg_bundle),
                                    load_matrix(arg_cochain));
        if (!out) {
          throw lra::PreconditionError("shift map is not invertible");
        }
        return from_object(to_json(*out));
      };
    });
  }
  {
    auto* c = build->add_subcommand("gauge", "gauge action of a 1-cocycle");
    c->add_option("--bundle", arg_bundle, "operator bundle JSON")->required();
    c->add_option("--cochain", arg_cochain, "degree-1 cocycle or matrix JSON")
        ->required();
    c->callback([&] {
      ctx.command = "build gauge";
      ctx.run = [&] {
        auto out = gauge_transform(load_bundle(arg_bundle),
                                   load_matrix(arg_cochain));
        if (!out) {
          throw lra::PreconditionError("cocycle is not admissible");
        }
        return from_object(to_json(*out));
      };
    });
  }
  {
    auto* c = build->add_subcommand("trivialize", "cancel the linear term");
    c->add_option("--deformation", arg_deformation, "formal deformation JSON")
        ->required();
    c->add_option("--x", arg_x, "element JSON (coordinate array)")->required();
    c->callback([&] {
      ctx.command = "build trivialize";
      ctx.run = [&] {
        return from_object(to_json(
            trivialization_step(load_formal(arg_deformation), load_vector(arg_x))));
      };
    });
  }

  {
    auto* c = app.add_subcommand("cohomology", "kernel/image dimensions");
    c->add_option("--algebra", arg_algebra,
                  "algebra JSON (uses the regular representation)");
    c->add_option("--rep", arg_rep, "representation JSON");
    c->add_option("--bundle", arg_bundle,
                  "operator bundle JSON (its module; --of-k for the operator "
                  "complex)");
    c->add_option("--degree", arg_degree, "cochain degree")->required();
    c->add_flag("--of-k", arg_of_k, "use the operator complex of the bundle");
    c->add_option("--degree0", arg_degree0,
                  "degree-0 convention: literal | left-minus-right");
    c->callback([&] {
      ctx.command = "cohomology";
      ctx.run = [&] {
        const std::size_t cap = degree_cap_from_env();
        const int given = (arg_algebra.empty() ? 0 : 1) +
                          (arg_rep.empty() ? 0 : 1) +
                          (arg_bundle.empty() ? 0 : 1);
        if (given != 1) {
          throw lra::ShapeError(
              "pass exactly one of --algebra, --rep, --bundle");
        }
        lra::CohomologyDims dims;
        if (!arg_bundle.empty()) {
          Json j = load_input(arg_bundle);
          if (!arg_of_k && j.is_object() && !j.contains("k")) {
            // lenient: a representation file is accepted here too
            dims = cohomology_dims(
                lra::representation_from_json(
                    peel(std::move(j), {"rho_l"}, {"representation"},
                         "representation")),
                arg_degree, cap, convention_from_name(arg_degree0));
          } else {
            lra::TwistedRBData d = lra::twisted_rb_from_json(
                peel(std::move(j), {"k"}, {"bundle", "base"},
                     "operator bundle"));
            dims = arg_of_k
                       ? k_cohomology_dims(d, arg_degree, cap)
                       : cohomology_dims(d.rep, arg_degree, cap,
                                         convention_from_name(arg_degree0));
          }
        } else if (!arg_rep.empty()) {
          dims = cohomology_dims(load_representation(arg_rep), arg_degree, cap,
                                 convention_from_name(arg_degree0));
        } else {
          dims = cohomology_dims(
              regular_representation(load_algebra(arg_algebra)), arg_degree,
              cap, convention_from_name(arg_degree0));
        }
        return from_object(to_json(dims));
      };
    });
  }

  {
    auto* c = deform->add_subcommand("check-linear", "one-term family");
    c->add_option("--deformation", arg_deformation,
                  "linear deformation JSON {base, k1}")
        ->required();
    c->callback([&] {
      ctx.command = "deform check-linear";
      ctx.run = [&] {
        lra::TruncatedFormalDeformation fd = load_formal(arg_deformation);
        if (fd.order() != 1) {
          throw lra::ShapeError("linear check needs exactly one term");
        }
        lra::LinearDeformation ld =
            make_linear_deformation(std::move(fd.base), fd.terms[0]);
        return from_report(check_linear_deformation(ld));
      };
    });
  }
  {
    auto* c = deform->add_subcommand("check-formal", "truncated family");
    c->add_option("--deformation", arg_deformation,
                  "formal deformation JSON {base, terms}")
        ->required();
    c->callback([&] {
      ctx.command = "deform check-formal";
      ctx.run = [&] {
        return from_report(
            check_formal_deformation(load_formal(arg_deformation)));
      };
    });
  }
  {
    auto* c = deform->add_subcommand("check-equivalence",
                                     "equivalence along an element");
    c->add_option("--a", arg_a, "first deformation JSON")->required();
    c->add_option("--b", arg_b, "second deformation JSON")->required();
    c->add_option("--x", arg_x, "element JSON (coordinate array)");
    c->add_option("--datum", arg_datum,
                  "equivalence datum JSON {x, phi_higher, psi_higher}");
    c->add_option("--order", arg_order,
                  "highest power of the parameter to compare (default 1: the "
                  "nine closed-form conditions)");
    c->callback([&] {
      ctx.command = "deform check-equivalence";
      ctx.run = [&] {
        if (arg_x.empty() && arg_datum.empty()) {
          throw lra::ShapeError("pass --x or --datum");
        }
        lra::TruncatedFormalDeformation a = load_formal(arg_a);
        lra::TruncatedFormalDeformation b = load_formal(arg_b);
        lra::EquivalenceDatum datum;
        if (!arg_datum.empty()) {
          datum = lra::equivalence_datum_from_json(load_input(arg_datum));
        } else {
          datum.x = load_vector(arg_x);
        }
        if (arg_order == 1 && datum.phi_higher.empty() &&
            datum.psi_higher.empty()) {
          if (a.order() != 1 || b.order() != 1) {
            throw lra::ShapeError(
                "order-1 equivalence needs one-term deformations");
          }
          lra::LinearDeformation la =
              make_linear_deformation(a.base, a.terms[0]);
          lra::LinearDeformation lb =
              make_linear_deformation(b.base, b.terms[0]);
          return from_report(check_equivalence(la, lb, datum.x));
        }
        return from_report(check_formal_equivalence(a, b, datum, arg_order));
      };
    });
  }

  {
    auto* c = app.add_subcommand("gen", "seeded instance to stdout");
    c->add_option("--seed", arg_seed, "64-bit seed")->required();
    c->add_option("--kind", arg_kind,
                  "algebra | rep | nijenhuis | cocycle | trb | failing-trb")
        ->required();
    c->add_option("--dim-g", profile.dim_g, "algebra dimension (default 2)");
    c->add_option("--dim-v", profile.dim_v, "module dimension (default 2)");
    c->add_option("--max-num", profile.max_numerator,
                  "numerator bound (default 2)");
    c->add_option("--max-den", profile.max_denominator,
                  "denominator bound (default 1)");
    c->add_option("--degree", arg_gen_degree,
                  "cochain degree for --kind cocycle (default 2)");
    c->callback([&] {
      ctx.command = "gen";
      ctx.run = [&] {
        lra::SplitMix64 rng(arg_seed);
        if (arg_kind == "algebra") {
          return from_object(to_json(gen_leibniz(rng.next(), profile)));
        }
        if (arg_kind == "rep") {
          lra::LeibnizAlgebra g = gen_leibniz(rng.next(), profile);
          return from_object(
              to_json(gen_representation(g, rng.next(), profile)));
        }
        if (arg_kind == "nijenhuis") {
          lra::LeibnizAlgebra g = gen_leibniz(rng.next(), profile);
          Json out{{"algebra", to_json(g)},
                   {"operator", to_json(gen_nijenhuis(g, rng.next(), profile))}};
          return from_object(std::move(out));
        }
        if (arg_kind == "cocycle") {
          lra::LeibnizAlgebra g = gen_leibniz(rng.next(), profile);
          lra::Representation r = gen_representation(g, rng.next(), profile);
          Json out{{"representation", to_json(r)},
                   {"cochain",
                    to_json(gen_cocycle(r, arg_gen_degree, rng.next()))}};
          return from_object(std::move(out));
        }
        if (arg_kind == "trb") {
          return from_object(to_json(gen_twisted_rb(rng.next(), profile)));
        }
        if (arg_kind == "failing-trb") {
          return from_object(
              to_json(gen_failing_twisted_rb(rng.next(), profile)));
        }
        throw lra::ShapeError("unknown --kind: " + arg_kind);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = ctx.run();
  } catch (const lra::ShapeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const lra::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);

  if (!ctx.quiet) {
    Json report{{"command", ctx.command}, {"details", std::move(out.details)}};
    if (out.holds.has_value()) report["holds"] = *out.holds;
    if (!ctx.stable) report["elapsed_ms"] = elapsed.count();
    std::cout << lra::dump_sorted(report);
  }
  return out.code;
}
