#include <doctest.h>

#include <fstream>

#include "problem.hpp"
#include "solver.hpp"
#include "support.hpp"

using vfw::Vector;
namespace problem = vfw::problem;

namespace {

const char* kToyJson = R"({
  "cone": {"kind": "orthant", "m": 2, "norm": "linf"},
  "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
  "region": {"kind": "simplex", "n": 2}
})";

}  // namespace

TEST_CASE("parses the documented schema") {
    const auto toy = problem::parse_problem_json(kToyJson);
    CHECK(toy.ordering.dimension() == 2);
    CHECK(toy.objective.num_objectives() == 2);
    CHECK(toy.objective.num_variables() == 2);
    CHECK(toy.feasible.tag() == vfw::region::Tag::UnitSimplex);

    const auto quadratic = problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 1, "norm": "linf"},
      "objectives": [{"Q": [[1, 0], [0, 1]], "c": [-0.5, -0.5]}],
      "region": {"kind": "box", "lower": [0, 0], "upper": [1, 1]}
    })");
    CHECK(quadratic.objective.num_objectives() == 1);
    CHECK(quadratic.feasible.tag() == vfw::region::Tag::Box);

    const auto general = problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 1},
      "objectives": [{"c": [1, 1]}],
      "region": {"kind": "general", "n": 2,
                 "A_in": [[1, 1]], "b_in": [1],
                 "lower": [0, 0]}
    })");
    CHECK(general.feasible.tag() == vfw::region::Tag::General);
}

TEST_CASE("builtin objectives inside a JSON document") {
    const auto doc = problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 2, "norm": "linf"},
      "objectives": "portfolio-d2007",
      "region": {"kind": "simplex", "n": 5}
    })");
    CHECK(doc.objective.num_variables() == 5);
    CHECK(doc.objective.value(Vector::Unit(5, 2))(0) == doctest::Approx(-0.04085));
}

TEST_CASE("builtin problem names") {
    CHECK(problem::is_builtin_problem("portfolio-d2007"));
    CHECK_FALSE(problem::is_builtin_problem("portfolio"));
    const auto builtin = problem::builtin_problem("portfolio-d2007");
    CHECK(builtin.feasible.dimension() == 5);
    CHECK_THROWS_AS(problem::builtin_problem("nope"), vfw::ParseError);
}

TEST_CASE("schema violations are parse errors") {
    CHECK_THROWS_AS(problem::parse_problem_json("not json"), vfw::ParseError);
    CHECK_THROWS_AS(problem::parse_problem_json("{}"), vfw::ParseError);
    // Ragged matrix.
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 1},
      "objectives": [{"Q": [[1, 0], [0]], "c": [0, 0]}],
      "region": {"kind": "simplex", "n": 2}
    })"),
                    vfw::ParseError);
    // Asymmetric Q.
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 1},
      "objectives": [{"Q": [[0, 1], [0, 0]], "c": [0, 0]}],
      "region": {"kind": "simplex", "n": 2}
    })"),
                    vfw::ParseError);
    // Cone dimension disagrees with the number of objectives.
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 3},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 2}
    })"),
                    vfw::ParseError);
    // Region dimension disagrees with the objectives.
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 2},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 3}
    })"),
                    vfw::ParseError);
    // Unknown kinds.
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "ice-cream", "m": 2},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 2}
    })"),
                    vfw::ParseError);
    CHECK_THROWS_AS(problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 2, "norm": "l7"},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 2}
    })"),
                    vfw::ParseError);
}

TEST_CASE("file loading and resolution") {
    const std::string path = testing_support::temp_path("vfw-problem") + ".json";
    {
        std::ofstream out(path);
        out << kToyJson;
    }
    const auto loaded = problem::load_problem_file(path);
    CHECK(loaded.objective.num_variables() == 2);

    const auto resolved = problem::resolve_problem(path);
    CHECK(resolved.objective.num_variables() == 2);
    const auto builtin = problem::resolve_problem("portfolio-d2007");
    CHECK(builtin.objective.num_variables() == 5);

    CHECK_THROWS_AS(problem::load_problem_file("/nonexistent/problem.json"), vfw::IoError);
    std::remove(path.c_str());
}

TEST_CASE("parsed problems solve end to end") {
    const auto toy = problem::parse_problem_json(kToyJson);
    vfw::solver::SolverConfig config;
    std::mt19937_64 gen(1);
    const auto result = vfw::solver::solve(toy.ordering, toy.objective, toy.feasible, config,
                                           toy.feasible.sample_uniform(gen));
    CHECK(result.status == vfw::solver::SolveStatus::Stationary);
    CHECK(result.iterations == 0);  // the toy problem is stationary everywhere
}
