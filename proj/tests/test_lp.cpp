#include <doctest.h>

#include <cmath>
#include <limits>

#include "lp.hpp"
#include "support.hpp"
#include "validation.hpp"

using vfw::Matrix;
using vfw::Vector;
namespace lp = vfw::lp;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("two-variable knapsack corner") {
    Vector cost(2);
    cost << -1.0, -1.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    prob.lower = Vector::Zero(2);
    lp::add_inequality(prob, Vector::Ones(2), 1.0);

    const lp::LpSolution sol = lp::solve(prob);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sol.point.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.point.minCoeff() >= -1e-12);
}

TEST_CASE("minimum over the unit simplex sits on the cheapest vertex") {
    Vector cost(5);
    cost << 3.0, 1.0, 2.0, 5.0, 4.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    prob.lower = Vector::Zero(5);
    lp::add_equality(prob, Vector::Ones(5), 1.0);

    const lp::LpSolution sol = lp::solve(prob);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sol.point(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("infeasible and unbounded statuses") {
    {
        Vector cost(1);
        cost << 1.0;
        lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
        prob.lower(0) = 1.0;
        lp::add_inequality(prob, -Vector::Ones(1), -2.0);  // -x <= -2  =>  x >= 2
        lp::add_inequality(prob, Vector::Ones(1), 0.5);    //  x <= 0.5
        CHECK(lp::solve(prob).status == lp::LpStatus::Infeasible);
    }
    {
        Vector cost(2);
        cost << -1.0, 0.0;
        lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
        prob.lower = Vector::Zero(2);  // min -x1 with x free upward
        CHECK(lp::solve(prob).status == lp::LpStatus::Unbounded);
    }
}

TEST_CASE("free variables and two-sided bounds") {
    // min x1 + x2 with x1 free but pinned by an equality, x2 in [-2, 3].
    Vector cost(2);
    cost << 1.0, 1.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    prob.lower(1) = -2.0;
    prob.upper(1) = 3.0;
    Vector row(2);
    row << 1.0, 1.0;
    lp::add_equality(prob, row, 4.0);

    const lp::LpSolution sol = lp::solve(prob);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sol.point(0) + sol.point(1) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sol.point(1) <= 3.0 + 1e-12);
    CHECK(sol.point(1) >= -2.0 - 1e-12);
}

TEST_CASE("degenerate vertex does not cycle") {
    // Three constraints meet at the optimum of a 2d problem.
    Vector cost(2);
    cost << -1.0, -1.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    prob.lower = Vector::Zero(2);
    Vector r1(2), r2(2), r3(2);
    r1 << 1.0, 0.0;
    r2 << 0.0, 1.0;
    r3 << 1.0, 1.0;
    lp::add_inequality(prob, r1, 1.0);
    lp::add_inequality(prob, r2, 1.0);
    lp::add_inequality(prob, r3, 2.0);  // redundant at (1,1)

    const lp::LpSolution sol = lp::solve(prob);
    REQUIRE(sol.status == lp::LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("random LPs match the vertex-enumeration oracle") {
    std::mt19937_64 gen(17);
    for (int instance = 0; instance < 30; ++instance) {
        const int n = 2 + static_cast<int>(gen() % 4);
        Vector anchor(n), cost(n);
        for (int j = 0; j < n; ++j) {
            anchor(j) = vfw::rng::uniform(gen, 0.1, 1.5);
            cost(j) = vfw::rng::normal(gen);
        }
        lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
        prob.lower = Vector::Zero(n);
        const int rows = 1 + static_cast<int>(gen() % 5);
        for (int r = 0; r < rows; ++r) {
            Vector a(n);
            for (int j = 0; j < n; ++j) a(j) = vfw::rng::normal(gen);
            lp::add_inequality(prob, a, a.dot(anchor) + vfw::rng::uniform(gen, 0.0, 1.0));
        }
        lp::add_inequality(prob, Vector::Ones(n), anchor.sum() + 2.0);

        const lp::LpSolution sol = lp::solve(prob);
        REQUIRE(sol.status == lp::LpStatus::Optimal);

        const auto vertices = vfw::validation::enumerate_vertices(prob);
        REQUIRE(!vertices.empty());
        double best = kInf;
        for (const Vector& v : vertices) best = std::min(best, cost.dot(v));
        CHECK(std::abs(sol.objective - best) <= 1e-8);

        // Optimality certificate and determinism.
        CHECK(sol.reduced_costs.minCoeff() >= -1e-9);
        const lp::LpSolution again = lp::solve(prob);
        CHECK(again.basis == sol.basis);
        CHECK((again.point - sol.point).lpNorm<Eigen::Infinity>() == 0.0);
    }
}

TEST_CASE("malformed programs are rejected") {
    Vector cost(2);
    cost << 1.0, 1.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    CHECK_THROWS_AS(lp::add_equality(prob, Vector::Ones(3), 1.0), vfw::DimensionError);

    lp::LinearProgram crossing = lp::LinearProgram::minimize(cost);
    crossing.lower(0) = 2.0;
    crossing.upper(0) = 1.0;
    CHECK_THROWS_AS(lp::solve(crossing), vfw::DimensionError);

    lp::LinearProgram bad_rhs = lp::LinearProgram::minimize(cost);
    lp::add_inequality(bad_rhs, Vector::Ones(2), kInf);
    CHECK_THROWS_AS(lp::solve(bad_rhs), vfw::DimensionError);
}

TEST_CASE("lp validation suite passes") {
    const auto report = vfw::validation::run_lp_suite(1, 60);
    for (const auto& item : report.items) {
        INFO(item.name, ": ", item.detail);
        CHECK(item.passed);
    }
    CHECK(report.ok());
}
