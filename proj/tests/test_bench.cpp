#include <doctest.h>

#include <sstream>

#include "bench.hpp"
#include "problem.hpp"
#include "support.hpp"

using vfw::Matrix;
using vfw::Vector;
namespace bench = vfw::bench;
namespace solver = vfw::solver;

namespace {

std::vector<bench::RunRecord> portfolio_records(int starts, uint64_t seed, int jobs = 1) {
    const auto problem = vfw::problem::builtin_problem("portfolio-d2007");
    solver::SolverConfig armijo;
    solver::SolverConfig adaptive;
    adaptive.stepsize_mode = solver::StepsizeMode::Adaptive;
    return bench::multistart(problem.ordering, problem.objective, problem.feasible, armijo,
                             adaptive, starts, seed, jobs);
}

}  // namespace

TEST_CASE("multistart runs both rules from shared starts") {
    const auto records = portfolio_records(3, 11);
    REQUIRE(records.size() == 6);
    for (size_t i = 0; i < records.size(); i += 2) {
        CHECK(records[i].algorithm == solver::StepsizeMode::Armijo);
        CHECK(records[i + 1].algorithm == solver::StepsizeMode::Adaptive);
        CHECK(records[i].start_id == static_cast<int>(i / 2) + 1);
        CHECK(records[i + 1].start_id == records[i].start_id);
        // Same start for both rules.
        CHECK((records[i].start_point - records[i + 1].start_point).lpNorm<Eigen::Infinity>() ==
              0.0);
        CHECK(records[i].status == solver::SolveStatus::Stationary);
        CHECK(std::abs(records[i].final_gap) <= 1e-5);
    }
}

TEST_CASE("multistart is reproducible and parallelism-invariant") {
    const auto first = portfolio_records(4, 7);
    const auto second = portfolio_records(4, 7);
    const auto parallel = portfolio_records(4, 7, 2);
    REQUIRE(first.size() == second.size());
    REQUIRE(first.size() == parallel.size());
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].iterations == second[i].iterations);
        CHECK((first[i].final_point - second[i].final_point).lpNorm<Eigen::Infinity>() == 0.0);
        CHECK(first[i].final_gap == second[i].final_gap);
        CHECK(first[i].iterations == parallel[i].iterations);
        CHECK((first[i].final_point - parallel[i].final_point).lpNorm<Eigen::Infinity>() == 0.0);
    }
    // Different seeds sample different starts.
    const auto other = portfolio_records(4, 8);
    CHECK((first[0].start_point - other[0].start_point).lpNorm<Eigen::Infinity>() > 0.0);
}

TEST_CASE("all-stationary toy problem reports zero iterations") {
    const auto toy = vfw::problem::parse_problem_json(R"({
      "cone": {"kind": "orthant", "m": 2, "norm": "linf"},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 2}
    })");
    solver::SolverConfig armijo;
    solver::SolverConfig adaptive;
    adaptive.stepsize_mode = solver::StepsizeMode::Adaptive;
    const auto records =
        bench::multistart(toy.ordering, toy.objective, toy.feasible, armijo, adaptive, 5, 0);
    for (const auto& rec : records) {
        CHECK(rec.status == solver::SolveStatus::Stationary);
        CHECK(rec.iterations == 0);
    }
}

TEST_CASE("aggregate means and order statistics") {
    bench::RunRecord a;
    a.algorithm = solver::StepsizeMode::Armijo;
    a.iterations = 3;
    a.cpu_seconds = 0.25;
    bench::RunRecord b = a;
    b.iterations = 5;
    b.cpu_seconds = 0.75;
    bench::RunRecord c;
    c.algorithm = solver::StepsizeMode::Adaptive;
    c.iterations = 7;
    c.cpu_seconds = 1.5;

    const auto stats = bench::aggregate({a, b, c});
    CHECK(stats.armijo.runs == 2);
    CHECK(stats.armijo.mean_iterations == 4.0);
    CHECK(stats.armijo.median_iterations == 4.0);
    CHECK(stats.armijo.min_iterations == 3.0);
    CHECK(stats.armijo.max_iterations == 5.0);
    CHECK(stats.armijo.mean_cpu_seconds == 0.5);
    CHECK(stats.adaptive.runs == 1);
    CHECK(stats.adaptive.mean_iterations == 7.0);
    CHECK(stats.adaptive.median_cpu_seconds == 1.5);

    CHECK_THROWS_AS(bench::aggregate({}), vfw::Error);
}

TEST_CASE("front export layout and determinism") {
    const auto records = portfolio_records(2, 5);
    std::ostringstream first, second;
    bench::write_front_csv(records, first);
    bench::write_front_csv(records, second);
    CHECK(first.str() == second.str());  // byte-identical re-export

    std::istringstream lines(first.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "start_id,algorithm,iterations,cpu_seconds,final_v,x1,x2,x3,x4,x5,"
          "neg_return(f1),risk(f2)");
    int data_lines = 0;
    for (std::string line; std::getline(lines, line);) ++data_lines;
    CHECK(data_lines == 4);  // one per record

    const auto stats = bench::aggregate(records);
    std::ostringstream stats_csv;
    bench::write_stats_csv(stats, stats_csv);
    std::istringstream stats_lines(stats_csv.str());
    std::string stats_header, armijo_row, adaptive_row, extra;
    REQUIRE(std::getline(stats_lines, stats_header));
    REQUIRE(std::getline(stats_lines, armijo_row));
    REQUIRE(std::getline(stats_lines, adaptive_row));
    CHECK_FALSE(std::getline(stats_lines, extra));  // exactly 2 data rows
    CHECK(armijo_row.rfind("armijo,", 0) == 0);
    CHECK(adaptive_row.rfind("adaptive,", 0) == 0);

    std::ostringstream stats_json;
    bench::write_stats_json(stats, stats_json);
    CHECK(stats_json.str().find("\"mean_iterations\"") != std::string::npos);
}

TEST_CASE("dominated points are flagged, never dropped") {
    bench::RunRecord good;
    good.final_objectives = Vector::Zero(2);
    bench::RunRecord worse = good;
    worse.final_objectives = Vector::Constant(2, 1.0);
    bench::RunRecord mixed = good;
    mixed.final_objectives = Vector(2);
    mixed.final_objectives << -1.0, 2.0;

    const auto flags = bench::strictly_dominated({good, worse, mixed}, 1e-6);
    CHECK_FALSE(flags[0]);
    CHECK(flags[1]);
    CHECK_FALSE(flags[2]);

    // Survivors are mutually non-dominating.
    const auto records = portfolio_records(10, 3);
    const auto dominated = bench::strictly_dominated(records, 1e-6);
    std::vector<bench::RunRecord> kept;
    for (size_t i = 0; i < records.size(); ++i) {
        if (!dominated[i]) kept.push_back(records[i]);
    }
    const auto recheck = bench::strictly_dominated(kept, 1e-6);
    for (bool f : recheck) CHECK_FALSE(f);
    // The CSV still carries every record.
    std::ostringstream out;
    bench::write_front_csv(records, out);
    std::istringstream lines(out.str());
    int count = -1;  // header
    for (std::string line; std::getline(lines, line);) ++count;
    CHECK(count == static_cast<int>(records.size()));
}

TEST_CASE("sampled starts depend only on the seed") {
    const auto simplex = vfw::region::Polytope::unit_simplex(5);
    const auto starts_a = bench::sample_starts(simplex, 8, 42);
    const auto starts_b = bench::sample_starts(simplex, 8, 42);
    REQUIRE(starts_a.size() == 8);
    for (size_t i = 0; i < starts_a.size(); ++i) {
        CHECK((starts_a[i] - starts_b[i]).lpNorm<Eigen::Infinity>() == 0.0);
        CHECK(simplex.contains(starts_a[i], 1e-12));
    }
    // A prefix of a longer run matches: per-start generators are independent.
    const auto starts_c = bench::sample_starts(simplex, 3, 42);
    for (size_t i = 0; i < starts_c.size(); ++i) {
        CHECK((starts_a[i] - starts_c[i]).lpNorm<Eigen::Infinity>() == 0.0);
    }
    CHECK_THROWS_AS(bench::sample_starts(simplex, 0, 1), vfw::Error);
}
