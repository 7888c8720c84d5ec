// Exercises the shared library strictly through the C interface: opaque
// handles, status codes and the thread-local error message.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <vfw.h>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_path(const char* stem) {
    static int counter = 0;
    return std::string("/tmp/") + stem + "-" + std::to_string(++counter);
}

struct Problem {
    vfw_problem* ptr = nullptr;
    ~Problem() { vfw_problem_free(ptr); }
};

struct Result {
    vfw_result* ptr = nullptr;
    ~Result() { vfw_result_free(ptr); }
};

struct Bench {
    vfw_bench* ptr = nullptr;
    ~Bench() { vfw_bench_free(ptr); }
};

}  // namespace

TEST_CASE("version and config defaults") {
    CHECK(std::strlen(vfw_version()) > 0);

    vfw_solver_config config;
    vfw_solver_config_init(&config);
    CHECK(config.stepsize_mode == VFW_STEP_ARMIJO);
    CHECK(config.beta == 0.1);
    CHECK(config.tau == 0.5);
    CHECK(config.epsilon == 1e-5);
    CHECK(config.max_iterations == 10000);
    CHECK(config.max_backtracks == 100);
    CHECK(config.lipschitz_override == 0.0);
    CHECK(config.keep_trace == 1);
}

TEST_CASE("problem loading and error reporting") {
    Problem builtin;
    REQUIRE(vfw_problem_builtin("portfolio-d2007", &builtin.ptr) == VFW_OK);
    CHECK(vfw_problem_num_variables(builtin.ptr) == 5);
    CHECK(vfw_problem_num_objectives(builtin.ptr) == 2);

    Problem unknown;
    CHECK(vfw_problem_builtin("nope", &unknown.ptr) == VFW_ERR_PARSE);
    CHECK(unknown.ptr == nullptr);
    CHECK(std::strlen(vfw_last_error()) > 0);

    const char* json = R"({
      "cone": {"kind": "orthant", "m": 2, "norm": "linf"},
      "objectives": [{"c": [1, 0]}, {"c": [0, 1]}],
      "region": {"kind": "simplex", "n": 2}
    })";
    Problem parsed;
    REQUIRE(vfw_problem_from_json(json, &parsed.ptr) == VFW_OK);
    CHECK(vfw_problem_num_variables(parsed.ptr) == 2);

    Problem bad_json;
    CHECK(vfw_problem_from_json("{", &bad_json.ptr) == VFW_ERR_PARSE);

    const std::string path = temp_path("vfw-capi-problem") + ".json";
    {
        std::ofstream out(path);
        out << json;
    }
    Problem from_file;
    CHECK(vfw_problem_from_file(path.c_str(), &from_file.ptr) == VFW_OK);
    Problem missing;
    CHECK(vfw_problem_from_file("/nonexistent/x.json", &missing.ptr) == VFW_ERR_IO);
    std::remove(path.c_str());

    CHECK(vfw_problem_from_json(nullptr, &bad_json.ptr) == VFW_ERR_INVALID_ARGUMENT);
    CHECK(vfw_problem_builtin("portfolio-d2007", nullptr) == VFW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("solve through the C surface") {
    Problem problem;
    REQUIRE(vfw_problem_resolve("portfolio-d2007", &problem.ptr) == VFW_OK);
    vfw_solver_config config;
    vfw_solver_config_init(&config);
    config.keep_trace = 1;

    Result random_start;
    REQUIRE(vfw_solve(problem.ptr, &config, nullptr, 0, 7, &random_start.ptr) == VFW_OK);
    CHECK(vfw_result_status(random_start.ptr) == VFW_SOLVE_STATIONARY);
    CHECK(vfw_result_iterations(random_start.ptr) > 0);
    CHECK(vfw_result_gap(random_start.ptr) <= 0.0);
    CHECK(std::abs(vfw_result_gap(random_start.ptr)) <= config.epsilon);
    CHECK(vfw_result_wall_seconds(random_start.ptr) >= 0.0);

    std::vector<double> point(5), objectives(2);
    REQUIRE(vfw_result_point(random_start.ptr, point.data(), 5) == VFW_OK);
    REQUIRE(vfw_result_objectives(random_start.ptr, objectives.data(), 2) == VFW_OK);
    double sum = 0.0;
    for (double w : point) {
        CHECK(w >= -1e-9);
        sum += w;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(objectives[0] < 0.0);  // some return is always available
    CHECK(vfw_result_point(random_start.ptr, point.data(), 4) == VFW_ERR_INVALID_ARGUMENT);

    const std::vector<double> equal(5, 0.2);
    Result explicit_start;
    REQUIRE(vfw_solve(problem.ptr, &config, equal.data(), 5, 0, &explicit_start.ptr) == VFW_OK);
    CHECK(vfw_result_status(explicit_start.ptr) == VFW_SOLVE_STATIONARY);

    const std::vector<double> infeasible{1.0, 1.0, 0.0, 0.0, 0.0};
    Result rejected;
    CHECK(vfw_solve(problem.ptr, &config, infeasible.data(), 5, 0, &rejected.ptr) ==
          VFW_ERR_INFEASIBLE_START);
    CHECK(rejected.ptr == nullptr);

    Result short_x0;
    CHECK(vfw_solve(problem.ptr, &config, equal.data(), 3, 0, &short_x0.ptr) ==
          VFW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("trace files are deterministic for a fixed seed") {
    Problem problem;
    REQUIRE(vfw_problem_builtin("portfolio-d2007", &problem.ptr) == VFW_OK);
    vfw_solver_config config;
    vfw_solver_config_init(&config);
    config.keep_trace = 1;

    const std::string path_a = temp_path("vfw-trace-a") + ".csv";
    const std::string path_b = temp_path("vfw-trace-b") + ".csv";
    for (const std::string& path : {path_a, path_b}) {
        Result result;
        REQUIRE(vfw_solve(problem.ptr, &config, nullptr, 0, 123, &result.ptr) == VFW_OK);
        REQUIRE(vfw_result_write_trace_csv(result.ptr, path.c_str()) == VFW_OK);
    }
    const std::string a = read_file(path_a);
    const std::string b = read_file(path_b);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.rfind("k,v,t,backtracks", 0) == 0);
    std::remove(path_a.c_str());
    std::remove(path_b.c_str());
}

TEST_CASE("bench through the C surface") {
    Problem problem;
    REQUIRE(vfw_problem_builtin("portfolio-d2007", &problem.ptr) == VFW_OK);
    vfw_solver_config armijo, adaptive;
    vfw_solver_config_init(&armijo);
    vfw_solver_config_init(&adaptive);
    adaptive.stepsize_mode = VFW_STEP_ADAPTIVE;

    Bench bench;
    REQUIRE(vfw_bench_run(problem.ptr, &armijo, &adaptive, 5, 11, 2, &bench.ptr) == VFW_OK);
    CHECK(vfw_bench_num_records(bench.ptr) == 10);
    CHECK(vfw_bench_count_with_status(bench.ptr, VFW_SOLVE_STATIONARY) == 10);
    CHECK(vfw_bench_mean_iterations(bench.ptr, VFW_STEP_ARMIJO) > 0.0);
    CHECK(vfw_bench_mean_iterations(bench.ptr, VFW_STEP_ADAPTIVE) >
          vfw_bench_mean_iterations(bench.ptr, VFW_STEP_ARMIJO));
    CHECK(vfw_bench_dominated_count(bench.ptr, 1e-6) >= 0);

    const std::string front = temp_path("vfw-front") + ".csv";
    const std::string stats_csv = temp_path("vfw-stats") + ".csv";
    const std::string stats_json = temp_path("vfw-stats") + ".json";
    REQUIRE(vfw_bench_write_front_csv(bench.ptr, front.c_str()) == VFW_OK);
    REQUIRE(vfw_bench_write_stats_csv(bench.ptr, stats_csv.c_str()) == VFW_OK);
    REQUIRE(vfw_bench_write_stats_json(bench.ptr, stats_json.c_str()) == VFW_OK);
    CHECK(read_file(front).rfind("start_id,algorithm,", 0) == 0);
    CHECK(read_file(stats_csv).find("\narmijo,") != std::string::npos);
    CHECK(read_file(stats_json).find("\"adaptive\"") != std::string::npos);
    std::remove(front.c_str());
    std::remove(stats_csv.c_str());
    std::remove(stats_json.c_str());

    CHECK(vfw_bench_write_front_csv(bench.ptr, "/nonexistent/dir/front.csv") == VFW_ERR_IO);
}

TEST_CASE("check suites through the C surface") {
    char* report = nullptr;
    int32_t passed = 0, failed = 0;
    REQUIRE(vfw_check_run("descent", 0, &report, &passed, &failed) == VFW_OK);
    CHECK(passed > 0);
    CHECK(failed == 0);
    REQUIRE(report != nullptr);
    CHECK(std::strstr(report, "[pass]") != nullptr);
    vfw_string_free(report);

    CHECK(vfw_check_run("bogus", 0, nullptr, &passed, &failed) == VFW_ERR_INVALID_ARGUMENT);
    CHECK(vfw_check_run(nullptr, 0, nullptr, &passed, &failed) == VFW_ERR_INVALID_ARGUMENT);
}
