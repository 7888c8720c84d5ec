// Command-line frontend for the vfw solver library. Talks to the library
// exclusively through the C API in vfw.h.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <vfw.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitMaxIterations = 2;
constexpr int kExitLineSearchFailure = 3;

struct CommonOptions {
    std::string problem;
    double epsilon = 1e-5;
    double beta = 0.1;
    double tau = 0.5;
    std::int64_t max_iterations = 10000;
    std::int64_t max_backtracks = 100;
    double lipschitz = 0.0;
    std::uint64_t seed = 0;
};

void add_common_flags(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--problem", opts.problem, "Problem file path or builtin name (portfolio-d2007)")
        ->required();
    cmd.add_option("--epsilon", opts.epsilon, "Stationarity tolerance on |v|")->capture_default_str();
    cmd.add_option("--beta", opts.beta, "Armijo slope factor in (0,1)")->capture_default_str();
    cmd.add_option("--tau", opts.tau, "Backtracking shrink factor in (0,1)")->capture_default_str();
    cmd.add_option("--max-iter", opts.max_iterations, "Iteration budget")->capture_default_str();
    cmd.add_option("--max-backtracks", opts.max_backtracks, "Armijo backtrack budget")
        ->capture_default_str();
    cmd.add_option("--lipschitz", opts.lipschitz,
                   "Override for the gradient Lipschitz constant (adaptive mode)");
    cmd.add_option("--seed", opts.seed, "Seed for all randomness")->capture_default_str();
}

vfw_solver_config make_config(const CommonOptions& opts, vfw_stepsize_mode mode, bool keep_trace) {
    vfw_solver_config config;
    vfw_solver_config_init(&config);
    config.stepsize_mode = mode;
    config.beta = opts.beta;
    config.tau = opts.tau;
    config.epsilon = opts.epsilon;
    config.max_iterations = opts.max_iterations;
    config.max_backtracks = opts.max_backtracks;
    config.lipschitz_override = opts.lipschitz;
    config.keep_trace = keep_trace ? 1 : 0;
    return config;
}

int fail_input(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kExitInputError;
}

int fail_api(const char* what) {
    std::fprintf(stderr, "error: %s: %s\n", what, vfw_last_error());
    return kExitInputError;
}

bool parse_point(const std::string& text, std::vector<double>& out) {
    out.clear();
    std::string token;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            if (token.empty()) return false;
            try {
                size_t used = 0;
                out.push_back(std::stod(token, &used));
                if (used != token.size()) return false;
            } catch (const std::exception&) {
                return false;
            }
            token.clear();
        } else {
            token += text[i];
        }
    }
    return !out.empty();
}

void print_vector(const char* key, const std::vector<double>& values) {
    std::printf("%s=", key);
    for (size_t i = 0; i < values.size(); ++i) {
        std::printf("%s%.12g", i == 0 ? "" : ",", values[i]);
    }
    std::printf("\n");
}

class ProblemHandle {
public:
    explicit ProblemHandle(vfw_problem* p) : ptr_(p) {}
    ~ProblemHandle() { vfw_problem_free(ptr_); }
    ProblemHandle(const ProblemHandle&) = delete;
    ProblemHandle& operator=(const ProblemHandle&) = delete;
    vfw_problem* get() const { return ptr_; }

private:
    vfw_problem* ptr_;
};

int run_solve(const CommonOptions& opts, const std::string& algorithm, const std::string& x0_text,
              const std::string& trace_path) {
    vfw_stepsize_mode mode;
    if (algorithm == "armijo") {
        mode = VFW_STEP_ARMIJO;
    } else if (algorithm == "adaptive") {
        mode = VFW_STEP_ADAPTIVE;
    } else {
        return fail_input("unknown algorithm \"" + algorithm + "\" (expected armijo|adaptive)");
    }

    vfw_problem* raw = nullptr;
    if (vfw_problem_resolve(opts.problem.c_str(), &raw) != VFW_OK) {
        return fail_api("cannot load problem");
    }
    ProblemHandle problem(raw);
    const int32_t n = vfw_problem_num_variables(problem.get());
    const int32_t m = vfw_problem_num_objectives(problem.get());

    std::vector<double> x0;
    const double* x0_data = nullptr;
    if (x0_text != "random") {
        if (!parse_point(x0_text, x0)) {
            return fail_input("--x0 must be \"random\" or a comma-separated point");
        }
        if (static_cast<int32_t>(x0.size()) != n) {
            return fail_input("x0 has " + std::to_string(x0.size()) + " entries, problem needs " +
                              std::to_string(n));
        }
        x0_data = x0.data();
    }

    const vfw_solver_config config = make_config(opts, mode, !trace_path.empty());
    vfw_result* result = nullptr;
    const vfw_status status = vfw_solve(problem.get(), &config, x0_data,
                                        static_cast<int32_t>(x0.size()), opts.seed, &result);
    if (status == VFW_ERR_INFEASIBLE_START) {
        std::printf("status=input-error\n");
        return fail_input("x0 infeasible");
    }
    if (status != VFW_OK) return fail_api("solve failed");

    std::vector<double> point(static_cast<size_t>(n));
    std::vector<double> objectives(static_cast<size_t>(m));
    vfw_result_point(result, point.data(), n);
    vfw_result_objectives(result, objectives.data(), m);
    const int32_t solve_status = vfw_result_status(result);
    const int64_t iterations = vfw_result_iterations(result);
    const double gap = vfw_result_gap(result);
    const double seconds = vfw_result_wall_seconds(result);

    const char* status_name = solve_status == VFW_SOLVE_STATIONARY        ? "stationary"
                              : solve_status == VFW_SOLVE_MAX_ITERATIONS ? "max-iterations"
                                                                          : "line-search-failure";
    std::printf("status=%s\n", status_name);
    std::printf("algorithm=%s\n", algorithm.c_str());
    std::printf("iterations=%" PRId64 "\n", iterations);
    std::printf("final_v=%.12g\n", gap);
    std::printf("wall_seconds=%.6g\n", seconds);
    print_vector("x", point);
    print_vector("F", objectives);

    if (!trace_path.empty()) {
        if (vfw_result_write_trace_csv(result, trace_path.c_str()) != VFW_OK) {
            vfw_result_free(result);
            return fail_api("cannot write trace");
        }
        std::printf("trace=%s\n", trace_path.c_str());
    }

    std::printf("\n%s after %" PRId64 " iterations, |v| = %.3g (epsilon = %.3g).\n", status_name,
                iterations, gap < 0 ? -gap : gap, opts.epsilon);
    vfw_result_free(result);

    switch (solve_status) {
        case VFW_SOLVE_STATIONARY: return kExitOk;
        case VFW_SOLVE_MAX_ITERATIONS: return kExitMaxIterations;
        default: return kExitLineSearchFailure;
    }
}

int run_bench(const CommonOptions& opts, int32_t starts, int32_t jobs, const std::string& out_dir) {
    vfw_problem* raw = nullptr;
    if (vfw_problem_resolve(opts.problem.c_str(), &raw) != VFW_OK) {
        return fail_api("cannot load problem");
    }
    ProblemHandle problem(raw);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) return fail_input("cannot create output directory \"" + out_dir + "\"");

    const vfw_solver_config armijo = make_config(opts, VFW_STEP_ARMIJO, false);
    const vfw_solver_config adaptive = make_config(opts, VFW_STEP_ADAPTIVE, false);

    vfw_bench* bench = nullptr;
    if (vfw_bench_run(problem.get(), &armijo, &adaptive, starts, opts.seed, jobs, &bench) != VFW_OK) {
        return fail_api("bench failed");
    }

    const std::string front = out_dir + "/front.csv";
    const std::string stats_csv = out_dir + "/stats.csv";
    const std::string stats_json = out_dir + "/stats.json";
    if (vfw_bench_write_front_csv(bench, front.c_str()) != VFW_OK ||
        vfw_bench_write_stats_csv(bench, stats_csv.c_str()) != VFW_OK ||
        vfw_bench_write_stats_json(bench, stats_json.c_str()) != VFW_OK) {
        vfw_bench_free(bench);
        return fail_api("cannot write outputs");
    }

    const int32_t records = vfw_bench_num_records(bench);
    const int32_t stationary = vfw_bench_count_with_status(bench, VFW_SOLVE_STATIONARY);
    const double armijo_iters = vfw_bench_mean_iterations(bench, VFW_STEP_ARMIJO);
    const double adaptive_iters = vfw_bench_mean_iterations(bench, VFW_STEP_ADAPTIVE);
    const double armijo_cpu = vfw_bench_mean_cpu_seconds(bench, VFW_STEP_ARMIJO);
    const double adaptive_cpu = vfw_bench_mean_cpu_seconds(bench, VFW_STEP_ADAPTIVE);
    const int32_t dominated = vfw_bench_dominated_count(bench, 1e-6);

    std::printf("records=%d\n", records);
    std::printf("stationary=%d\n", stationary);
    std::printf("armijo_mean_iterations=%.6g\n", armijo_iters);
    std::printf("adaptive_mean_iterations=%.6g\n", adaptive_iters);
    std::printf("armijo_mean_cpu_seconds=%.6g\n", armijo_cpu);
    std::printf("adaptive_mean_cpu_seconds=%.6g\n", adaptive_cpu);
    std::printf("dominated=%d\n", dominated);
    std::printf("front=%s\nstats_csv=%s\nstats_json=%s\n", front.c_str(), stats_csv.c_str(),
                stats_json.c_str());

    std::printf("\n%-10s %18s %18s\n", "algorithm", "mean iterations", "mean cpu seconds");
    std::printf("%-10s %18.3f %18.6f\n", "armijo", armijo_iters, armijo_cpu);
    std::printf("%-10s %18.3f %18.6f\n", "adaptive", adaptive_iters, adaptive_cpu);
    std::printf("%d/%d runs stationary; %d exported points dominated (kept in CSV).\n", stationary,
                records, dominated);

    vfw_bench_free(bench);
    return kExitOk;
}

int run_check(const std::string& suite, std::uint64_t seed) {
    char* report = nullptr;
    int32_t passed = 0;
    int32_t failed = 0;
    if (vfw_check_run(suite.c_str(), seed, &report, &passed, &failed) != VFW_OK) {
        return fail_api("check failed");
    }
    if (report) {
        std::fputs(report, stdout);
        vfw_string_free(report);
    }
    std::printf("suite=%s\npassed=%d\nfailed=%d\n", suite.c_str(), passed, failed);
    return failed == 0 ? kExitOk : kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frank-Wolfe solver for cone-ordered vector optimization"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(vfw_version()));

    CommonOptions solve_opts;
    std::string algorithm = "armijo";
    std::string x0_text = "random";
    std::string trace_path;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Run one solve and report the final point");
    add_common_flags(*solve_cmd, solve_opts);
    solve_cmd->add_option("--algorithm", algorithm, "Stepsize rule: armijo|adaptive")
        ->capture_default_str();
    solve_cmd->add_option("--x0", x0_text, "Start: \"random\" or comma-separated coordinates")
        ->capture_default_str();
    solve_cmd->add_option("--trace", trace_path, "Write the iterate trace CSV here");

    CommonOptions bench_opts;
    int32_t starts = 50;
    int32_t jobs = 1;
    std::string out_dir = ".";
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Multistart experiment with both stepsize rules");
    add_common_flags(*bench_cmd, bench_opts);
    bench_cmd->add_option("--starts", starts, "Number of shared start points")->capture_default_str();
    bench_cmd->add_option("--jobs", jobs, "Parallel solves")->capture_default_str();
    bench_cmd->add_option("--out-dir", out_dir, "Directory for front.csv/stats.csv/stats.json")
        ->capture_default_str();

    std::string suite = "all";
    std::uint64_t check_seed = 0;
    CLI::App* check_cmd = app.add_subcommand("check", "Run the validation suites");
    check_cmd->add_option("--suite", suite, "cone|descent|lp|all")->capture_default_str();
    check_cmd->add_option("--seed", check_seed, "Seed for randomized properties")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    }

    if (solve_cmd->parsed()) return run_solve(solve_opts, algorithm, x0_text, trace_path);
    if (bench_cmd->parsed()) return run_bench(bench_opts, starts, jobs, out_dir);
    return run_check(suite, check_seed);
}
