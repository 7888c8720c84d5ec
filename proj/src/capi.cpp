#include "vfw.h"

#include <cstring>
#include <fstream>
#include <functional>
#include <new>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "problem.hpp"
#include "solver.hpp"
#include "validation.hpp"

using vfw::Vector;

struct vfw_problem {
    vfw::problem::Problem impl;
};

struct vfw_result {
    vfw::solver::SolveResult impl;
};

struct vfw_bench {
    std::vector<vfw::bench::RunRecord> records;
    vfw::bench::AggregateStats stats;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) {
    g_last_error = message;
}

vfw_status status_from_exception() {
    try {
        throw;
    } catch (const vfw::DimensionError& e) {
        set_error(e.what());
        return VFW_ERR_INVALID_ARGUMENT;
    } catch (const vfw::ParseError& e) {
        set_error(e.what());
        return VFW_ERR_PARSE;
    } catch (const vfw::UnsupportedError& e) {
        set_error(e.what());
        return VFW_ERR_UNSUPPORTED;
    } catch (const vfw::InfeasibleStartError& e) {
        set_error(e.what());
        return VFW_ERR_INFEASIBLE_START;
    } catch (const vfw::IoError& e) {
        set_error(e.what());
        return VFW_ERR_IO;
    } catch (const vfw::InternalError& e) {
        set_error(e.what());
        return VFW_ERR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return VFW_ERR_INVALID_ARGUMENT;
    } catch (...) {
        set_error("unknown error");
        return VFW_ERR_INTERNAL;
    }
}

template <typename Fn>
vfw_status guarded(Fn&& fn) {
    try {
        fn();
        return VFW_OK;
    } catch (...) {
        return status_from_exception();
    }
}

vfw_status require(bool condition, const char* message) {
    if (condition) return VFW_OK;
    set_error(message);
    return VFW_ERR_INVALID_ARGUMENT;
}

vfw::solver::SolverConfig convert_config(const vfw_solver_config& config) {
    vfw::solver::SolverConfig out;
    out.stepsize_mode = config.stepsize_mode == VFW_STEP_ADAPTIVE
                            ? vfw::solver::StepsizeMode::Adaptive
                            : vfw::solver::StepsizeMode::Armijo;
    out.beta = config.beta;
    out.tau = config.tau;
    out.epsilon = config.epsilon;
    out.max_iterations = static_cast<long>(config.max_iterations);
    out.max_backtracks = static_cast<long>(config.max_backtracks);
    if (config.lipschitz_override > 0.0) out.lipschitz_override = config.lipschitz_override;
    out.keep_trace = config.keep_trace != 0;
    return out;
}

vfw_status copy_vector(const Vector& source, double* buffer, int32_t length, const char* what) {
    if (!buffer) return require(false, "vfw: null output buffer");
    if (length != source.size()) {
        set_error(std::string("vfw: ") + what + " buffer has wrong length");
        return VFW_ERR_INVALID_ARGUMENT;
    }
    std::memcpy(buffer, source.data(), sizeof(double) * static_cast<size_t>(length));
    return VFW_OK;
}

vfw_status load_problem(vfw_problem** out, const std::function<vfw::problem::Problem()>& loader) {
    if (!out) return require(false, "vfw: null output handle");
    *out = nullptr;
    return guarded([&] { *out = new vfw_problem{loader()}; });
}

}  // namespace

extern "C" {

const char* vfw_version(void) {
    return "0.1.0";
}

const char* vfw_last_error(void) {
    return g_last_error.c_str();
}

void vfw_solver_config_init(vfw_solver_config* config) {
    if (!config) return;
    config->stepsize_mode = VFW_STEP_ARMIJO;
    config->beta = 0.1;
    config->tau = 0.5;
    config->epsilon = 1e-5;
    config->max_iterations = 10000;
    config->max_backtracks = 100;
    config->lipschitz_override = 0.0;
    config->keep_trace = 1;
}

vfw_status vfw_problem_from_json(const char* json_text, vfw_problem** out) {
    if (!json_text) return require(false, "vfw: null JSON text");
    return load_problem(out, [&] { return vfw::problem::parse_problem_json(json_text); });
}

vfw_status vfw_problem_from_file(const char* path, vfw_problem** out) {
    if (!path) return require(false, "vfw: null path");
    return load_problem(out, [&] { return vfw::problem::load_problem_file(path); });
}

vfw_status vfw_problem_builtin(const char* name, vfw_problem** out) {
    if (!name) return require(false, "vfw: null builtin name");
    return load_problem(out, [&] { return vfw::problem::builtin_problem(name); });
}

vfw_status vfw_problem_resolve(const char* name_or_path, vfw_problem** out) {
    if (!name_or_path) return require(false, "vfw: null problem name");
    return load_problem(out, [&] { return vfw::problem::resolve_problem(name_or_path); });
}

void vfw_problem_free(vfw_problem* problem) {
    delete problem;
}

int32_t vfw_problem_num_variables(const vfw_problem* problem) {
    return problem ? problem->impl.objective.num_variables() : 0;
}

int32_t vfw_problem_num_objectives(const vfw_problem* problem) {
    return problem ? problem->impl.objective.num_objectives() : 0;
}

vfw_status vfw_solve(const vfw_problem* problem, const vfw_solver_config* config, const double* x0,
                     int32_t x0_len, uint64_t seed, vfw_result** out) {
    if (vfw_status st = require(problem && config && out, "vfw: null argument"); st != VFW_OK) return st;
    *out = nullptr;
    return guarded([&] {
        Vector start;
        if (x0) {
            if (x0_len != problem->impl.objective.num_variables()) {
                throw vfw::DimensionError("vfw: x0 has wrong length");
            }
            start = Eigen::Map<const Vector>(x0, x0_len);
        } else {
            std::mt19937_64 gen(seed);
            start = problem->impl.feasible.sample_uniform(gen);
        }
        auto result = vfw::solver::solve(problem->impl.ordering, problem->impl.objective,
                                         problem->impl.feasible, convert_config(*config), start);
        *out = new vfw_result{std::move(result)};
    });
}

void vfw_result_free(vfw_result* result) {
    delete result;
}

int32_t vfw_result_status(const vfw_result* result) {
    if (!result) return VFW_SOLVE_MAX_ITERATIONS;
    switch (result->impl.status) {
        case vfw::solver::SolveStatus::Stationary: return VFW_SOLVE_STATIONARY;
        case vfw::solver::SolveStatus::MaxIterations: return VFW_SOLVE_MAX_ITERATIONS;
        case vfw::solver::SolveStatus::LineSearchFailure: return VFW_SOLVE_LINE_SEARCH_FAILURE;
    }
    return VFW_SOLVE_MAX_ITERATIONS;
}

int64_t vfw_result_iterations(const vfw_result* result) {
    return result ? result->impl.iterations : 0;
}

double vfw_result_gap(const vfw_result* result) {
    return result ? result->impl.v : 0.0;
}

double vfw_result_wall_seconds(const vfw_result* result) {
    return result ? result->impl.wall_seconds : 0.0;
}

vfw_status vfw_result_point(const vfw_result* result, double* buffer, int32_t length) {
    if (vfw_status st = require(result != nullptr, "vfw: null result"); st != VFW_OK) return st;
    return copy_vector(result->impl.x, buffer, length, "point");
}

vfw_status vfw_result_objectives(const vfw_result* result, double* buffer, int32_t length) {
    if (vfw_status st = require(result != nullptr, "vfw: null result"); st != VFW_OK) return st;
    return copy_vector(result->impl.objectives, buffer, length, "objectives");
}

vfw_status vfw_result_write_trace_csv(const vfw_result* result, const char* path) {
    if (vfw_status st = require(result && path, "vfw: null argument"); st != VFW_OK) return st;
    return guarded([&] {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw vfw::IoError(std::string("vfw: cannot write \"") + path + "\"");
        vfw::solver::write_trace_csv(result->impl, out);
        if (!out) throw vfw::IoError(std::string("vfw: write to \"") + path + "\" failed");
    });
}

vfw_status vfw_bench_run(const vfw_problem* problem, const vfw_solver_config* armijo,
                         const vfw_solver_config* adaptive, int32_t starts, uint64_t seed,
                         int32_t jobs, vfw_bench** out) {
    if (vfw_status st = require(problem && armijo && adaptive && out, "vfw: null argument");
        st != VFW_OK) {
        return st;
    }
    *out = nullptr;
    return guarded([&] {
        auto records = vfw::bench::multistart(problem->impl.ordering, problem->impl.objective,
                                              problem->impl.feasible, convert_config(*armijo),
                                              convert_config(*adaptive), starts, seed,
                                              jobs < 1 ? 1 : jobs);
        auto stats = vfw::bench::aggregate(records);
        *out = new vfw_bench{std::move(records), std::move(stats)};
    });
}

void vfw_bench_free(vfw_bench* bench) {
    delete bench;
}

int32_t vfw_bench_num_records(const vfw_bench* bench) {
    return bench ? static_cast<int32_t>(bench->records.size()) : 0;
}

int32_t vfw_bench_count_with_status(const vfw_bench* bench, int32_t solve_status) {
    if (!bench) return 0;
    int32_t count = 0;
    for (const auto& rec : bench->records) {
        int32_t status = VFW_SOLVE_MAX_ITERATIONS;
        switch (rec.status) {
            case vfw::solver::SolveStatus::Stationary: status = VFW_SOLVE_STATIONARY; break;
            case vfw::solver::SolveStatus::MaxIterations: status = VFW_SOLVE_MAX_ITERATIONS; break;
            case vfw::solver::SolveStatus::LineSearchFailure:
                status = VFW_SOLVE_LINE_SEARCH_FAILURE;
                break;
        }
        if (status == solve_status) ++count;
    }
    return count;
}

double vfw_bench_mean_iterations(const vfw_bench* bench, int32_t mode) {
    if (!bench) return 0.0;
    return mode == VFW_STEP_ADAPTIVE ? bench->stats.adaptive.mean_iterations
                                     : bench->stats.armijo.mean_iterations;
}

double vfw_bench_mean_cpu_seconds(const vfw_bench* bench, int32_t mode) {
    if (!bench) return 0.0;
    return mode == VFW_STEP_ADAPTIVE ? bench->stats.adaptive.mean_cpu_seconds
                                     : bench->stats.armijo.mean_cpu_seconds;
}

int32_t vfw_bench_dominated_count(const vfw_bench* bench, double tol) {
    if (!bench) return 0;
    const std::vector<bool> flags = vfw::bench::strictly_dominated(bench->records, tol);
    int32_t count = 0;
    for (bool f : flags) count += f ? 1 : 0;
    return count;
}

vfw_status vfw_bench_write_front_csv(const vfw_bench* bench, const char* path) {
    if (vfw_status st = require(bench && path, "vfw: null argument"); st != VFW_OK) return st;
    return guarded([&] { vfw::bench::write_front_csv_file(bench->records, path); });
}

vfw_status vfw_bench_write_stats_csv(const vfw_bench* bench, const char* path) {
    if (vfw_status st = require(bench && path, "vfw: null argument"); st != VFW_OK) return st;
    return guarded([&] { vfw::bench::write_stats_csv_file(bench->stats, path); });
}

vfw_status vfw_bench_write_stats_json(const vfw_bench* bench, const char* path) {
    if (vfw_status st = require(bench && path, "vfw: null argument"); st != VFW_OK) return st;
    return guarded([&] { vfw::bench::write_stats_json_file(bench->stats, path); });
}

vfw_status vfw_check_run(const char* suite, uint64_t seed, char** report, int32_t* passed,
                         int32_t* failed) {
    if (vfw_status st = require(suite && passed && failed, "vfw: null argument"); st != VFW_OK) {
        return st;
    }
    *passed = 0;
    *failed = 0;
    if (report) *report = nullptr;
    return guarded([&] {
        const auto reports = vfw::validation::run_suites_by_name(suite, seed);
        std::ostringstream text;
        for (const auto& rep : reports) {
            *passed += rep.passed();
            *failed += rep.failed();
            for (const auto& item : rep.items) {
                text << '[' << (item.passed ? "pass" : "FAIL") << "] " << rep.suite << ": "
                     << item.name << " (" << item.detail << ")\n";
            }
        }
        if (report) {
            const std::string str = text.str();
            char* buffer = new char[str.size() + 1];
            std::memcpy(buffer, str.c_str(), str.size() + 1);
            *report = buffer;
        }
    });
}

void vfw_string_free(char* text) {
    delete[] text;
}

}  // extern "C"
