/* vfw -- Frank-Wolfe solver for cone-ordered vector optimization.
 *
 * C interface to the solver library. All objects are opaque handles created
 * and destroyed through these functions; every fallible call returns a
 * vfw_status and leaves a human-readable message in vfw_last_error() on
 * failure. Handles are not thread-safe individually, but distinct handles
 * may be used from distinct threads concurrently.
 */
#ifndef VFW_H
#define VFW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(VFW_BUILD)
#    define VFW_API __declspec(dllexport)
#  else
#    define VFW_API __declspec(dllimport)
#  endif
#else
#  define VFW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vfw_status {
    VFW_OK = 0,
    VFW_ERR_INVALID_ARGUMENT = 1,
    VFW_ERR_PARSE = 2,
    VFW_ERR_UNSUPPORTED = 3,
    VFW_ERR_INFEASIBLE_START = 4,
    VFW_ERR_IO = 5,
    VFW_ERR_INTERNAL = 6
} vfw_status;

typedef enum vfw_stepsize_mode {
    VFW_STEP_ARMIJO = 0,
    VFW_STEP_ADAPTIVE = 1
} vfw_stepsize_mode;

typedef enum vfw_solve_status {
    VFW_SOLVE_STATIONARY = 0,
    VFW_SOLVE_MAX_ITERATIONS = 1,
    VFW_SOLVE_LINE_SEARCH_FAILURE = 2
} vfw_solve_status;

/* Opaque handles. */
typedef struct vfw_problem vfw_problem;
typedef struct vfw_result vfw_result;
typedef struct vfw_bench vfw_bench;

/* Solver parameters. Initialize with vfw_solver_config_init before use;
 * lipschitz_override <= 0 means "estimate from the objective". */
typedef struct vfw_solver_config {
    int32_t stepsize_mode;      /* vfw_stepsize_mode */
    double beta;                /* Armijo slope factor, in (0,1) */
    double tau;                 /* backtracking shrink factor, in (0,1) */
    double epsilon;             /* stop when |v| <= epsilon */
    int64_t max_iterations;
    int64_t max_backtracks;
    double lipschitz_override;
    int32_t keep_trace;         /* nonzero (default): record every iterate */
} vfw_solver_config;

VFW_API const char* vfw_version(void);

/* Message describing the most recent failure on this thread. */
VFW_API const char* vfw_last_error(void);

VFW_API void vfw_solver_config_init(vfw_solver_config* config);

/* Problem loading: JSON document, JSON file, or a builtin name
 * ("portfolio-d2007"). */
VFW_API vfw_status vfw_problem_from_json(const char* json_text, vfw_problem** out);
VFW_API vfw_status vfw_problem_from_file(const char* path, vfw_problem** out);
VFW_API vfw_status vfw_problem_builtin(const char* name, vfw_problem** out);
VFW_API vfw_status vfw_problem_resolve(const char* name_or_path, vfw_problem** out);
VFW_API void vfw_problem_free(vfw_problem* problem);

VFW_API int32_t vfw_problem_num_variables(const vfw_problem* problem);
VFW_API int32_t vfw_problem_num_objectives(const vfw_problem* problem);

/* Runs one solve. x0 may be NULL, in which case a uniform feasible start is
 * drawn from the seed; otherwise x0_len must equal the variable count. */
VFW_API vfw_status vfw_solve(const vfw_problem* problem, const vfw_solver_config* config,
                             const double* x0, int32_t x0_len, uint64_t seed, vfw_result** out);
VFW_API void vfw_result_free(vfw_result* result);

VFW_API int32_t vfw_result_status(const vfw_result* result);  /* vfw_solve_status */
VFW_API int64_t vfw_result_iterations(const vfw_result* result);
VFW_API double vfw_result_gap(const vfw_result* result);
VFW_API double vfw_result_wall_seconds(const vfw_result* result);
VFW_API vfw_status vfw_result_point(const vfw_result* result, double* buffer, int32_t length);
VFW_API vfw_status vfw_result_objectives(const vfw_result* result, double* buffer, int32_t length);
VFW_API vfw_status vfw_result_write_trace_csv(const vfw_result* result, const char* path);

/* Multistart experiment: both stepsize rules from the same seeded start set,
 * 2 * starts records. jobs > 1 runs solves in parallel without changing any
 * output. */
VFW_API vfw_status vfw_bench_run(const vfw_problem* problem, const vfw_solver_config* armijo,
                                 const vfw_solver_config* adaptive, int32_t starts, uint64_t seed,
                                 int32_t jobs, vfw_bench** out);
VFW_API void vfw_bench_free(vfw_bench* bench);

VFW_API int32_t vfw_bench_num_records(const vfw_bench* bench);
VFW_API int32_t vfw_bench_count_with_status(const vfw_bench* bench, int32_t solve_status);
VFW_API double vfw_bench_mean_iterations(const vfw_bench* bench, int32_t mode);
VFW_API double vfw_bench_mean_cpu_seconds(const vfw_bench* bench, int32_t mode);
/* Number of exported points strictly dominated by another one (tolerance
 * tol in every objective). */
VFW_API int32_t vfw_bench_dominated_count(const vfw_bench* bench, double tol);

VFW_API vfw_status vfw_bench_write_front_csv(const vfw_bench* bench, const char* path);
VFW_API vfw_status vfw_bench_write_stats_csv(const vfw_bench* bench, const char* path);
VFW_API vfw_status vfw_bench_write_stats_json(const vfw_bench* bench, const char* path);

/* Runs a validation suite ("cone" | "lp" | "descent" | "all"). On success
 * *report holds a newline-separated account of every property checked; free
 * it with vfw_string_free. */
VFW_API vfw_status vfw_check_run(const char* suite, uint64_t seed, char** report, int32_t* passed,
                                 int32_t* failed);
VFW_API void vfw_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* VFW_H */
