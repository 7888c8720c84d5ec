#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "solver.hpp"

namespace vfw::bench {

/// Outcome of one solve within a multistart experiment.
struct RunRecord {
    int start_id = 0;  // 1-based
    solver::StepsizeMode algorithm = solver::StepsizeMode::Armijo;
    Vector start_point;
    Vector final_point;
    Vector final_objectives;
    long iterations = 0;
    double cpu_seconds = 0.0;  // wall clock around solve() only
    double final_gap = 0.0;
    solver::SolveStatus status = solver::SolveStatus::MaxIterations;
};

struct AlgorithmStats {
    long runs = 0;
    double mean_iterations = 0.0;
    double median_iterations = 0.0;
    double min_iterations = 0.0;
    double max_iterations = 0.0;
    double mean_cpu_seconds = 0.0;
    double median_cpu_seconds = 0.0;
    double min_cpu_seconds = 0.0;
    double max_cpu_seconds = 0.0;
};

struct AggregateStats {
    AlgorithmStats armijo;
    AlgorithmStats adaptive;
};

/// The shared start set: start i (1-based) is drawn from a fresh generator
/// seeded with seed ^ i, so the set depends only on the seed, never on
/// execution order.
std::vector<Vector> sample_starts(const region::Polytope& feasible, int n_starts, uint64_t seed);

/// Runs both stepsize rules from the same seeded start set; two records per
/// start, ordered by (start_id, armijo-then-adaptive) regardless of the
/// parallelism degree. Solver failures are recorded in the run status, not
/// raised.
std::vector<RunRecord> multistart(const cone::OrderingCone& ordering,
                                  const objective::QuadraticVectorObjective& objective,
                                  const region::Polytope& feasible,
                                  const solver::SolverConfig& armijo_config,
                                  const solver::SolverConfig& adaptive_config, int n_starts,
                                  uint64_t seed, int jobs = 1);

AggregateStats aggregate(const std::vector<RunRecord>& records);

/// Flags records whose final objectives are strictly dominated (every
/// component smaller by more than tol) by some other record.
std::vector<bool> strictly_dominated(const std::vector<RunRecord>& records, double tol = 1e-6);

/// front CSV: start_id, algorithm, iterations, cpu_seconds, final_v,
/// x1..xn, then one column per objective. Deterministic order and formatting;
/// re-exporting identical records is byte-identical.
void write_front_csv(const std::vector<RunRecord>& records, std::ostream& out);

/// stats CSV: one data row per algorithm.
void write_stats_csv(const AggregateStats& stats, std::ostream& out);

void write_stats_json(const AggregateStats& stats, std::ostream& out);

void write_front_csv_file(const std::vector<RunRecord>& records, const std::string& path);
void write_stats_csv_file(const AggregateStats& stats, const std::string& path);
void write_stats_json_file(const AggregateStats& stats, const std::string& path);

}  // namespace vfw::bench
