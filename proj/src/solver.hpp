#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "cone.hpp"
#include "common.hpp"
#include "objective.hpp"
#include "region.hpp"

namespace vfw::solver {

enum class StepsizeMode { Armijo, Adaptive };

struct SolverConfig {
    StepsizeMode stepsize_mode = StepsizeMode::Armijo;
    double beta = 0.1;                 // Armijo slope factor, in (0,1)
    double tau = 0.5;                  // backtracking shrink factor, in (0,1)
    double epsilon = 1e-5;             // stop when |v| <= epsilon
    long max_iterations = 10000;
    long max_backtracks = 100;
    std::optional<double> lipschitz_override;  // replaces the objective's L
    bool keep_trace = true;
};

/// One completed step: the state at x_k together with the direction data and
/// the accepted stepsize that produced x_{k+1}.
struct IterateRecord {
    long k = 0;
    Vector x;            // iterate before the step
    double v = 0.0;      // gap value, < 0 for any recorded step
    Vector s;            // subproblem minimizer
    Vector d;            // s - x
    double t = 0.0;      // accepted stepsize, in (0, 1]
    Vector objectives;   // F(x)
    double scalarized = 0.0;  // phi(F(x))
    int backtracks = 0;  // Armijo shrink count (0 for adaptive steps)
};

enum class SolveStatus { Stationary, MaxIterations, LineSearchFailure };

struct SolveResult {
    SolveStatus status = SolveStatus::MaxIterations;
    Vector x;                   // final point
    double v = 0.0;             // gap at the final point
    Vector objectives;          // F at the final point
    long iterations = 0;        // completed steps (== trace size when traced)
    std::vector<IterateRecord> trace;
    double wall_seconds = 0.0;
};

/// psi_x(s) = phi(JF(x)(s - x)); the scalarized linearization whose minimum
/// over Omega defines the search direction.
double psi(const cone::OrderingCone& ordering, const objective::QuadraticVectorObjective& objective,
           const Vector& x, const Vector& s);

struct Direction {
    Vector s;       // minimizer of psi_x over Omega
    double v;       // optimal value, always <= 0
    Vector d;       // s - x
};

/// Solves min_{s in Omega} psi_x(s) as the LP
///     min gamma  s.t.  <w_j' JF(x), s - x> <= gamma for each generator w_j,
///                      s in Omega,
/// which is exact whenever the cone has a max-linear representation.
/// The returned value is certified nonpositive (within 1e-9).
Direction direction_subproblem(const cone::OrderingCone& ordering,
                               const objective::QuadraticVectorObjective& objective,
                               const region::Polytope& feasible, const Vector& x);

/// Backtracking search for the largest t in {1, tau, tau^2, ...} with
///     F(x + t d) - F(x) - t beta JF(x) d  in  -C.
/// Requires a strict descent direction (phi(JF(x) d) < 0). Returns the
/// accepted stepsize, or nullopt when max_backtracks shrinkages were not
/// enough (numerical breakdown or violated smoothness).
std::optional<double> armijo_line_search(const cone::OrderingCone& ordering,
                                         const objective::QuadraticVectorObjective& objective,
                                         const Vector& x, const Vector& d, const Matrix& jac,
                                         double beta, double tau, long max_backtracks,
                                         int* backtracks_out = nullptr);

/// Closed-form stepsize min{1, -v / (L ||d||^2)} for the Lipschitz path.
double adaptive_stepsize(double v, const Vector& d, double lipschitz);

/// Runs the Frank-Wolfe iteration from x0 until |v| <= epsilon, the
/// iteration budget is spent, or (Armijo mode) the line search fails.
SolveResult solve(const cone::OrderingCone& ordering,
                  const objective::QuadraticVectorObjective& objective,
                  const region::Polytope& feasible, const SolverConfig& config, const Vector& x0);

/// Writes the iterate trace as CSV: one row per completed step, the final
/// state queried from the result fields. Deterministic formatting.
void write_trace_csv(const SolveResult& result, std::ostream& out);

const char* to_string(SolveStatus status);
const char* to_string(StepsizeMode mode);

}  // namespace vfw::solver
