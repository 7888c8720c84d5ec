#include "solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "lp.hpp"

namespace vfw::solver {

namespace {

constexpr double kGapSignTol = 1e-9;     // certified v <= 0 within this slack
constexpr double kArmijoResidualTol = 1e-12;

void validate_config(const SolverConfig& config) {
    if (!(config.beta > 0.0 && config.beta < 1.0)) throw Error("solver: beta must lie in (0,1)");
    if (!(config.tau > 0.0 && config.tau < 1.0)) throw Error("solver: tau must lie in (0,1)");
    if (!(config.epsilon > 0.0)) throw Error("solver: epsilon must be positive");
    if (config.max_iterations < 1) throw Error("solver: max_iterations must be at least 1");
    if (config.max_backtracks < 0) throw Error("solver: max_backtracks must be nonnegative");
    if (config.lipschitz_override && !(*config.lipschitz_override > 0.0)) {
        throw Error("solver: Lipschitz override must be positive");
    }
}

void format_value(std::string& line, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    line += buf;
}

}  // namespace

double psi(const cone::OrderingCone& ordering, const objective::QuadraticVectorObjective& objective,
           const Vector& x, const Vector& s) {
    if (x.size() != objective.num_variables() || s.size() != objective.num_variables()) {
        throw DimensionError("solver: psi arguments have wrong dimension");
    }
    return ordering.oriented_distance(objective.jacobian(x) * (s - x));
}

Direction direction_subproblem(const cone::OrderingCone& ordering,
                               const objective::QuadraticVectorObjective& objective,
                               const region::Polytope& feasible, const Vector& x) {
    if (!ordering.has_max_linear_generators()) {
        throw UnsupportedError(
            "solver: the direction subproblem needs a cone with a max-linear "
            "oriented distance (orthant with the max norm)");
    }
    const int n = objective.num_variables();
    if (x.size() != n) throw DimensionError("solver: point has wrong dimension");

    const Matrix jac = objective.jacobian(x);

    // Variables (s, gamma); gamma free, s constrained to the region.
    Vector cost = Vector::Zero(n + 1);
    cost(n) = 1.0;
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);

    const Matrix& req = feasible.eq_lhs();
    prob.eq_lhs = Matrix::Zero(req.rows(), n + 1);
    prob.eq_lhs.leftCols(n) = req;
    prob.eq_rhs = feasible.eq_rhs();

    const Matrix& rin = feasible.in_lhs();
    const auto gens = static_cast<Eigen::Index>(ordering.max_linear_generators().size());
    prob.in_lhs = Matrix::Zero(rin.rows() + gens, n + 1);
    prob.in_rhs = Vector::Zero(rin.rows() + gens);
    prob.in_lhs.topLeftCorner(rin.rows(), n) = rin;
    prob.in_rhs.head(rin.rows()) = feasible.in_rhs();
    for (Eigen::Index g = 0; g < gens; ++g) {
        const Vector row = jac.transpose() * ordering.max_linear_generators()[static_cast<size_t>(g)];
        prob.in_lhs.row(rin.rows() + g).head(n) = row.transpose();
        prob.in_lhs(rin.rows() + g, n) = -1.0;
        prob.in_rhs(rin.rows() + g) = row.dot(x);
    }

    prob.lower.head(n) = feasible.lower();
    prob.upper.head(n) = feasible.upper();

    const lp::LpSolution sol = lp::solve(prob);
    if (sol.status != lp::LpStatus::Optimal) {
        throw InternalError("solver: direction subproblem LP did not solve");
    }

    Direction dir;
    dir.s = sol.point.head(n);
    dir.v = sol.objective;
    dir.d = dir.s - x;
    if (dir.v > kGapSignTol) {
        throw InternalError("solver: positive gap value " + std::to_string(dir.v));
    }
    return dir;
}

std::optional<double> armijo_line_search(const cone::OrderingCone& ordering,
                                         const objective::QuadraticVectorObjective& objective,
                                         const Vector& x, const Vector& d, const Matrix& jac,
                                         double beta, double tau, long max_backtracks,
                                         int* backtracks_out) {
    const Vector fx = objective.value(x);
    const Vector slope = jac * d;
    double t = 1.0;
    for (long bt = 0; bt <= max_backtracks; ++bt) {
        const Vector residual = objective.value(x + t * d) - fx - (t * beta) * slope;
        if (ordering.oriented_distance(residual) <= kArmijoResidualTol) {
            if (backtracks_out) *backtracks_out = static_cast<int>(bt);
            return t;
        }
        t *= tau;
    }
    return std::nullopt;
}

double adaptive_stepsize(double v, const Vector& d, double lipschitz) {
    if (!(v < 0.0)) throw InternalError("solver: adaptive stepsize needs v < 0");
    if (!(lipschitz > 0.0)) throw Error("solver: adaptive stepsize needs L > 0");
    const double dd = d.squaredNorm();
    if (dd <= 0.0) throw InternalError("solver: zero direction with negative gap");
    return std::min(1.0, -v / (lipschitz * dd));
}

SolveResult solve(const cone::OrderingCone& ordering,
                  const objective::QuadraticVectorObjective& objective,
                  const region::Polytope& feasible, const SolverConfig& config, const Vector& x0) {
    validate_config(config);
    if (x0.size() != feasible.dimension() || objective.num_variables() != feasible.dimension() ||
        objective.num_objectives() != ordering.dimension()) {
        throw DimensionError("solver: cone/objective/region/start dimensions disagree");
    }
    if (!feasible.contains(x0, lp::kFeasTol)) {
        throw InfeasibleStartError("solver: x0 is not feasible");
    }

    const double lipschitz = config.lipschitz_override.value_or(objective.lipschitz_constant());

    SolveResult result;
    Vector x = x0;

    const auto started = std::chrono::steady_clock::now();
    for (long k = 0;; ++k) {
        const Direction dir = direction_subproblem(ordering, objective, feasible, x);
        if (std::abs(dir.v) <= config.epsilon) {
            result.status = SolveStatus::Stationary;
            result.v = dir.v;
            break;
        }
        if (k >= config.max_iterations) {
            result.status = SolveStatus::MaxIterations;
            result.v = dir.v;
            break;
        }

        double t = 0.0;
        int backtracks = 0;
        if (config.stepsize_mode == StepsizeMode::Armijo) {
            const auto accepted = armijo_line_search(ordering, objective, x, dir.d,
                                                     objective.jacobian(x), config.beta, config.tau,
                                                     config.max_backtracks, &backtracks);
            if (!accepted) {
                result.status = SolveStatus::LineSearchFailure;
                result.v = dir.v;
                break;
            }
            t = *accepted;
        } else {
            t = adaptive_stepsize(dir.v, dir.d, lipschitz);
        }

        if (config.keep_trace) {
            IterateRecord rec;
            rec.k = k;
            rec.x = x;
            rec.v = dir.v;
            rec.s = dir.s;
            rec.d = dir.d;
            rec.t = t;
            rec.objectives = objective.value(x);
            rec.scalarized = ordering.oriented_distance(rec.objectives);
            rec.backtracks = backtracks;
            result.trace.push_back(std::move(rec));
        }

        x += t * dir.d;
        result.iterations = k + 1;
    }
    const auto finished = std::chrono::steady_clock::now();

    result.x = std::move(x);
    result.objectives = objective.value(result.x);
    result.wall_seconds = std::chrono::duration<double>(finished - started).count();
    return result;
}

void write_trace_csv(const SolveResult& result, std::ostream& out) {
    const Eigen::Index n = result.x.size();
    const Eigen::Index m = result.objectives.size();
    std::string line = "k,v,t,backtracks";
    for (Eigen::Index j = 0; j < n; ++j) line += ",x" + std::to_string(j + 1);
    for (Eigen::Index i = 0; i < m; ++i) line += ",f" + std::to_string(i + 1);
    line += ",phi\n";
    out << line;

    for (const IterateRecord& rec : result.trace) {
        line = std::to_string(rec.k);
        line += ',';
        format_value(line, rec.v);
        line += ',';
        format_value(line, rec.t);
        line += ',';
        line += std::to_string(rec.backtracks);
        for (Eigen::Index j = 0; j < n; ++j) {
            line += ',';
            format_value(line, rec.x(j));
        }
        for (Eigen::Index i = 0; i < m; ++i) {
            line += ',';
            format_value(line, rec.objectives(i));
        }
        line += ',';
        format_value(line, rec.scalarized);
        line += '\n';
        out << line;
    }
}

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::Stationary: return "stationary";
        case SolveStatus::MaxIterations: return "max-iterations";
        case SolveStatus::LineSearchFailure: return "line-search-failure";
    }
    return "?";
}

const char* to_string(StepsizeMode mode) {
    switch (mode) {
        case StepsizeMode::Armijo: return "armijo";
        case StepsizeMode::Adaptive: return "adaptive";
    }
    return "?";
}

}  // namespace vfw::solver
