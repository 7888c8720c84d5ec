#pragma once

#include <vector>

#include "common.hpp"

namespace vfw::lp {

/// Pivot tolerance for the simplex method; entries smaller in magnitude are
/// treated as zero.
inline constexpr double kPivotTol = 1e-10;
/// Primal feasibility tolerance; inherited by every module that consumes LP
/// solutions.
inline constexpr double kFeasTol = 1e-9;

/// min cost'x  s.t.  eq_lhs x = eq_rhs,  in_lhs x <= in_rhs,  lower <= x <= upper.
/// Bounds may be -inf / +inf. Systems may be empty (0 rows).
struct LinearProgram {
    Vector cost;
    Matrix eq_lhs;
    Vector eq_rhs;
    Matrix in_lhs;
    Vector in_rhs;
    Vector lower;
    Vector upper;

    /// An LP over `cost.size()` free variables with no rows yet.
    static LinearProgram minimize(Vector cost);

    int num_variables() const { return static_cast<int>(cost.size()); }
};

void add_equality(LinearProgram& prob, const Vector& coeffs, double rhs);
void add_inequality(LinearProgram& prob, const Vector& coeffs, double rhs);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Vector point;                    // original variables, valid when Optimal
    double objective = 0.0;          // cost . point
    std::vector<int> basis;          // standard-form basic columns, row order
    Vector reduced_costs;            // standard-form reduced costs at the optimum
};

/// Dense two-phase simplex with Bland's rule. Deterministic: identical
/// inputs produce identical bases. Infeasible/unbounded are statuses, not
/// exceptions; malformed input throws DimensionError.
LpSolution solve(const LinearProgram& prob);

}  // namespace vfw::lp
