#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "common.hpp"
#include "cone.hpp"
#include "lp.hpp"

namespace vfw::validation {

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    int passed() const;
    int failed() const;
    bool ok() const { return failed() == 0; }
};

/// Oriented-distance calculus: the six scalarization properties on
/// randomized inputs for every built-in cone instance, the closed-form
/// distance examples per region, the max-linear agreement, and the
/// catalog-vs-sampled-boundary cross check.
CheckReport run_cone_suite(uint64_t seed = 0);

/// Simplex solver vs exhaustive vertex enumeration on randomized small LPs,
/// plus optimality certificates and determinism.
CheckReport run_lp_suite(uint64_t seed = 0, int instances = 200);

/// Componentwise and scalarized descent inequalities on random feasible
/// pairs of the portfolio instance, plus the curvature certificate.
CheckReport run_descent_suite(uint64_t seed = 0, int pairs = 1000);

std::vector<CheckReport> run_all_suites(uint64_t seed = 0);

/// Runs the suite selected by name ("cone" | "lp" | "descent" | "all").
std::vector<CheckReport> run_suites_by_name(const std::string& name, uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Reference oracles. These deliberately avoid the implementation paths they
// are used to cross-check: vertex enumeration never pivots, the boundary
// oracle never evaluates a closed-form distance, and the finite-difference
// Jacobian only calls the black-box evaluation.

/// All vertices of the LP's feasible set (equalities forced active, the
/// remaining active set enumerated over inequality and finite-bound rows).
/// Intended for small instances only.
std::vector<Vector> enumerate_vertices(const lp::LinearProgram& prob, double feas_tol = 1e-7);

/// A parametrized piece of a set boundary, sampled by the distance oracle.
struct BoundaryCurve {
    std::function<Vector(double)> point;
    double t_begin = 0.0;
    double t_end = 0.0;
};

/// min over curves of the distance from y, in the given norm, computed by
/// dense sampling with progressive window refinement (resolution ~1e-8).
double sampled_boundary_distance(const Vector& y, const std::vector<BoundaryCurve>& curves,
                                 cone::Norm norm);

/// Central finite-difference Jacobian of an arbitrary vector map.
Matrix finite_difference_jacobian(const std::function<Vector(const Vector&)>& map, const Vector& x,
                                  double step = 1e-6);

}  // namespace vfw::validation
