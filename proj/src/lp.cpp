#include "lp.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace vfw::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr long kMaxPivots = 200000;

void validate(const LinearProgram& prob) {
    const int p = prob.num_variables();
    if (p <= 0) throw DimensionError("lp: no variables");
    auto check_system = [&](const Matrix& lhs, const Vector& rhs, const char* what) {
        if (lhs.rows() != rhs.size()) {
            throw DimensionError(std::string("lp: ") + what + " row count mismatch");
        }
        if (lhs.rows() > 0 && lhs.cols() != p) {
            throw DimensionError(std::string("lp: ") + what + " column count mismatch");
        }
        for (Eigen::Index r = 0; r < rhs.size(); ++r) {
            if (!std::isfinite(rhs(r))) throw DimensionError("lp: right-hand side must be finite");
        }
    };
    check_system(prob.eq_lhs, prob.eq_rhs, "equality");
    check_system(prob.in_lhs, prob.in_rhs, "inequality");
    if (prob.lower.size() != p || prob.upper.size() != p) {
        throw DimensionError("lp: bound vectors must match the variable count");
    }
    for (int j = 0; j < p; ++j) {
        if (prob.lower(j) > prob.upper(j)) throw DimensionError("lp: crossing bounds");
    }
}

// Standard form: min c'z s.t. A z = b, z >= 0, with every original variable
// split as x_j = z_j - z_{p+j} and all bounds/inequalities turned into rows
// with one slack column each. Problems here are tiny, so the size of the
// uniform transformation does not matter.
struct StandardForm {
    Matrix a;
    Vector b;
    Vector c;
    int split = 0;  // columns 0..2*split-1 are the +/- parts
};

StandardForm build_standard_form(const LinearProgram& prob) {
    const int p = prob.num_variables();
    const int n_eq = static_cast<int>(prob.eq_lhs.rows());
    const int n_in = static_cast<int>(prob.in_lhs.rows());

    int n_bound_rows = 0;
    for (int j = 0; j < p; ++j) {
        if (std::isfinite(prob.lower(j))) ++n_bound_rows;
        if (std::isfinite(prob.upper(j))) ++n_bound_rows;
    }

    const int rows = n_eq + n_in + n_bound_rows;
    const int slacks = n_in + n_bound_rows;
    const int cols = 2 * p + slacks;

    StandardForm sf;
    sf.split = p;
    sf.a = Matrix::Zero(rows, cols);
    sf.b = Vector::Zero(rows);
    sf.c = Vector::Zero(cols);
    sf.c.head(p) = prob.cost;
    sf.c.segment(p, p) = -prob.cost;

    int row = 0;
    for (int r = 0; r < n_eq; ++r, ++row) {
        sf.a.row(row).head(p) = prob.eq_lhs.row(r);
        sf.a.row(row).segment(p, p) = -prob.eq_lhs.row(r);
        sf.b(row) = prob.eq_rhs(r);
    }
    int slack = 2 * p;
    auto add_leq_row = [&](const Eigen::RowVectorXd& coeffs, double rhs) {
        sf.a.row(row).head(p) = coeffs;
        sf.a.row(row).segment(p, p) = -coeffs;
        sf.a(row, slack) = 1.0;
        sf.b(row) = rhs;
        ++row;
        ++slack;
    };
    for (int r = 0; r < n_in; ++r) add_leq_row(prob.in_lhs.row(r), prob.in_rhs(r));
    for (int j = 0; j < p; ++j) {
        if (std::isfinite(prob.lower(j))) {
            add_leq_row(-Eigen::RowVectorXd::Unit(p, j), -prob.lower(j));
        }
        if (std::isfinite(prob.upper(j))) {
            add_leq_row(Eigen::RowVectorXd::Unit(p, j), prob.upper(j));
        }
    }

    for (int r = 0; r < rows; ++r) {
        if (sf.b(r) < 0.0) {
            sf.a.row(r) = -sf.a.row(r);
            sf.b(r) = -sf.b(r);
        }
    }
    return sf;
}

struct Tableau {
    Matrix a;                // basis columns reduced to identity
    Vector b;                // >= 0 throughout
    Eigen::RowVectorXd cost; // reduced-cost row
    std::vector<int> basis;  // basic column per row
};

// Gauss-Jordan pivot on (row, col), updating rhs and the cost row.
void pivot_full(Tableau& t, int row, int col) {
    const double piv = t.a(row, col);
    t.a.row(row) /= piv;
    t.b(row) /= piv;
    for (Eigen::Index r = 0; r < t.a.rows(); ++r) {
        if (r == row) continue;
        const double f = t.a(r, col);
        if (f != 0.0) {
            t.a.row(r) -= f * t.a.row(row);
            t.b(r) -= f * t.b(row);
        }
    }
    const double fc = t.cost(col);
    if (fc != 0.0) t.cost -= fc * t.a.row(row);
    t.basis[static_cast<size_t>(row)] = col;
}

enum class IterateOutcome { Optimal, Unbounded };

// Bland's rule: entering = smallest column index with negative reduced cost;
// leaving = among the minimum-ratio rows, the one whose basic variable has
// the smallest index. Guarantees termination on degenerate problems.
IterateOutcome run_simplex(Tableau& t) {
    const Eigen::Index cols = t.a.cols();
    const Eigen::Index rows = t.a.rows();
    for (long it = 0; it < kMaxPivots; ++it) {
        int enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (t.cost(j) < -kPivotTol) {
                enter = static_cast<int>(j);
                break;
            }
        }
        if (enter < 0) return IterateOutcome::Optimal;

        double best_ratio = kInf;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (t.a(r, enter) > kPivotTol) {
                best_ratio = std::min(best_ratio, t.b(r) / t.a(r, enter));
            }
        }
        if (best_ratio == kInf) return IterateOutcome::Unbounded;

        int leave = -1;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (t.a(r, enter) > kPivotTol && t.b(r) / t.a(r, enter) <= best_ratio + 1e-12) {
                if (leave < 0 || t.basis[static_cast<size_t>(r)] < t.basis[static_cast<size_t>(leave)]) {
                    leave = static_cast<int>(r);
                }
            }
        }
        pivot_full(t, leave, enter);
    }
    throw InternalError("lp: pivot limit exceeded");
}

// Drops the artificial columns after phase 1: basic artificials at zero are
// pivoted onto a structural column, or their (redundant) row is removed.
Tableau strip_artificials(const Tableau& phase1, int structural_cols) {
    std::vector<int> keep_rows;
    Tableau work = phase1;
    for (Eigen::Index r = 0; r < work.a.rows(); ++r) {
        if (work.basis[static_cast<size_t>(r)] < structural_cols) {
            keep_rows.push_back(static_cast<int>(r));
            continue;
        }
        int col = -1;
        for (int j = 0; j < structural_cols; ++j) {
            if (std::abs(work.a(r, j)) > kPivotTol) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            pivot_full(work, static_cast<int>(r), col);
            keep_rows.push_back(static_cast<int>(r));
        }
        // else: the row is 0 = 0 over structural columns; drop it.
    }

    Tableau out;
    out.a = Matrix::Zero(static_cast<Eigen::Index>(keep_rows.size()), structural_cols);
    out.b = Vector::Zero(static_cast<Eigen::Index>(keep_rows.size()));
    out.basis.reserve(keep_rows.size());
    for (size_t i = 0; i < keep_rows.size(); ++i) {
        out.a.row(static_cast<Eigen::Index>(i)) = work.a.row(keep_rows[i]).head(structural_cols);
        out.b(static_cast<Eigen::Index>(i)) = work.b(keep_rows[i]);
        out.basis.push_back(work.basis[static_cast<size_t>(keep_rows[i])]);
    }
    return out;
}

}  // namespace

LinearProgram LinearProgram::minimize(Vector cost) {
    LinearProgram prob;
    const int p = static_cast<int>(cost.size());
    prob.cost = std::move(cost);
    prob.eq_lhs = Matrix::Zero(0, p);
    prob.eq_rhs = Vector::Zero(0);
    prob.in_lhs = Matrix::Zero(0, p);
    prob.in_rhs = Vector::Zero(0);
    prob.lower = Vector::Constant(p, -kInf);
    prob.upper = Vector::Constant(p, kInf);
    return prob;
}

namespace {
void append_row(Matrix& lhs, Vector& rhs, const Vector& coeffs, double value) {
    lhs.conservativeResize(lhs.rows() + 1, Eigen::NoChange);
    lhs.row(lhs.rows() - 1) = coeffs.transpose();
    rhs.conservativeResize(rhs.size() + 1);
    rhs(rhs.size() - 1) = value;
}
}  // namespace

void add_equality(LinearProgram& prob, const Vector& coeffs, double rhs) {
    if (coeffs.size() != prob.cost.size()) throw DimensionError("lp: row size mismatch");
    append_row(prob.eq_lhs, prob.eq_rhs, coeffs, rhs);
}

void add_inequality(LinearProgram& prob, const Vector& coeffs, double rhs) {
    if (coeffs.size() != prob.cost.size()) throw DimensionError("lp: row size mismatch");
    append_row(prob.in_lhs, prob.in_rhs, coeffs, rhs);
}

LpSolution solve(const LinearProgram& prob) {
    validate(prob);
    const StandardForm sf = build_standard_form(prob);
    const int rows = static_cast<int>(sf.a.rows());
    const int cols = static_cast<int>(sf.a.cols());

    LpSolution sol;

    // Phase 1: minimize the sum of one artificial per row.
    Tableau t;
    t.a = Matrix::Zero(rows, cols + rows);
    t.a.leftCols(cols) = sf.a;
    t.a.rightCols(rows) = Matrix::Identity(rows, rows);
    t.b = sf.b;
    t.basis.resize(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r) t.basis[static_cast<size_t>(r)] = cols + r;
    t.cost = Eigen::RowVectorXd::Zero(cols + rows);
    // Reduced costs for c = (0,...,0, 1,...,1) with the artificial basis.
    t.cost.head(cols) = -sf.a.colwise().sum();

    // The phase-1 objective is bounded below by zero, so an "unbounded"
    // verdict can only come from roundoff in a near-degenerate tableau
    // (a barely negative reduced cost over a column with no admissible
    // pivot); the feasibility test below is still decisive.
    if (rows > 0) run_simplex(t);
    double infeasibility = 0.0;
    for (int r = 0; r < rows; ++r) {
        if (t.basis[static_cast<size_t>(r)] >= cols) infeasibility += t.b(r);
    }
    if (infeasibility > kFeasTol) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    // Phase 2 on the structural columns only.
    Tableau t2 = strip_artificials(t, cols);
    t2.cost = sf.c.transpose();
    for (Eigen::Index r = 0; r < t2.a.rows(); ++r) {
        const int j = t2.basis[static_cast<size_t>(r)];
        const double f = t2.cost(j);
        if (f != 0.0) t2.cost -= f * t2.a.row(r);
    }

    if (run_simplex(t2) == IterateOutcome::Unbounded) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    Vector z = Vector::Zero(cols);
    for (Eigen::Index r = 0; r < t2.a.rows(); ++r) {
        z(t2.basis[static_cast<size_t>(r)]) = t2.b(r);
    }
    const int p = prob.num_variables();
    sol.point = z.head(p) - z.segment(p, p);
    sol.objective = prob.cost.dot(sol.point);
    sol.basis = t2.basis;
    sol.reduced_costs = t2.cost.transpose();
    sol.status = LpStatus::Optimal;

    // The vertex must satisfy the original constraints; anything else is a
    // solver bug, not a property of the input.
    for (Eigen::Index r = 0; r < prob.eq_lhs.rows(); ++r) {
        if (std::abs(prob.eq_lhs.row(r) * sol.point - prob.eq_rhs(r)) > kFeasTol * (1.0 + std::abs(prob.eq_rhs(r)))) {
            throw InternalError("lp: optimal point violates an equality");
        }
    }
    for (Eigen::Index r = 0; r < prob.in_lhs.rows(); ++r) {
        if (prob.in_lhs.row(r) * sol.point - prob.in_rhs(r) > kFeasTol * (1.0 + std::abs(prob.in_rhs(r)))) {
            throw InternalError("lp: optimal point violates an inequality");
        }
    }
    for (int j = 0; j < p; ++j) {
        if (sol.point(j) < prob.lower(j) - kFeasTol || sol.point(j) > prob.upper(j) + kFeasTol) {
            throw InternalError("lp: optimal point violates a bound");
        }
    }
    return sol;
}

}  // namespace vfw::lp
