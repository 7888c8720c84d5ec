#pragma once

#include <vector>

#include "common.hpp"

namespace vfw::objective {

/// Vector objective F : R^n -> R^m with quadratic-plus-linear components
///
///     f_i(x) = x' Q_i x + c_i' x,   Q_i symmetric.
///
/// The family covers linear objectives (Q_i = 0) and makes the gradient
/// Lipschitz constant computable exactly. Instances are immutable and all
/// evaluations are pure.
class QuadraticVectorObjective {
public:
    /// One (Q_i, c_i) pair per component. Throws if any Q_i is not symmetric
    /// (to 1e-12) or sizes disagree.
    QuadraticVectorObjective(std::vector<Matrix> quadratic_terms, std::vector<Vector> linear_terms);

    /// The five-stock bicriteria mean-variance instance:
    /// f1(x) = -x'u (negative expected return), f2(x) = x'Vx (risk).
    static QuadraticVectorObjective portfolio_d2007();

    int num_variables() const { return n_; }
    int num_objectives() const { return m_; }

    Vector value(const Vector& x) const;

    /// Row i is the gradient of f_i: 2 Q_i x + c_i.
    Matrix jacobian(const Vector& x) const;

    /// L = max_i 2 * ||Q_i||_2 (largest curvature across components),
    /// floored at 1e-16 so an all-linear objective still yields L > 0.
    double lipschitz_constant() const { return lipschitz_; }

    const Matrix& quadratic_term(int i) const { return quadratic_.at(static_cast<size_t>(i)); }
    const Vector& linear_term(int i) const { return linear_.at(static_cast<size_t>(i)); }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Matrix> quadratic_;
    std::vector<Vector> linear_;
    double lipschitz_ = 0.0;
};

/// True iff the symmetric matrix has smallest eigenvalue >= -1e-10.
/// Throws DimensionError for a non-square input.
bool is_positive_semidefinite(const Matrix& m, double tol = 1e-10);

/// Largest absolute eigenvalue of a symmetric matrix, by power iteration on
/// Q^2 (relative tolerance 1e-10, deterministic restarts).
double symmetric_spectral_norm(const Matrix& q);

/// Expected per-period returns of the portfolio instance.
Vector portfolio_expected_returns();

/// Variance-covariance matrix of the portfolio instance.
Matrix portfolio_covariance();

}  // namespace vfw::objective
