#include "objective.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <utility>

#include "rng.hpp"

namespace vfw::objective {

namespace {

constexpr double kLipschitzFloor = 1e-16;
constexpr double kSymmetryTol = 1e-12;

Vector random_unit(int n, std::mt19937_64& gen) {
    Vector v(n);
    double norm = 0.0;
    while (norm < 1e-12) {
        for (int i = 0; i < n; ++i) v(i) = rng::normal(gen);
        norm = v.norm();
    }
    return v / norm;
}

}  // namespace

double symmetric_spectral_norm(const Matrix& q) {
    if (q.rows() != q.cols()) throw DimensionError("objective: spectral norm of non-square matrix");
    const int n = static_cast<int>(q.rows());
    if (n == 0 || q.lpNorm<Eigen::Infinity>() == 0.0) return 0.0;

    // Iterate with Q^2: its Rayleigh quotient ||Q v||^2 converges to the
    // squared spectral norm even when Q has a +/- eigenvalue pair of equal
    // magnitude, which plain iteration with Q does not handle.
    std::mt19937_64 gen(0x9a7d2c1ull);
    double best = 0.0;
    for (int restart = 0; restart < 3; ++restart) {
        Vector v = random_unit(n, gen);
        double estimate = 0.0;
        for (int it = 0; it < 100000; ++it) {
            const Vector qv = q * v;
            const double rayleigh = qv.squaredNorm();  // v' Q^2 v for unit v
            const double value = std::sqrt(std::max(rayleigh, 0.0));
            if (it > 0 && std::abs(value - estimate) <= 1e-10 * std::max(1e-30, value)) {
                estimate = value;
                break;
            }
            estimate = value;
            const Vector qqv = q * qv;
            const double norm = qqv.norm();
            if (norm < 1e-300) break;  // v sits in the null space of Q^2
            v = qqv / norm;
        }
        best = std::max(best, estimate);
    }
    return best;
}

QuadraticVectorObjective::QuadraticVectorObjective(std::vector<Matrix> quadratic_terms,
                                                   std::vector<Vector> linear_terms)
    : quadratic_(std::move(quadratic_terms)), linear_(std::move(linear_terms)) {
    if (quadratic_.empty() || quadratic_.size() != linear_.size()) {
        throw DimensionError("objective: need one (Q, c) pair per component");
    }
    m_ = static_cast<int>(quadratic_.size());
    n_ = static_cast<int>(linear_.front().size());
    for (int i = 0; i < m_; ++i) {
        const Matrix& q = quadratic_[static_cast<size_t>(i)];
        const Vector& c = linear_[static_cast<size_t>(i)];
        if (q.rows() != n_ || q.cols() != n_ || c.size() != n_) {
            throw DimensionError("objective: component " + std::to_string(i) + " has inconsistent sizes");
        }
        if ((q - q.transpose()).lpNorm<Eigen::Infinity>() > kSymmetryTol) {
            throw Error("objective: Q" + std::to_string(i) + " is not symmetric");
        }
    }
    double l = 0.0;
    for (const Matrix& q : quadratic_) l = std::max(l, 2.0 * symmetric_spectral_norm(q));
    lipschitz_ = std::max(l, kLipschitzFloor);
}

Vector QuadraticVectorObjective::value(const Vector& x) const {
    if (x.size() != n_) throw DimensionError("objective: point has wrong dimension");
    Vector out(m_);
    for (int i = 0; i < m_; ++i) {
        out(i) = x.dot(quadratic_[static_cast<size_t>(i)] * x) + linear_[static_cast<size_t>(i)].dot(x);
    }
    return out;
}

Matrix QuadraticVectorObjective::jacobian(const Vector& x) const {
    if (x.size() != n_) throw DimensionError("objective: point has wrong dimension");
    Matrix jac(m_, n_);
    for (int i = 0; i < m_; ++i) {
        jac.row(i) = (2.0 * (quadratic_[static_cast<size_t>(i)] * x) + linear_[static_cast<size_t>(i)]).transpose();
    }
    return jac;
}

bool is_positive_semidefinite(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionError("objective: PSD check needs a square matrix");
    if (m.rows() == 0) return true;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() >= -tol;
}

Vector portfolio_expected_returns() {
    Vector u(5);
    u << 0.004, 0.00513, 0.04085, 0.01006, 0.01236;
    return u;
}

Matrix portfolio_covariance() {
    Matrix v(5, 5);
    v << 0.006461,   0.002983,   0.00235487, 0.00235487, 0.00096889,
         0.002983,   0.0039,     0.00095937, -0.0001987, 0.00063459,
         0.00235487, 0.00095937, 0.01267778, 0.00135712, 0.00134481,
         0.00235487, -0.0001987, 0.00135712, 0.00559836, 0.00041942,
         0.00096889, 0.00063459, 0.00134481, 0.00041942, 0.0016229;
    return v;
}

QuadraticVectorObjective QuadraticVectorObjective::portfolio_d2007() {
    std::vector<Matrix> quads{Matrix::Zero(5, 5), portfolio_covariance()};
    std::vector<Vector> lins{-portfolio_expected_returns(), Vector::Zero(5)};
    return QuadraticVectorObjective(std::move(quads), std::move(lins));
}

}  // namespace vfw::objective
