#include "region.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "rng.hpp"

namespace vfw::region {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Polytope Polytope::unit_simplex(int dimension) {
    if (dimension < 1) throw Error("region: simplex dimension must be positive");
    Polytope p;
    p.dimension_ = dimension;
    p.tag_ = Tag::UnitSimplex;
    p.eq_lhs_ = Matrix::Ones(1, dimension);
    p.eq_rhs_ = Vector::Ones(1);
    p.in_lhs_ = Matrix::Zero(0, dimension);
    p.in_rhs_ = Vector::Zero(0);
    p.lower_ = Vector::Zero(dimension);
    p.upper_ = Vector::Constant(dimension, kInf);
    p.box_lower_ = Vector::Zero(dimension);
    p.box_upper_ = Vector::Ones(dimension);
    return p;
}

Polytope Polytope::box(Vector lower, Vector upper) {
    if (lower.size() != upper.size() || lower.size() == 0) {
        throw DimensionError("region: box bounds size mismatch");
    }
    for (Eigen::Index j = 0; j < lower.size(); ++j) {
        if (!std::isfinite(lower(j)) || !std::isfinite(upper(j)) || lower(j) > upper(j)) {
            throw Error("region: box bounds must be finite and ordered");
        }
    }
    Polytope p;
    p.dimension_ = static_cast<int>(lower.size());
    p.tag_ = Tag::Box;
    p.eq_lhs_ = Matrix::Zero(0, p.dimension_);
    p.eq_rhs_ = Vector::Zero(0);
    p.in_lhs_ = Matrix::Zero(0, p.dimension_);
    p.in_rhs_ = Vector::Zero(0);
    p.lower_ = lower;
    p.upper_ = upper;
    p.box_lower_ = std::move(lower);
    p.box_upper_ = std::move(upper);
    return p;
}

Polytope Polytope::general(Matrix eq_lhs, Vector eq_rhs, Matrix in_lhs, Vector in_rhs,
                           Vector lower, Vector upper) {
    Polytope p;
    p.dimension_ = static_cast<int>(lower.size());
    if (p.dimension_ < 1) throw DimensionError("region: need at least one variable");
    p.tag_ = Tag::General;
    p.eq_lhs_ = std::move(eq_lhs);
    p.eq_rhs_ = std::move(eq_rhs);
    p.in_lhs_ = std::move(in_lhs);
    p.in_rhs_ = std::move(in_rhs);
    p.lower_ = std::move(lower);
    p.upper_ = std::move(upper);

    // Certify nonemptiness, then boundedness coordinate by coordinate; the
    // extreme values double as the bounding box.
    const lp::LpSolution feas = lp::solve(p.to_lp(Vector::Zero(p.dimension_)));
    if (feas.status == lp::LpStatus::Infeasible) throw Error("region: empty feasible set");

    p.box_lower_ = Vector::Zero(p.dimension_);
    p.box_upper_ = Vector::Zero(p.dimension_);
    for (int j = 0; j < p.dimension_; ++j) {
        const lp::LpSolution lo = lp::solve(p.to_lp(Vector::Unit(p.dimension_, j)));
        const lp::LpSolution hi = lp::solve(p.to_lp(-Vector::Unit(p.dimension_, j)));
        if (lo.status != lp::LpStatus::Optimal || hi.status != lp::LpStatus::Optimal) {
            throw Error("region: feasible set is unbounded in coordinate " + std::to_string(j));
        }
        p.box_lower_(j) = lo.objective;
        p.box_upper_(j) = -hi.objective;
    }
    return p;
}

lp::LinearProgram Polytope::to_lp(Vector cost) const {
    lp::LinearProgram prob = lp::LinearProgram::minimize(std::move(cost));
    prob.eq_lhs = eq_lhs_;
    prob.eq_rhs = eq_rhs_;
    prob.in_lhs = in_lhs_;
    prob.in_rhs = in_rhs_;
    prob.lower = lower_;
    prob.upper = upper_;
    return prob;
}

bool Polytope::contains(const Vector& x, double tol) const {
    if (x.size() != dimension_) throw DimensionError("region: point has wrong dimension");
    for (Eigen::Index r = 0; r < eq_lhs_.rows(); ++r) {
        if (std::abs(eq_lhs_.row(r) * x - eq_rhs_(r)) > tol) return false;
    }
    for (Eigen::Index r = 0; r < in_lhs_.rows(); ++r) {
        if (in_lhs_.row(r) * x - in_rhs_(r) > tol) return false;
    }
    for (int j = 0; j < dimension_; ++j) {
        if (x(j) < lower_(j) - tol || x(j) > upper_(j) + tol) return false;
    }
    return true;
}

double Polytope::diameter() const {
    switch (tag_) {
        case Tag::UnitSimplex:
            return dimension_ > 1 ? std::sqrt(2.0) : 0.0;
        case Tag::Box:
        case Tag::General:
            return (box_upper_ - box_lower_).norm();
    }
    throw InternalError("region: unknown tag");
}

Vector Polytope::sample_uniform(std::mt19937_64& gen) const {
    Vector x(dimension_);
    switch (tag_) {
        case Tag::UnitSimplex: {
            double sum = 0.0;
            while (sum <= 0.0) {
                for (int j = 0; j < dimension_; ++j) {
                    x(j) = rng::exponential(gen);
                }
                sum = x.sum();
            }
            return x / sum;
        }
        case Tag::Box: {
            for (int j = 0; j < dimension_; ++j) {
                x(j) = rng::uniform(gen, lower_(j), upper_(j));
            }
            return x;
        }
        case Tag::General:
            throw UnsupportedError("region: uniform sampling is only available for simplex and box regions");
    }
    throw InternalError("region: unknown tag");
}

Vector Polytope::linear_minimization_oracle(const Vector& cost) const {
    if (cost.size() != dimension_) throw DimensionError("region: cost has wrong dimension");
    if (tag_ == Tag::UnitSimplex) {
        int arg = 0;
        for (int j = 1; j < dimension_; ++j) {
            if (cost(j) < cost(arg)) arg = j;
        }
        return Vector::Unit(dimension_, arg);
    }
    const lp::LpSolution sol = lp::solve(to_lp(cost));
    if (sol.status != lp::LpStatus::Optimal) {
        throw InternalError("region: linear minimization failed on a certified region");
    }
    return sol.point;
}

}  // namespace vfw::region
