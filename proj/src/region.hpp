#pragma once

#include <random>

#include "common.hpp"
#include "lp.hpp"

namespace vfw::region {

enum class Tag { UnitSimplex, Box, General };

/// A nonempty, compact, convex polyhedral feasible set
///
///     Omega = {x : eq_lhs x = eq_rhs, in_lhs x <= in_rhs, lower <= x <= upper}.
///
/// Construction certifies nonemptiness (one feasibility LP) and boundedness
/// (2n LPs producing a bounding box); an empty or unbounded description is
/// rejected with an Error. Instances are immutable and safe to share.
class Polytope {
public:
    static Polytope unit_simplex(int dimension);
    static Polytope box(Vector lower, Vector upper);
    static Polytope general(Matrix eq_lhs, Vector eq_rhs, Matrix in_lhs, Vector in_rhs,
                            Vector lower, Vector upper);

    int dimension() const { return dimension_; }
    Tag tag() const { return tag_; }

    bool contains(const Vector& x, double tol = lp::kFeasTol) const;

    /// Largest pairwise Euclidean distance. Exact for the unit simplex
    /// (sqrt 2 for n >= 2) and for boxes (diagonal length); for general
    /// regions, the diagonal of the certified bounding box, which is an
    /// upper bound -- the only way the diameter is consumed.
    double diameter() const;

    /// Uniform sample. Unit simplex: n standard exponentials normalized by
    /// their sum; box: independent uniforms per coordinate. General regions
    /// are not samplable and throw UnsupportedError.
    Vector sample_uniform(std::mt19937_64& gen) const;

    /// argmin_{s in Omega} <cost, s>. The unit simplex resolves to the
    /// cheapest vertex directly (ties break to the smallest index); other
    /// shapes delegate to the LP solver.
    Vector linear_minimization_oracle(const Vector& cost) const;

    const Matrix& eq_lhs() const { return eq_lhs_; }
    const Vector& eq_rhs() const { return eq_rhs_; }
    const Matrix& in_lhs() const { return in_lhs_; }
    const Vector& in_rhs() const { return in_rhs_; }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }

    /// Certified axis-aligned bounding box.
    const Vector& box_lower() const { return box_lower_; }
    const Vector& box_upper() const { return box_upper_; }

private:
    Polytope() = default;

    lp::LinearProgram to_lp(Vector cost) const;

    int dimension_ = 0;
    Tag tag_ = Tag::General;
    Matrix eq_lhs_;
    Vector eq_rhs_;
    Matrix in_lhs_;
    Vector in_rhs_;
    Vector lower_;
    Vector upper_;
    Vector box_lower_;
    Vector box_upper_;
};

}  // namespace vfw::region
