#pragma once

#include <functional>
#include <vector>

#include "common.hpp"

namespace vfw::cone {

enum class Kind { NonnegativeOrthant, Polyhedral2D, Analytic };
enum class Norm { LInfinity, L2 };

/// Tolerance used when classifying a point as inside / on the boundary of a
/// cone from the sign of the oriented distance. This is a classification
/// tolerance, not a solver tolerance.
inline constexpr double kSignTol = 1e-12;

/// A closed, convex, pointed ordering cone C with nonempty interior.
///
/// The cone induces the partial order y1 <= y2  <=>  y2 - y1 in C, and is
/// evaluated through its oriented distance function
///
///     phi(y) = dist(y, -C) - dist(y, complement(-C)),
///
/// which is negative exactly on the interior of -C, zero on its boundary and
/// positive outside. `norm` selects the norm inside both distances.
///
/// For the nonnegative orthant under the max norm, phi has the exact
/// max-linear form phi(y) = max_j <w_j, y> with W the standard basis; that
/// representation is what makes the solver's direction subproblem a plain LP,
/// so only cones exposing it are accepted by the solver.
///
/// Cones are immutable after construction and safe to share across threads.
class OrderingCone {
public:
    using Evaluator = std::function<double(const Vector&)>;

    static OrderingCone nonnegative_orthant(int dimension, Norm norm = Norm::LInfinity);

    /// C = {y in R^2 : y1 + y2 >= 0, y2 >= 0} under the Euclidean norm.
    /// Evaluation-only: no max-linear representation.
    static OrderingCone example_cone_2d();

    /// Wraps a user-supplied oriented-distance evaluator. The evaluator is
    /// sanity-checked at construction: phi(0) = 0, phi(-e) < 0, phi(e) > 0.
    static OrderingCone analytic(int dimension, Norm norm, Evaluator phi, Vector interior_vector);

    int dimension() const { return dimension_; }
    Kind kind() const { return kind_; }
    Norm norm() const { return norm_; }

    /// phi(y). Throws DimensionError on size mismatch and UnsupportedError
    /// for an analytic cone constructed without an evaluator.
    double oriented_distance(const Vector& y) const;

    /// strict = false: y in C;  strict = true: y in int(C).
    /// Decided from the sign of phi(-y) within kSignTol.
    bool contains(const Vector& y, bool strict = false) const;

    bool has_max_linear_generators() const { return !generators_.empty(); }
    const std::vector<Vector>& max_linear_generators() const;

    /// A fixed direction e in int(C); all-ones for the orthant.
    const Vector& interior_vector() const { return interior_; }

private:
    OrderingCone(int dimension, Kind kind, Norm norm, Vector interior);

    int dimension_;
    Kind kind_;
    Norm norm_;
    Vector interior_;
    std::vector<Vector> generators_;
    Evaluator evaluator_;
};

/// Named closed sets A with closed-form oriented distance Delta_A, used as a
/// validation catalog for the distance calculus.
enum class CatalogSet { UnitBall, NegativeOrthant, ExampleCone2D };

struct CatalogEntry {
    CatalogSet set;
    int dimension;
    Norm norm;

    /// Delta_A(y) by the entry's closed form.
    double distance(const Vector& y) const;
    /// y in A (closed membership, exact arithmetic on the defining
    /// inequalities).
    bool member(const Vector& y) const;
    const char* name() const;
};

CatalogEntry catalog_unit_ball(int dimension);
CatalogEntry catalog_negative_orthant(int dimension);
CatalogEntry catalog_example_cone_2d();

}  // namespace vfw::cone
