#include "cone.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace vfw::cone {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_dimension(const Vector& y, int m) {
    if (y.size() != m) {
        throw DimensionError("cone: vector has size " + std::to_string(y.size()) +
                             ", expected " + std::to_string(m));
    }
}

// Delta_{-R^m_+} under the max norm: max_i y_i.
double orthant_linf(const Vector& y) {
    return y.maxCoeff();
}

// Delta_{-R^m_+} under the Euclidean norm. Outside -R^m_+ the nearest point
// zeroes the positive coordinates; inside, the nearest exit raises the
// largest coordinate to zero.
double orthant_l2(const Vector& y) {
    double pos_sq = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (y(i) > 0.0) pos_sq += y(i) * y(i);
    }
    if (pos_sq > 0.0) return std::sqrt(pos_sq);
    return y.maxCoeff();
}

// Delta_{-C} for C = {y : y1 + y2 >= 0, y2 >= 0}, Euclidean norm.
// -C is the wedge between the rays {(t,-t) : t >= 0} and {(t,0) : t <= 0};
// outside, the distance is a perpendicular drop or the apex distance by
// region; inside, the depth is the nearer of the two perpendicular feet
// that actually land on a boundary ray (at least one always does).
double example_cone_2d_phi(const Vector& y) {
    const double y1 = y(0), y2 = y(1);
    if (y1 + y2 <= 0.0 && y2 <= 0.0) {
        double depth = std::numeric_limits<double>::infinity();
        if (y1 >= y2) depth = -(y1 + y2) / kSqrt2;
        if (y1 <= 0.0) depth = std::min(depth, -y2);
        return -depth;
    }
    if (y1 <= 0.0 && y2 > 0.0) return y2;                       // B1
    if (y1 > 0.0 && y1 - y2 <= 0.0) return y.norm();            // B2
    return (y1 + y2) / kSqrt2;                                  // B3
}

}  // namespace

OrderingCone::OrderingCone(int dimension, Kind kind, Norm norm, Vector interior)
    : dimension_(dimension), kind_(kind), norm_(norm), interior_(std::move(interior)) {
    if (dimension_ < 1) throw Error("cone: dimension must be positive");
}

OrderingCone OrderingCone::nonnegative_orthant(int dimension, Norm norm) {
    OrderingCone cone(dimension, Kind::NonnegativeOrthant, norm, Vector::Ones(dimension));
    if (norm == Norm::LInfinity) {
        cone.evaluator_ = orthant_linf;
        cone.generators_.reserve(static_cast<size_t>(dimension));
        for (int j = 0; j < dimension; ++j) {
            cone.generators_.push_back(Vector::Unit(dimension, j));
        }
    } else {
        cone.evaluator_ = orthant_l2;
    }
    return cone;
}

OrderingCone OrderingCone::example_cone_2d() {
    OrderingCone cone(2, Kind::Polyhedral2D, Norm::L2, Vector::Ones(2));
    cone.evaluator_ = example_cone_2d_phi;
    return cone;
}

OrderingCone OrderingCone::analytic(int dimension, Norm norm, Evaluator phi, Vector interior_vector) {
    if (!phi) throw UnsupportedError("cone: analytic cone requires an evaluator");
    if (interior_vector.size() != dimension) {
        throw DimensionError("cone: interior vector size mismatch");
    }
    OrderingCone cone(dimension, Kind::Analytic, norm, std::move(interior_vector));
    cone.evaluator_ = std::move(phi);

    // Sanity of the supplied evaluator: the apex lies on bd(-C) and the
    // interior vector separates the signs.
    const double at_zero = cone.evaluator_(Vector::Zero(dimension));
    if (std::abs(at_zero) > kSignTol) {
        throw Error("cone: analytic evaluator has phi(0) != 0");
    }
    if (!(cone.evaluator_(-cone.interior_) < 0.0) || !(cone.evaluator_(cone.interior_) > 0.0)) {
        throw Error("cone: analytic evaluator fails the interior-vector sign check");
    }
    return cone;
}

double OrderingCone::oriented_distance(const Vector& y) const {
    require_dimension(y, dimension_);
    if (!evaluator_) throw UnsupportedError("cone: no oriented-distance evaluator installed");
    return evaluator_(y);
}

bool OrderingCone::contains(const Vector& y, bool strict) const {
    const double phi = oriented_distance(-y);
    return strict ? phi < -kSignTol : phi <= kSignTol;
}

const std::vector<Vector>& OrderingCone::max_linear_generators() const {
    if (generators_.empty()) {
        throw UnsupportedError("cone: no max-linear representation for this cone/norm");
    }
    return generators_;
}

double CatalogEntry::distance(const Vector& y) const {
    require_dimension(y, dimension);
    switch (set) {
        case CatalogSet::UnitBall:
            return y.norm() - 1.0;
        case CatalogSet::NegativeOrthant:
            return orthant_linf(y);
        case CatalogSet::ExampleCone2D:
            return example_cone_2d_phi(y);
    }
    throw Error("catalog: unknown entry");
}

bool CatalogEntry::member(const Vector& y) const {
    require_dimension(y, dimension);
    switch (set) {
        case CatalogSet::UnitBall:
            return y.norm() <= 1.0;
        case CatalogSet::NegativeOrthant:
            return y.maxCoeff() <= 0.0;
        case CatalogSet::ExampleCone2D:
            return y(0) + y(1) <= 0.0 && y(1) <= 0.0;
    }
    throw Error("catalog: unknown entry");
}

const char* CatalogEntry::name() const {
    switch (set) {
        case CatalogSet::UnitBall: return "unit-ball";
        case CatalogSet::NegativeOrthant: return "negative-orthant";
        case CatalogSet::ExampleCone2D: return "example-cone-2d";
    }
    return "?";
}

CatalogEntry catalog_unit_ball(int dimension) {
    return CatalogEntry{CatalogSet::UnitBall, dimension, Norm::L2};
}

CatalogEntry catalog_negative_orthant(int dimension) {
    return CatalogEntry{CatalogSet::NegativeOrthant, dimension, Norm::LInfinity};
}

CatalogEntry catalog_example_cone_2d() {
    return CatalogEntry{CatalogSet::ExampleCone2D, 2, Norm::L2};
}

}  // namespace vfw::cone
