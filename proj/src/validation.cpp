#include "validation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "objective.hpp"
#include "region.hpp"
#include "rng.hpp"
#include "solver.hpp"

namespace vfw::validation {

namespace {

double norm_of(const Vector& v, cone::Norm norm) {
    return norm == cone::Norm::L2 ? v.norm() : v.lpNorm<Eigen::Infinity>();
}

Vector random_box_point(std::mt19937_64& gen, int m, double half_width) {
    Vector y(m);
    for (int i = 0; i < m; ++i) y(i) = rng::uniform(gen, -half_width, half_width);
    return y;
}

struct Counter {
    int total = 0;
    int bad = 0;
    double worst = 0.0;

    void tally(double violation) {
        ++total;
        worst = std::max(worst, violation);
        if (violation > 0.0) ++bad;
    }

    CheckItem item(const std::string& name) const {
        std::ostringstream detail;
        detail << (total - bad) << "/" << total << " inputs, worst excess " << worst;
        return CheckItem{name, bad == 0, detail.str()};
    }
};

// -- cone suite -------------------------------------------------------------

struct ConeInstance {
    std::string name;
    cone::OrderingCone cone;
    // Samples an element of C / of int(C), for the monotonicity property.
    std::function<Vector(std::mt19937_64&)> sample_member;
    std::function<Vector(std::mt19937_64&)> sample_interior;
    // Exact membership of y in -C / -int(C), for the sign classification.
    std::function<bool(const Vector&)> in_minus_cone;
    std::function<bool(const Vector&)> in_minus_interior;
};

ConeInstance orthant_instance(std::string name, int m, cone::Norm norm) {
    ConeInstance inst{std::move(name), cone::OrderingCone::nonnegative_orthant(m, norm), {}, {}, {}, {}};
    inst.sample_member = [m](std::mt19937_64& gen) {
        Vector c(m);
        for (int i = 0; i < m; ++i) c(i) = std::abs(rng::normal(gen));
        return c;
    };
    inst.sample_interior = [m](std::mt19937_64& gen) {
        Vector c(m);
        for (int i = 0; i < m; ++i) c(i) = std::abs(rng::normal(gen)) + 0.01;
        return c;
    };
    inst.in_minus_cone = [](const Vector& y) { return y.maxCoeff() <= 0.0; };
    inst.in_minus_interior = [](const Vector& y) { return y.maxCoeff() < 0.0; };
    return inst;
}

ConeInstance example_2d_instance() {
    ConeInstance inst{"example-cone-2d/l2", cone::OrderingCone::example_cone_2d(), {}, {}, {}, {}};
    inst.sample_member = [](std::mt19937_64& gen) {
        Vector c(2);
        c(1) = std::abs(rng::normal(gen));
        c(0) = -c(1) + std::abs(rng::normal(gen));
        return c;
    };
    inst.sample_interior = [](std::mt19937_64& gen) {
        Vector c(2);
        c(1) = std::abs(rng::normal(gen)) + 0.01;
        c(0) = -c(1) + std::abs(rng::normal(gen)) + 0.01;
        return c;
    };
    inst.in_minus_cone = [](const Vector& y) { return y(0) + y(1) <= 0.0 && y(1) <= 0.0; };
    inst.in_minus_interior = [](const Vector& y) { return y(0) + y(1) < 0.0 && y(1) < 0.0; };
    return inst;
}

ConeInstance analytic_instance() {
    ConeInstance inst = orthant_instance("analytic-orthant/linf", 2, cone::Norm::LInfinity);
    inst.name = "analytic-orthant/linf";
    inst.cone = cone::OrderingCone::analytic(
        2, cone::Norm::LInfinity, [](const Vector& y) { return y.maxCoeff(); }, Vector::Ones(2));
    return inst;
}

void cone_property_items(CheckReport& report, const ConeInstance& inst, uint64_t seed) {
    constexpr int kSamples = 1000;
    constexpr double kTol = 1e-9;
    const int m = inst.cone.dimension();
    std::mt19937_64 gen(seed ^ 0x636f6e65ull);

    Counter lipschitz;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y1 = random_box_point(gen, m, 5.0);
        const Vector y2 = random_box_point(gen, m, 5.0);
        const double lhs = std::abs(inst.cone.oriented_distance(y1) - inst.cone.oriented_distance(y2));
        lipschitz.tally(lhs - norm_of(y1 - y2, inst.cone.norm()) - kTol);
    }
    report.items.push_back(lipschitz.item(inst.name + ": 1-lipschitz"));

    Counter signs;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y = random_box_point(gen, m, 5.0);
        const double phi = inst.cone.oriented_distance(y);
        bool consistent = true;
        if (inst.in_minus_interior(y)) {
            consistent = phi < kTol;
        } else if (!inst.in_minus_cone(y)) {
            consistent = phi > -kTol;
        }
        // On the boundary itself (measure zero for random draws) both signs
        // collapse to zero; checked with explicit points below.
        signs.tally(consistent ? 0.0 : 1.0);
    }
    {
        const double at_zero = std::abs(inst.cone.oriented_distance(Vector::Zero(m)));
        signs.tally(at_zero - kTol);
    }
    report.items.push_back(signs.item(inst.name + ": sign-classification"));

    Counter convexity;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y1 = random_box_point(gen, m, 5.0);
        const Vector y2 = random_box_point(gen, m, 5.0);
        const double lambda = rng::uniform01(gen);
        const double lhs = inst.cone.oriented_distance(lambda * y1 + (1.0 - lambda) * y2);
        const double rhs = lambda * inst.cone.oriented_distance(y1) +
                           (1.0 - lambda) * inst.cone.oriented_distance(y2);
        convexity.tally(lhs - rhs - kTol);
    }
    report.items.push_back(convexity.item(inst.name + ": convexity"));

    Counter homogeneity;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y = random_box_point(gen, m, 5.0);
        const double alpha = rng::uniform(gen, 1e-3, 4.0);
        const double lhs = inst.cone.oriented_distance(alpha * y);
        homogeneity.tally(std::abs(lhs - alpha * inst.cone.oriented_distance(y)) - kTol);
    }
    report.items.push_back(homogeneity.item(inst.name + ": positive-homogeneity"));

    Counter subadd;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y1 = random_box_point(gen, m, 5.0);
        const Vector y2 = random_box_point(gen, m, 5.0);
        const double p1 = inst.cone.oriented_distance(y1);
        const double p2 = inst.cone.oriented_distance(y2);
        subadd.tally(inst.cone.oriented_distance(y1 + y2) - (p1 + p2) - kTol);
        subadd.tally((p1 - p2) - inst.cone.oriented_distance(y1 - y2) - kTol);
    }
    report.items.push_back(subadd.item(inst.name + ": subadditivity"));

    Counter monotone;
    for (int i = 0; i < kSamples; ++i) {
        const Vector y1 = random_box_point(gen, m, 5.0);
        const double p1 = inst.cone.oriented_distance(y1);
        const Vector weak = y1 + inst.sample_member(gen);
        monotone.tally(p1 - inst.cone.oriented_distance(weak) - kTol);
        const Vector strict = y1 + inst.sample_interior(gen);
        monotone.tally(p1 >= inst.cone.oriented_distance(strict) ? 1.0 : 0.0);
    }
    report.items.push_back(monotone.item(inst.name + ": order-monotonicity"));
}

// Region-wise closed forms for the two-dimensional polyhedral example; the
// generators below construct points that certifiably lie in each region.
struct RegionSample {
    const char* region;
    std::function<Vector(std::mt19937_64&)> draw;
    std::function<double(const Vector&)> expected;
};

std::vector<RegionSample> example_2d_regions() {
    const double sqrt2 = std::numbers::sqrt2;
    std::vector<RegionSample> regions;
    regions.push_back({"B1",
                       [](std::mt19937_64& gen) {
                           Vector y(2);
                           y(0) = -std::abs(rng::normal(gen));
                           y(1) = std::abs(rng::normal(gen)) + 0.01;
                           return y;
                       },
                       [](const Vector& y) { return y(1); }});
    regions.push_back({"B2",
                       [](std::mt19937_64& gen) {
                           Vector y(2);
                           y(0) = std::abs(rng::normal(gen)) + 0.01;
                           y(1) = y(0) + std::abs(rng::normal(gen));
                           return y;
                       },
                       [](const Vector& y) { return std::hypot(y(0), y(1)); }});
    regions.push_back({"B3",
                       [](std::mt19937_64& gen) {
                           const double sum = std::abs(rng::normal(gen)) + 0.01;
                           const double diff = std::abs(rng::normal(gen)) + 0.01;
                           Vector y(2);
                           y(0) = 0.5 * (sum + diff);
                           y(1) = 0.5 * (sum - diff);
                           return y;
                       },
                       [sqrt2](const Vector& y) { return std::abs(y(0) + y(1)) / sqrt2; }});
    // Interior region B4: the depth is the nearer of the two perpendicular
    // feet; the anti-diagonal foot is always valid here, the axis foot only
    // for y1 <= 0.
    regions.push_back({"B4",
                       [](std::mt19937_64& gen) {
                           const double sum = -std::abs(rng::normal(gen));
                           const double diff = std::abs(rng::normal(gen)) + 0.01;
                           Vector y(2);
                           y(0) = 0.5 * (sum + diff);
                           y(1) = 0.5 * (sum - diff);
                           return y;
                       },
                       [sqrt2](const Vector& y) {
                           double depth = std::abs(y(0) + y(1)) / sqrt2;
                           if (y(0) <= 0.0) depth = std::min(depth, std::abs(y(1)));
                           return -depth;
                       }});
    regions.push_back({"B5",
                       [](std::mt19937_64& gen) {
                           Vector y(2);
                           y(1) = -std::abs(rng::normal(gen));
                           y(0) = y(1) - std::abs(rng::normal(gen));
                           return y;
                       },
                       [](const Vector& y) { return -std::abs(y(1)); }});
    return regions;
}

std::vector<BoundaryCurve> catalog_boundary(const cone::CatalogEntry& entry) {
    constexpr double kReach = 30.0;
    switch (entry.set) {
        case cone::CatalogSet::UnitBall:
            return {{[](double t) {
                         Vector p(2);
                         p << std::cos(t), std::sin(t);
                         return p;
                     },
                     0.0, 2.0 * std::numbers::pi}};
        case cone::CatalogSet::NegativeOrthant:
            return {{[](double t) {
                         Vector p(2);
                         p << t, 0.0;
                         return p;
                     },
                     -kReach, 0.0},
                    {[](double t) {
                         Vector p(2);
                         p << 0.0, t;
                         return p;
                     },
                     -kReach, 0.0}};
        case cone::CatalogSet::ExampleCone2D:
            return {{[](double t) {
                         Vector p(2);
                         p << t, -t;
                         return p;
                     },
                     0.0, kReach},
                    {[](double t) {
                         Vector p(2);
                         p << t, 0.0;
                         return p;
                     },
                     -kReach, 0.0}};
    }
    throw InternalError("validation: unknown catalog entry");
}

void cone_example_items(CheckReport& report, uint64_t seed) {
    std::mt19937_64 gen(seed ^ 0x65786d70ull);
    constexpr int kPoints = 200;
    constexpr double kExactTol = 1e-12;

    {
        const cone::CatalogEntry ball = cone::catalog_unit_ball(2);
        Counter counter;
        for (const double radius_cap : {0.99, 1.0, 3.0}) {  // inside, boundary, outside
            for (int i = 0; i < kPoints; ++i) {
                const double angle = rng::uniform(gen, 0.0, 2.0 * std::numbers::pi);
                const double radius = radius_cap == 1.0 ? 1.0 : rng::uniform(gen, 0.0, radius_cap);
                Vector y(2);
                y << radius * std::cos(angle), radius * std::sin(angle);
                counter.tally(std::abs(ball.distance(y) - (std::hypot(y(0), y(1)) - 1.0)) - kExactTol);
            }
        }
        report.items.push_back(counter.item("unit-ball closed form"));
    }

    {
        const cone::CatalogEntry orthant = cone::catalog_negative_orthant(2);
        const cone::OrderingCone cone2 = cone::OrderingCone::nonnegative_orthant(2);
        Counter counter;
        for (int i = 0; i < kPoints; ++i) {
            const Vector y = random_box_point(gen, 2, 3.0);
            const double expected = std::max(y(0), y(1));
            counter.tally(std::abs(orthant.distance(y) - expected) - kExactTol);
            counter.tally(std::abs(cone2.oriented_distance(y) - expected) - kExactTol);
        }
        report.items.push_back(counter.item("negative-orthant closed form"));
    }

    {
        const cone::CatalogEntry entry = cone::catalog_example_cone_2d();
        const cone::OrderingCone cone2 = cone::OrderingCone::example_cone_2d();
        for (const RegionSample& region : example_2d_regions()) {
            Counter counter;
            for (int i = 0; i < kPoints; ++i) {
                const Vector y = region.draw(gen);
                const double expected = region.expected(y);
                counter.tally(std::abs(entry.distance(y) - expected) - kExactTol);
                counter.tally(std::abs(cone2.oriented_distance(y) - expected) - kExactTol);
                // Sign classification against direct membership of A = -C.
                const bool in_a = y(0) + y(1) <= 0.0 && y(1) <= 0.0;
                counter.tally((entry.distance(y) <= kExactTol) == in_a ? 0.0 : 1.0);
            }
            report.items.push_back(counter.item(std::string("example-cone-2d closed form, region ") + region.region));
        }
    }

    {
        const cone::OrderingCone orthant = cone::OrderingCone::nonnegative_orthant(3);
        Counter counter;
        for (int i = 0; i < 1000; ++i) {
            const Vector y = random_box_point(gen, 3, 5.0);
            double best = -std::numeric_limits<double>::infinity();
            for (const Vector& w : orthant.max_linear_generators()) best = std::max(best, w.dot(y));
            counter.tally(std::abs(best - orthant.oriented_distance(y)) - 1e-12);
        }
        report.items.push_back(counter.item("max-linear representation agreement"));
    }

    {
        const cone::OrderingCone orthant = cone::OrderingCone::nonnegative_orthant(2);
        const double phi_e = orthant.oriented_distance(orthant.interior_vector());
        CheckItem item{"interior vector: phi(e) = 1 < 2", std::abs(phi_e - 1.0) <= 1e-12 && phi_e < 2.0,
                       "phi(e) = " + std::to_string(phi_e)};
        report.items.push_back(std::move(item));
    }

    {
        Counter counter;
        const std::vector<cone::CatalogEntry> entries = {cone::catalog_unit_ball(2),
                                                         cone::catalog_negative_orthant(2),
                                                         cone::catalog_example_cone_2d()};
        for (const cone::CatalogEntry& entry : entries) {
            const auto curves = catalog_boundary(entry);
            for (int i = 0; i < 60; ++i) {
                const Vector y = random_box_point(gen, 2, 3.0);
                const double unsigned_distance = sampled_boundary_distance(y, curves, entry.norm);
                const double oracle = entry.member(y) ? -unsigned_distance : unsigned_distance;
                counter.tally(std::abs(entry.distance(y) - oracle) - 1e-6);
            }
        }
        report.items.push_back(counter.item("catalog vs sampled-boundary oracle"));
    }
}

// -- lp suite ---------------------------------------------------------------

lp::LinearProgram random_small_lp(std::mt19937_64& gen) {
    const int n = 2 + static_cast<int>(gen() % 5);  // 2..6 variables
    Vector anchor(n);
    for (int j = 0; j < n; ++j) anchor(j) = rng::uniform(gen, 0.1, 2.0);

    Vector cost(n);
    for (int j = 0; j < n; ++j) cost(j) = rng::normal(gen);
    lp::LinearProgram prob = lp::LinearProgram::minimize(cost);
    prob.lower = Vector::Zero(n);

    // At most 8 rows in total: 1..6 random inequalities, one bounding row,
    // sometimes one equality. The anchor stays feasible throughout.
    const int rows = 1 + static_cast<int>(gen() % 6);
    for (int r = 0; r < rows; ++r) {
        Vector a(n);
        for (int j = 0; j < n; ++j) a(j) = rng::normal(gen);
        lp::add_inequality(prob, a, a.dot(anchor) + rng::uniform(gen, 0.0, 2.0));
    }
    lp::add_inequality(prob, Vector::Ones(n), anchor.sum() + rng::uniform(gen, 1.0, 3.0));
    if (gen() % 10 < 3) {
        Vector a(n);
        for (int j = 0; j < n; ++j) a(j) = rng::normal(gen);
        lp::add_equality(prob, a, a.dot(anchor));
    }
    return prob;
}

void lp_suite_items(CheckReport& report, uint64_t seed, int instances) {
    std::mt19937_64 gen(seed ^ 0x6c702d6full);
    Counter agreement, feasibility, certificates, determinism;

    for (int i = 0; i < instances; ++i) {
        const lp::LinearProgram prob = random_small_lp(gen);
        const lp::LpSolution sol = lp::solve(prob);
        if (sol.status != lp::LpStatus::Optimal) {
            agreement.tally(1.0);
            continue;
        }

        const std::vector<Vector> vertices = enumerate_vertices(prob);
        double best = std::numeric_limits<double>::infinity();
        for (const Vector& v : vertices) best = std::min(best, prob.cost.dot(v));
        agreement.tally(std::abs(sol.objective - best) - 1e-8);

        double residual = 0.0;
        for (Eigen::Index r = 0; r < prob.in_lhs.rows(); ++r) {
            residual = std::max(residual, prob.in_lhs.row(r) * sol.point - prob.in_rhs(r));
        }
        for (Eigen::Index r = 0; r < prob.eq_lhs.rows(); ++r) {
            residual = std::max(residual, std::abs(prob.eq_lhs.row(r) * sol.point - prob.eq_rhs(r)));
        }
        for (int j = 0; j < prob.num_variables(); ++j) {
            residual = std::max(residual, prob.lower(j) - sol.point(j));
        }
        feasibility.tally(residual - 1e-9);

        certificates.tally(-sol.reduced_costs.minCoeff() - 1e-9);

        const lp::LpSolution again = lp::solve(prob);
        const bool same_basis = again.basis == sol.basis;
        const bool same_point = (again.point - sol.point).lpNorm<Eigen::Infinity>() == 0.0;
        determinism.tally(same_basis && same_point ? 0.0 : 1.0);
    }

    report.items.push_back(agreement.item("oracle agreement (" + std::to_string(instances) + " random LPs)"));
    report.items.push_back(feasibility.item("optimal-point feasibility"));
    report.items.push_back(certificates.item("reduced-cost certificates"));
    report.items.push_back(determinism.item("deterministic bases"));
}

// -- descent suite ----------------------------------------------------------

void descent_suite_items(CheckReport& report, uint64_t seed, int pairs) {
    const auto portfolio = objective::QuadraticVectorObjective::portfolio_d2007();
    const auto orthant = cone::OrderingCone::nonnegative_orthant(2, cone::Norm::LInfinity);
    const auto simplex = region::Polytope::unit_simplex(portfolio.num_variables());
    const double lipschitz = portfolio.lipschitz_constant();
    const Vector ones = Vector::Ones(2);
    const double phi_e = orthant.oriented_distance(ones);
    constexpr double kTol = 1e-10;

    std::mt19937_64 gen(seed ^ 0x64657363ull);
    Counter componentwise, scalarized;
    for (int i = 0; i < pairs; ++i) {
        const Vector x = simplex.sample_uniform(gen);
        const Vector y = simplex.sample_uniform(gen);
        const double gap = 0.5 * lipschitz * (y - x).squaredNorm();

        const Vector lhs = portfolio.value(y) - portfolio.value(x) -
                           portfolio.jacobian(x) * (y - x) - gap * ones;
        componentwise.tally(lhs.maxCoeff() - kTol);

        const double scalar_lhs = orthant.oriented_distance(portfolio.value(y)) -
                                  orthant.oriented_distance(portfolio.value(x));
        const double scalar_rhs = solver::psi(orthant, portfolio, x, y) + gap * phi_e;
        scalarized.tally(scalar_lhs - scalar_rhs - kTol);
    }
    report.items.push_back(componentwise.item("componentwise descent bound (" + std::to_string(pairs) + " pairs)"));
    report.items.push_back(scalarized.item("scalarized descent bound"));

    bool certified = true;
    for (int i = 0; i < portfolio.num_objectives(); ++i) {
        const Matrix hess_gap = lipschitz * Matrix::Identity(portfolio.num_variables(), portfolio.num_variables()) -
                                2.0 * portfolio.quadratic_term(i);
        certified = certified && objective::is_positive_semidefinite(hess_gap);
    }
    report.items.push_back(CheckItem{"curvature certificate (L I - 2 Q_i PSD)", certified,
                                     "L = " + std::to_string(lipschitz)});
}

}  // namespace

int CheckReport::passed() const {
    int n = 0;
    for (const CheckItem& item : items) n += item.passed ? 1 : 0;
    return n;
}

int CheckReport::failed() const {
    return static_cast<int>(items.size()) - passed();
}

CheckReport run_cone_suite(uint64_t seed) {
    CheckReport report{"cone", {}};
    const std::vector<ConeInstance> instances = {
        orthant_instance("orthant-2/linf", 2, cone::Norm::LInfinity),
        orthant_instance("orthant-3/linf", 3, cone::Norm::LInfinity),
        orthant_instance("orthant-2/l2", 2, cone::Norm::L2),
        example_2d_instance(),
        analytic_instance(),
    };
    for (const ConeInstance& inst : instances) cone_property_items(report, inst, seed);
    cone_example_items(report, seed);
    return report;
}

CheckReport run_lp_suite(uint64_t seed, int instances) {
    CheckReport report{"lp", {}};
    lp_suite_items(report, seed, instances);
    return report;
}

CheckReport run_descent_suite(uint64_t seed, int pairs) {
    CheckReport report{"descent", {}};
    descent_suite_items(report, seed, pairs);
    return report;
}

std::vector<CheckReport> run_all_suites(uint64_t seed) {
    return {run_cone_suite(seed), run_lp_suite(seed), run_descent_suite(seed)};
}

std::vector<CheckReport> run_suites_by_name(const std::string& name, uint64_t seed) {
    if (name == "cone") return {run_cone_suite(seed)};
    if (name == "lp") return {run_lp_suite(seed)};
    if (name == "descent") return {run_descent_suite(seed)};
    if (name == "all") return run_all_suites(seed);
    throw Error("validation: unknown suite \"" + name + "\" (expected cone|lp|descent|all)");
}

std::vector<Vector> enumerate_vertices(const lp::LinearProgram& prob, double feas_tol) {
    const int n = prob.num_variables();

    std::vector<Vector> rows;
    std::vector<double> rhs;
    std::vector<bool> is_equality;
    for (Eigen::Index r = 0; r < prob.eq_lhs.rows(); ++r) {
        rows.push_back(prob.eq_lhs.row(r).transpose());
        rhs.push_back(prob.eq_rhs(r));
        is_equality.push_back(true);
    }
    const size_t eq_count = rows.size();
    for (Eigen::Index r = 0; r < prob.in_lhs.rows(); ++r) {
        rows.push_back(prob.in_lhs.row(r).transpose());
        rhs.push_back(prob.in_rhs(r));
        is_equality.push_back(false);
    }
    for (int j = 0; j < n; ++j) {
        if (std::isfinite(prob.lower(j))) {
            rows.push_back(-Vector::Unit(n, j));
            rhs.push_back(-prob.lower(j));
            is_equality.push_back(false);
        }
        if (std::isfinite(prob.upper(j))) {
            rows.push_back(Vector::Unit(n, j));
            rhs.push_back(prob.upper(j));
            is_equality.push_back(false);
        }
    }

    const size_t total = rows.size();
    const int to_choose = n - static_cast<int>(eq_count);
    std::vector<Vector> vertices;
    if (to_choose < 0 || total < static_cast<size_t>(n)) return vertices;

    auto feasible = [&](const Vector& x) {
        for (size_t r = 0; r < total; ++r) {
            const double slack = rows[r].dot(x) - rhs[r];
            if (is_equality[r] ? std::abs(slack) > feas_tol : slack > feas_tol) return false;
        }
        return true;
    };

    std::vector<size_t> combo(static_cast<size_t>(to_choose));
    for (int i = 0; i < to_choose; ++i) combo[static_cast<size_t>(i)] = eq_count + static_cast<size_t>(i);

    Matrix active(n, n);
    Vector active_rhs(n);
    const size_t free_rows = total - eq_count;
    bool more = to_choose == 0 ? true : free_rows >= static_cast<size_t>(to_choose);
    while (more) {
        for (size_t r = 0; r < eq_count; ++r) {
            active.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
            active_rhs(static_cast<Eigen::Index>(r)) = rhs[r];
        }
        for (int i = 0; i < to_choose; ++i) {
            const size_t r = combo[static_cast<size_t>(i)];
            active.row(static_cast<Eigen::Index>(eq_count) + i) = rows[r].transpose();
            active_rhs(static_cast<Eigen::Index>(eq_count) + i) = rhs[r];
        }
        Eigen::FullPivLU<Matrix> lu(active);
        if (lu.isInvertible()) {
            const Vector x = lu.solve(active_rhs);
            if (feasible(x)) {
                bool duplicate = false;
                for (const Vector& v : vertices) {
                    if ((v - x).lpNorm<Eigen::Infinity>() <= 1e-8) {
                        duplicate = true;
                        break;
                    }
                }
                if (!duplicate) vertices.push_back(x);
            }
        }

        if (to_choose == 0) break;
        // Next combination in lexicographic order.
        int pos = to_choose - 1;
        while (pos >= 0 && combo[static_cast<size_t>(pos)] ==
                               eq_count + free_rows - static_cast<size_t>(to_choose - pos)) {
            --pos;
        }
        if (pos < 0) {
            more = false;
        } else {
            ++combo[static_cast<size_t>(pos)];
            for (int i = pos + 1; i < to_choose; ++i) {
                combo[static_cast<size_t>(i)] = combo[static_cast<size_t>(i - 1)] + 1;
            }
        }
    }
    return vertices;
}

double sampled_boundary_distance(const Vector& y, const std::vector<BoundaryCurve>& curves,
                                 cone::Norm norm) {
    double best = std::numeric_limits<double>::infinity();
    for (const BoundaryCurve& curve : curves) {
        double lo = curve.t_begin;
        double hi = curve.t_end;
        double best_t = lo;
        double best_d = std::numeric_limits<double>::infinity();
        int samples = 4001;
        for (int level = 0; level < 4; ++level) {
            const double step = (hi - lo) / static_cast<double>(samples - 1);
            for (int i = 0; i < samples; ++i) {
                const double t = lo + step * i;
                const double d = norm_of(y - curve.point(t), norm);
                if (d < best_d) {
                    best_d = d;
                    best_t = t;
                }
            }
            // Zoom into a window that certainly brackets the true minimizer.
            const double window = 2.0 * step;
            lo = std::max(curve.t_begin, best_t - window);
            hi = std::min(curve.t_end, best_t + window);
            samples = 401;
        }
        best = std::min(best, best_d);
    }
    return best;
}

Matrix finite_difference_jacobian(const std::function<Vector(const Vector&)>& map, const Vector& x,
                                  double step) {
    const Vector base = map(x);
    Matrix jac(base.size(), x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        Vector lo = x, hi = x;
        hi(j) += step;
        lo(j) -= step;
        jac.col(j) = (map(hi) - map(lo)) / (2.0 * step);
    }
    return jac;
}

}  // namespace vfw::validation
