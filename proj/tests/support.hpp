#pragma once

// Shared helpers for the test suites: deterministic generators, independent
// oracles, and small utilities. Everything here stays off the implementation
// paths it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "rng.hpp"

namespace testing_support {

using vfw::Matrix;
using vfw::Vector;

inline Vector random_vector(std::mt19937_64& gen, int n, double lo = -1.0, double hi = 1.0) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = vfw::rng::uniform(gen, lo, hi);
    return v;
}

/// Exact largest eigenvalue magnitude via a dense symmetric eigensolve;
/// cross-checks the power-iteration path.
inline double eigensolver_spectral_norm(const Matrix& q) {
    if (q.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(q, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

/// All compositions of `resolution` into n nonnegative parts, scaled to the
/// unit simplex: a deterministic grid covering the feasible set.
inline std::vector<Vector> simplex_grid(int n, int resolution) {
    std::vector<Vector> points;
    std::vector<int> parts(static_cast<size_t>(n), 0);
    std::function<void(int, int)> recurse = [&](int index, int remaining) {
        if (index == n - 1) {
            parts[static_cast<size_t>(index)] = remaining;
            Vector p(n);
            for (int i = 0; i < n; ++i) {
                p(i) = static_cast<double>(parts[static_cast<size_t>(i)]) / resolution;
            }
            points.push_back(std::move(p));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            parts[static_cast<size_t>(index)] = k;
            recurse(index + 1, remaining - k);
        }
    };
    recurse(0, resolution);
    return points;
}

/// Oriented distance of the rotated cone C = {y : y2 >= |y1|} under the
/// Euclidean norm, from elementary geometry. Used as an analytic-cone
/// evaluator with nontrivial shape.
inline double rotated_cone_phi(const Vector& y) {
    const double y1 = y(0), y2 = y(1);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const bool inside_minus_c = y2 <= -std::abs(y1);
    if (inside_minus_c) {
        // Depth: perpendicular distance to the nearer boundary ray.
        return -std::min(std::abs(y1 + y2), std::abs(y1 - y2)) * inv_sqrt2;
    }
    // Distance to -C: nearest point lies on one of the two boundary rays
    // t*(1,-1)/sqrt(2), t*(-1,-1)/sqrt(2) with t >= 0.
    auto ray_distance = [&](double ux, double uy) {
        const double t = std::max(0.0, y1 * ux + y2 * uy);
        const double dx = y1 - t * ux;
        const double dy = y2 - t * uy;
        return std::hypot(dx, dy);
    };
    return std::min(ray_distance(inv_sqrt2, -inv_sqrt2), ray_distance(-inv_sqrt2, -inv_sqrt2));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Unique temporary file path for test outputs.
inline std::string temp_path(const std::string& stem) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    return (dir / (stem + "-" + std::to_string(++counter))).string();
}

}  // namespace testing_support
