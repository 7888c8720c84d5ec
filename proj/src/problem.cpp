#include "problem.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace vfw::problem {

namespace {

using nlohmann::json;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& what) {
    throw ParseError("problem: " + what);
}

const json& require(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) fail(std::string("missing \"") + key + "\" section");
    return *it;
}

Vector parse_vector(const json& node, const char* what) {
    if (!node.is_array()) fail(std::string(what) + " must be an array of numbers");
    Vector v(node.size());
    Eigen::Index i = 0;
    for (const auto& item : node) {
        if (!item.is_number()) fail(std::string(what) + " must contain only numbers");
        v(i++) = item.get<double>();
    }
    return v;
}

Matrix parse_matrix(const json& node, const char* what) {
    if (!node.is_array() || node.empty()) fail(std::string(what) + " must be a non-empty array of rows");
    const size_t cols = node.front().is_array() ? node.front().size() : 0;
    Matrix m(static_cast<Eigen::Index>(node.size()), static_cast<Eigen::Index>(cols));
    Eigen::Index r = 0;
    for (const auto& row : node) {
        if (!row.is_array() || row.size() != cols) fail(std::string(what) + " must be rectangular");
        Eigen::Index c = 0;
        for (const auto& item : row) {
            if (!item.is_number()) fail(std::string(what) + " must contain only numbers");
            m(r, c++) = item.get<double>();
        }
        ++r;
    }
    return m;
}

cone::OrderingCone parse_cone(const json& node) {
    if (!node.is_object()) fail("\"cone\" must be an object");
    const std::string kind = require(node, "kind").get<std::string>();
    if (kind != "orthant") fail("unknown cone kind \"" + kind + "\" (expected \"orthant\")");
    const int m = require(node, "m").get<int>();
    if (m < 1) fail("cone dimension must be positive");
    std::string norm = "linf";
    if (node.contains("norm")) norm = node["norm"].get<std::string>();
    if (norm == "linf") return cone::OrderingCone::nonnegative_orthant(m, cone::Norm::LInfinity);
    if (norm == "l2") return cone::OrderingCone::nonnegative_orthant(m, cone::Norm::L2);
    fail("unknown cone norm \"" + norm + "\" (expected \"linf\" or \"l2\")");
}

objective::QuadraticVectorObjective parse_objectives(const json& node) {
    if (node.is_string()) {
        const std::string name = node.get<std::string>();
        if (name == "portfolio-d2007") return objective::QuadraticVectorObjective::portfolio_d2007();
        fail("unknown builtin objective \"" + name + "\"");
    }
    if (!node.is_array() || node.empty()) fail("\"objectives\" must be a non-empty array or a builtin name");

    std::vector<Matrix> quads;
    std::vector<Vector> lins;
    int n = -1;
    for (const auto& entry : node) {
        if (!entry.is_object()) fail("each objective must be an object with \"Q\" and/or \"c\"");
        Matrix q;
        Vector c;
        const bool has_q = entry.contains("Q");
        const bool has_c = entry.contains("c");
        if (!has_q && !has_c) fail("an objective needs at least one of \"Q\", \"c\"");
        if (has_q) q = parse_matrix(entry["Q"], "\"Q\"");
        if (has_c) c = parse_vector(entry["c"], "\"c\"");
        if (!has_q) q = Matrix::Zero(c.size(), c.size());
        if (!has_c) c = Vector::Zero(q.rows());
        if (q.rows() != q.cols()) fail("\"Q\" must be square");
        if (q.rows() != c.size()) fail("\"Q\" and \"c\" sizes disagree");
        if (n < 0) n = static_cast<int>(c.size());
        if (static_cast<int>(c.size()) != n) fail("objectives have inconsistent variable counts");
        quads.push_back(std::move(q));
        lins.push_back(std::move(c));
    }
    try {
        return objective::QuadraticVectorObjective(std::move(quads), std::move(lins));
    } catch (const Error& e) {
        fail(e.what());
    }
}

region::Polytope parse_region(const json& node) {
    if (!node.is_object()) fail("\"region\" must be an object");
    const std::string kind = require(node, "kind").get<std::string>();
    if (kind == "simplex") {
        const int n = require(node, "n").get<int>();
        if (n < 1) fail("region dimension must be positive");
        return region::Polytope::unit_simplex(n);
    }
    if (kind == "box") {
        return region::Polytope::box(parse_vector(require(node, "lower"), "\"lower\""),
                                     parse_vector(require(node, "upper"), "\"upper\""));
    }
    if (kind == "general") {
        const int n = require(node, "n").get<int>();
        if (n < 1) fail("region dimension must be positive");
        Matrix eq_lhs = Matrix::Zero(0, n);
        Vector eq_rhs = Vector::Zero(0);
        Matrix in_lhs = Matrix::Zero(0, n);
        Vector in_rhs = Vector::Zero(0);
        Vector lower = Vector::Constant(n, -kInf);
        Vector upper = Vector::Constant(n, kInf);
        if (node.contains("A_eq") != node.contains("b_eq")) fail("\"A_eq\" and \"b_eq\" must come together");
        if (node.contains("A_in") != node.contains("b_in")) fail("\"A_in\" and \"b_in\" must come together");
        if (node.contains("A_eq")) {
            eq_lhs = parse_matrix(node["A_eq"], "\"A_eq\"");
            eq_rhs = parse_vector(node["b_eq"], "\"b_eq\"");
        }
        if (node.contains("A_in")) {
            in_lhs = parse_matrix(node["A_in"], "\"A_in\"");
            in_rhs = parse_vector(node["b_in"], "\"b_in\"");
        }
        if (node.contains("lower")) lower = parse_vector(node["lower"], "\"lower\"");
        if (node.contains("upper")) upper = parse_vector(node["upper"], "\"upper\"");
        if ((eq_lhs.rows() > 0 && eq_lhs.cols() != n) || eq_lhs.rows() != eq_rhs.size() ||
            (in_lhs.rows() > 0 && in_lhs.cols() != n) || in_lhs.rows() != in_rhs.size() ||
            lower.size() != n || upper.size() != n) {
            fail("region arrays have inconsistent dimensions");
        }
        try {
            return region::Polytope::general(std::move(eq_lhs), std::move(eq_rhs), std::move(in_lhs),
                                             std::move(in_rhs), std::move(lower), std::move(upper));
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    fail("unknown region kind \"" + kind + "\"");
}

}  // namespace

Problem parse_problem_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top-level document must be an object");

    Problem p{parse_cone(require(doc, "cone")), parse_objectives(require(doc, "objectives")),
              parse_region(require(doc, "region"))};

    if (p.ordering.dimension() != p.objective.num_objectives()) {
        fail("cone dimension does not match the number of objectives");
    }
    if (p.objective.num_variables() != p.feasible.dimension()) {
        fail("objective variable count does not match the region dimension");
    }
    return p;
}

Problem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("problem: cannot read file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_json(buffer.str());
}

bool is_builtin_problem(const std::string& name) {
    return name == "portfolio-d2007";
}

Problem builtin_problem(const std::string& name) {
    if (name == "portfolio-d2007") {
        return Problem{cone::OrderingCone::nonnegative_orthant(2, cone::Norm::LInfinity),
                       objective::QuadraticVectorObjective::portfolio_d2007(),
                       region::Polytope::unit_simplex(5)};
    }
    throw ParseError("problem: unknown builtin \"" + name + "\"");
}

Problem resolve_problem(const std::string& name_or_path) {
    if (is_builtin_problem(name_or_path)) return builtin_problem(name_or_path);
    return load_problem_file(name_or_path);
}

}  // namespace vfw::problem
