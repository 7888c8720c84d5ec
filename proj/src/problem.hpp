#pragma once

#include <string>

#include "cone.hpp"
#include "objective.hpp"
#include "region.hpp"

namespace vfw::problem {

/// A complete solvable instance: ordering cone, vector objective and
/// feasible region with mutually consistent dimensions.
struct Problem {
    cone::OrderingCone ordering;
    objective::QuadraticVectorObjective objective;
    region::Polytope feasible;
};

/// Parses the JSON problem document:
///
///   {
///     "cone":       {"kind": "orthant", "m": 2, "norm": "linf"},
///     "objectives": [{"Q": [[...]], "c": [...]}, ...]   (or a builtin name),
///     "region":     {"kind": "simplex", "n": 5}
///                   | {"kind": "box", "lower": [...], "upper": [...]}
///                   | {"kind": "general", "n": 3, "A_eq": ..., "b_eq": ...,
///                      "A_in": ..., "b_in": ..., "lower": ..., "upper": ...}
///   }
///
/// "Q" and "c" may each be omitted (treated as zero). Throws ParseError on
/// schema violations and dimension inconsistencies.
Problem parse_problem_json(const std::string& text);

/// Reads and parses a problem file. Throws IoError when unreadable.
Problem load_problem_file(const std::string& path);

bool is_builtin_problem(const std::string& name);

/// Built-in instances; "portfolio-d2007" is the five-stock bicriteria
/// mean-variance problem on the unit simplex.
Problem builtin_problem(const std::string& name);

/// Resolves a CLI-style problem argument: a builtin name or a file path.
Problem resolve_problem(const std::string& name_or_path);

}  // namespace vfw::problem
