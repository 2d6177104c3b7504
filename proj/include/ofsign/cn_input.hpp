#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ofsign/nullstellensatz.hpp"

namespace ofsign {

/// A polynomial plus list system, as read by `ofsign cn eval`.
///
/// JSON object with "lists" (array of arrays of rationals) and exactly one of
///   "factors": [{"coefficients": [...], "constant": c}, ...]
///   "terms":   [{"coefficient": c, "exponents": [...]}, ...]
///   "graph":   graph6 or bracket string, optional "labels": [...] per edge
/// Rationals are JSON integers or strings such as "-3/4" or "0.5".
struct CnProblem {
    std::variant<FactoredPolynomial, SparsePolynomial> polynomial;
    ListSystem lists;
};

/// Throws NullstellensatzError (or GraphError for a bad "graph").
CnProblem parse_cn_problem(const std::string& json_text);

Rational evaluate_grid(const CnProblem& problem);
/// Coefficient of x^d, d_j = |L_j| - 1, by expansion.
Rational evaluate_symbolic(const CnProblem& problem);

}  // namespace ofsign
