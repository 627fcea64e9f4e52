#pragma once

#include <string>

#include "subsmooth/scalar_fn.hpp"

namespace subsmooth {

// Small arithmetic expression grammar for user-supplied functions:
// +, -, *, /, abs, sqrt, sin, cos, exp, max, min, numeric constants and
// coordinates x1..x5. Example: "abs(x1) + 3*max(x1, x2)".
ScalarFn parse_expression(const std::string& text, int dim);

// Number of the highest coordinate referenced (0 when constant).
int expression_max_coordinate(const std::string& text);

}  // namespace subsmooth
