#pragma once

#include <string_view>

#include "wittkit/series.hpp"

namespace wk {

/// Parses rational-function literals such as "1/(1-2t)", "(1-t)/(1-6t)",
/// "1/((1-t)(1-2t))" or "t/(1-t)^2" in one variable. Coefficients are
/// integers; juxtaposition multiplies; '^' takes an integer exponent (negative
/// allowed). Throws ParseError on malformed text and DomainError on division by zero.
RatFunc parse_ratfunc(std::string_view text, char var = 't');

}  // namespace wk
