#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hopfrt/rational.hpp"

namespace hopfrt {

/// Exponent vector -> coefficient.
using PolyTerms = std::map<std::vector<int>, Rational>;

/// Parses a polynomial with rational coefficients over the named variables,
/// e.g. `x2 + 1/2 x1^2 - 3*x1*x2`. Juxtaposition and `*` both multiply.
/// Throws ParseError with the offending position.
PolyTerms parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace hopfrt
