#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfrt {

// GMP keeps mpq_class values canonical after every arithmetic operation.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Parses `p`, `-p` or `p/q`. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational factorial(unsigned k);
Rational binomial(unsigned n, unsigned k);

}  // namespace hopfrt
