#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfrt/polynomial_parse.hpp"
#include "hopfrt/rational.hpp"

namespace hopfrt {

/// A truncated multivariate power series at the origin with rational
/// coefficients.
///
/// `order()` is the total degree up to which the coefficients are known.
/// Products keep the smaller order of their factors, a partial derivative
/// lowers it by one, so every stored coefficient is exact. A negative order
/// means nothing is known.
class MultiSeries {
 public:
  MultiSeries() = default;
  MultiSeries(std::size_t nvars, int order) : nvars_(nvars), order_(order) {}

  static MultiSeries from_terms(std::size_t nvars, int order, const PolyTerms& terms);
  static MultiSeries constant(std::size_t nvars, int order, const Rational& c);
  static MultiSeries variable(std::size_t nvars, int order, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  int order() const { return order_; }
  const PolyTerms& terms() const { return terms_; }
  Rational coefficient(const std::vector<int>& exps) const;
  Rational constant_term() const { return coefficient(std::vector<int>(nvars_, 0)); }
  bool is_zero() const { return terms_.empty(); }

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const Rational& c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);

  /// ∂/∂x_i; the result has order one less.
  MultiSeries partial(std::size_t i) const;

  /// Drops everything above `order` (which must not exceed the current order).
  MultiSeries truncated(int order) const;

  /// `c x1^a x2^b + ... + O(p)` where p = order + 1.
  std::string str(const std::vector<std::string>& variables) const;

 private:
  void add_term(const std::vector<int>& exps, const Rational& c);

  std::size_t nvars_ = 0;
  int order_ = 0;
  PolyTerms terms_;
};

struct SeriesMismatch {
  std::vector<int> exponents;
  Rational lhs;
  Rational rhs;
};

/// First coefficient (in exponent order) where `a` and `b` differ, comparing
/// only up to the smaller order. Throws TruncationError if that order is
/// negative.
std::optional<SeriesMismatch> first_mismatch(const MultiSeries& a, const MultiSeries& b);

inline bool agree(const MultiSeries& a, const MultiSeries& b) { return !first_mismatch(a, b); }

/// Right-hand side of dx/ds = f(x): one component per variable.
struct VectorField {
  std::vector<MultiSeries> components;

  std::size_t dimension() const { return components.size(); }
  int order() const;
  std::vector<std::string> variable_names() const;
};

/// One line per component, `fI = <polynomial in x1..xn>`, components in any
/// order but each exactly once. Blank lines and lines starting with `#` are
/// skipped. Throws ParseError; positions are offsets into `text`.
VectorField parse_vector_field(std::string_view text, int order);

}  // namespace hopfrt
