#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfrt/rational.hpp"

namespace hopfrt {

/// Truncated power series in x at 0, coefficients x^0..x^order known exactly.
class XSeries {
 public:
  XSeries() = default;
  explicit XSeries(int order) : order_(order) {}
  XSeries(int order, std::vector<Rational> coeffs);

  static XSeries constant(int order, const Rational& c);
  static XSeries identity(int order);

  int order() const { return order_; }
  Rational coefficient(int k) const;
  bool is_zero() const;

  XSeries& operator+=(const XSeries& o);
  XSeries& operator-=(const XSeries& o);
  XSeries& operator*=(const Rational& c);
  friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
  friend XSeries operator*(const Rational& c, XSeries a) { return a *= c; }
  friend XSeries operator*(const XSeries& a, const XSeries& b);

  XSeries derivative() const;
  XSeries truncated(int order) const;

  /// this ∘ inner; `inner` must vanish at 0.
  XSeries compose(const XSeries& inner) const;
  /// 1/this; the constant term must be nonzero.
  XSeries reciprocal() const;
  /// Compositional inverse; needs zero constant term and nonzero slope.
  XSeries inverse() const;

  std::string str() const;

 private:
  void trim();

  int order_ = 0;
  std::vector<Rational> coeffs_;  // size ≤ order_ + 1, trailing zeros trimmed
};

XSeries parse_xseries(std::string_view text, int order);

/// ψ with ψ(0) = 0 and ψ′(0) > 0.
class FormalDiffeo {
 public:
  explicit FormalDiffeo(XSeries psi);
  static FormalDiffeo identity(int order) { return FormalDiffeo(XSeries::identity(order)); }

  const XSeries& series() const { return psi_; }
  int order() const { return psi_.order(); }

  /// this ∘ inner.
  FormalDiffeo after(const FormalDiffeo& inner) const { return FormalDiffeo(psi_.compose(inner.psi_)); }
  FormalDiffeo inverse() const { return FormalDiffeo(psi_.inverse()); }

 private:
  XSeries psi_;
};

/// Γ(x).
using CurvatureFn = XSeries;

/// Σ_b c_b(x) y^b: a polynomial in the fiber coordinate y = e^z whose
/// coefficients are x-series known to a common order.
class FrameFunction {
 public:
  FrameFunction() = default;
  explicit FrameFunction(int order) : order_(order) {}

  static FrameFunction constant(int order, const Rational& c);
  static FrameFunction x(int order);
  static FrameFunction y(int order);
  /// c(x)·y^b.
  static FrameFunction term(const XSeries& c, int b);

  int order() const { return order_; }
  const std::map<int, XSeries>& terms() const { return terms_; }
  XSeries y_coefficient(int b) const;
  bool is_zero() const { return terms_.empty(); }
  /// True if every y^b present has b == degree.
  bool is_homogeneous(int degree) const;

  FrameFunction& operator+=(const FrameFunction& o);
  FrameFunction& operator-=(const FrameFunction& o);
  FrameFunction& operator*=(const Rational& c);
  friend FrameFunction operator+(FrameFunction a, const FrameFunction& b) { return a += b; }
  friend FrameFunction operator-(FrameFunction a, const FrameFunction& b) { return a -= b; }
  friend FrameFunction operator*(const Rational& c, FrameFunction a) { return a *= c; }
  friend FrameFunction operator*(const FrameFunction& a, const FrameFunction& b);

  FrameFunction d_x() const;
  /// ∂_z = y ∂_y.
  FrameFunction y_dy() const;
  FrameFunction truncated(int order) const;

  /// f ∘ ψ̃ with ψ̃(x, y) = (ψ(x), y ψ′(x)).
  FrameFunction compose_lift(const FormalDiffeo& psi) const;

  /// `c x^a y^b + ... + O(x^{D+1})`.
  std::string str() const;

 private:
  void add(int b, const XSeries& c);
  void tidy();

  int order_ = 0;
  std::map<int, XSeries> terms_;
};

/// Parses a polynomial in x and y.
FrameFunction parse_frame_function(std::string_view text, int order);

/// First differing coefficient up to the common order, described as
/// `x^a y^b: lhs vs rhs`. Throws TruncationError if that order is negative.
std::optional<std::string> first_mismatch(const FrameFunction& a, const FrameFunction& b);

/// f U*_ψ.
struct Monomial {
  FrameFunction f;
  FormalDiffeo psi;
};

/// (f_a U*_{ψ_a})(f_b U*_{ψ_b}) = f_a·(f_b ∘ ψ̃_a) U*_{ψ_b∘ψ_a}.
Monomial monomial_product(const Monomial& a, const Monomial& b);

std::optional<std::string> first_mismatch(const Monomial& a, const Monomial& b);

}  // namespace hopfrt
