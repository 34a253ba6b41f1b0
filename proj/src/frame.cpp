#include "hopfrt/frame.hpp"

#include <algorithm>
#include <stdexcept>

#include "hopfrt/errors.hpp"
#include "hopfrt/polynomial_parse.hpp"

namespace hopfrt {

// XSeries

XSeries::XSeries(int order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) { trim(); }

void XSeries::trim() {
  const std::size_t keep = order_ < 0 ? 0 : static_cast<std::size_t>(order_) + 1;
  if (coeffs_.size() > keep) coeffs_.resize(keep);
  while (!coeffs_.empty() && hopfrt::is_zero(coeffs_.back())) coeffs_.pop_back();
}

XSeries XSeries::constant(int order, const Rational& c) { return XSeries(order, {c}); }

XSeries XSeries::identity(int order) { return XSeries(order, {0, 1}); }

Rational XSeries::coefficient(int k) const {
  return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : Rational(0);
}

bool XSeries::is_zero() const { return coeffs_.empty(); }

XSeries& XSeries::operator+=(const XSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

XSeries& XSeries::operator-=(const XSeries& o) {
  order_ = std::min(order_, o.order_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

XSeries& XSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  const int order = std::min(a.order_, b.order_);
  if (order < 0 || a.coeffs_.empty() || b.coeffs_.empty()) return XSeries(order);
  std::vector<Rational> c(std::min<std::size_t>(a.coeffs_.size() + b.coeffs_.size() - 1, order + 1));
  for (std::size_t i = 0; i < a.coeffs_.size() && i < c.size(); ++i) {
    if (hopfrt::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return XSeries(order, std::move(c));
}

XSeries XSeries::derivative() const {
  std::vector<Rational> c;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * static_cast<unsigned long>(k));
  return XSeries(order_ - 1, std::move(c));
}

XSeries XSeries::truncated(int order) const { return XSeries(std::min(order, order_), coeffs_); }

XSeries XSeries::compose(const XSeries& inner) const {
  if (!hopfrt::is_zero(inner.coefficient(0))) throw std::invalid_argument("inner series must vanish at 0");
  const int order = std::min(order_, inner.order_);
  XSeries out(order);
  // Horner: (((c_n) g + c_{n-1}) g + ...) + c_0.
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    out = out * inner;
    out += XSeries::constant(order, coeffs_[k]);
  }
  return out;
}

XSeries XSeries::reciprocal() const {
  const Rational c0 = coefficient(0);
  if (hopfrt::is_zero(c0)) throw std::invalid_argument("reciprocal of a series vanishing at 0");
  if (order_ < 0) return XSeries(order_);
  std::vector<Rational> r(order_ + 1);
  r[0] = 1 / c0;
  for (int n = 1; n <= order_; ++n) {
    Rational s = 0;
    for (int k = 1; k <= n; ++k) s += coefficient(k) * r[n - k];
    r[n] = -s / c0;
  }
  return XSeries(order_, std::move(r));
}

XSeries XSeries::inverse() const {
  const Rational a = coefficient(1);
  if (!hopfrt::is_zero(coefficient(0)) || hopfrt::is_zero(a)) {
    throw std::invalid_argument("compositional inverse needs ψ(0) = 0 and ψ'(0) ≠ 0");
  }
  const XSeries x = identity(order_);
  const XSeries nonlinear = *this - a * x;
  XSeries h = (1 / a) * x;
  // Each pass fixes one more coefficient of h.
  for (int pass = 1; pass < order_; ++pass) h = (1 / a) * (x - nonlinear.compose(h));
  return h;
}

std::string XSeries::str() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (hopfrt::is_zero(c)) continue;
    const bool neg = sgn(c) < 0;
    out += out.empty() ? (neg ? "- " : "") : (neg ? " - " : " + ");
    const Rational mag = neg ? Rational(-c) : c;
    if (k == 0 || mag != 1) out += to_string(mag);
    if (k > 0) {
      if (mag != 1) out += ' ';
      out += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order_ + 1) + ")";
}

XSeries parse_xseries(std::string_view text, int order) {
  const PolyTerms terms = parse_polynomial(text, {"x"});
  std::vector<Rational> c;
  for (const auto& [e, v] : terms) {
    if (static_cast<std::size_t>(e[0]) >= c.size()) c.resize(e[0] + 1);
    c[e[0]] = v;
  }
  return XSeries(order, std::move(c));
}

// FormalDiffeo

FormalDiffeo::FormalDiffeo(XSeries psi) : psi_(std::move(psi)) {
  if (!hopfrt::is_zero(psi_.coefficient(0))) throw std::invalid_argument("diffeomorphism must fix 0 (psi(0) = 0)");
  if (sgn(psi_.coefficient(1)) <= 0) throw std::invalid_argument("diffeomorphism must have psi'(0) > 0");
}

// FrameFunction

FrameFunction FrameFunction::constant(int order, const Rational& c) { return term(XSeries::constant(order, c), 0); }

FrameFunction FrameFunction::x(int order) { return term(XSeries::identity(order), 0); }

FrameFunction FrameFunction::y(int order) { return term(XSeries::constant(order, 1), 1); }

FrameFunction FrameFunction::term(const XSeries& c, int b) {
  if (b < 0) throw std::invalid_argument("negative y power");
  FrameFunction f(c.order());
  f.add(b, c);
  f.tidy();
  return f;
}

void FrameFunction::add(int b, const XSeries& c) {
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, c.truncated(order_));
  } else {
    it->second += c;
  }
}

void FrameFunction::tidy() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second.truncated(order_);
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

XSeries FrameFunction::y_coefficient(int b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? XSeries(order_) : it->second;
}

bool FrameFunction::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first == degree; });
}

FrameFunction& FrameFunction::operator+=(const FrameFunction& o) {
  order_ = std::min(order_, o.order_);
  for (const auto& [b, c] : o.terms_) add(b, c);
  tidy();
  return *this;
}

FrameFunction& FrameFunction::operator-=(const FrameFunction& o) {
  order_ = std::min(order_, o.order_);
  for (const auto& [b, c] : o.terms_) add(b, Rational(-1) * c);
  tidy();
  return *this;
}

FrameFunction& FrameFunction::operator*=(const Rational& c) {
  for (auto& [b, v] : terms_) v *= c;
  tidy();
  return *this;
}

FrameFunction operator*(const FrameFunction& a, const FrameFunction& b) {
  FrameFunction out(std::min(a.order_, b.order_));
  for (const auto& [ba, ca] : a.terms_)
    for (const auto& [bb, cb] : b.terms_) out.add(ba + bb, ca * cb);
  out.tidy();
  return out;
}

FrameFunction FrameFunction::d_x() const {
  FrameFunction out(order_ - 1);
  for (const auto& [b, c] : terms_) out.add(b, c.derivative());
  out.tidy();
  return out;
}

FrameFunction FrameFunction::y_dy() const {
  FrameFunction out(order_);
  for (const auto& [b, c] : terms_)
    if (b != 0) out.add(b, Rational(b) * c);
  out.tidy();
  return out;
}

FrameFunction FrameFunction::truncated(int order) const {
  FrameFunction out = *this;
  out.order_ = std::min(order, order_);
  out.tidy();
  return out;
}

FrameFunction FrameFunction::compose_lift(const FormalDiffeo& psi) const {
  const XSeries& p = psi.series();
  const XSeries slope = p.derivative();
  int order = std::min(order_, p.order());
  if (!terms_.empty() && terms_.rbegin()->first > 0) order = std::min(order, slope.order());
  FrameFunction out(order);
  XSeries power = XSeries::constant(order, 1);
  int at = 0;
  for (const auto& [b, c] : terms_) {
    for (; at < b; ++at) power = power * slope;
    out.add(b, c.compose(p) * power);
  }
  out.tidy();
  return out;
}

std::string FrameFunction::str() const {
  struct Term {
    int a, b;
    Rational c;
  };
  std::vector<Term> ts;
  for (const auto& [b, c] : terms_)
    for (int a = 0; a <= order_; ++a)
      if (!hopfrt::is_zero(c.coefficient(a))) ts.push_back({a, b, c.coefficient(a)});
  std::sort(ts.begin(), ts.end(), [](const Term& l, const Term& r) { return l.a != r.a ? l.a < r.a : l.b < r.b; });
  std::string out;
  for (const auto& [a, b, c] : ts) {
    const bool neg = sgn(c) < 0;
    out += out.empty() ? (neg ? "- " : "") : (neg ? " - " : " + ");
    const Rational mag = neg ? Rational(-c) : c;
    std::string mono;
    if (a > 0) mono += a == 1 ? "x" : "x^" + std::to_string(a);
    if (b > 0) mono += std::string(mono.empty() ? "" : " ") + (b == 1 ? "y" : "y^" + std::to_string(b));
    if (mono.empty() || mag != 1) out += to_string(mag);
    if (!mono.empty() && mag != 1) out += ' ';
    out += mono;
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order_ + 1) + ")";
}

FrameFunction parse_frame_function(std::string_view text, int order) {
  const PolyTerms terms = parse_polynomial(text, {"x", "y"});
  FrameFunction f(order);
  for (const auto& [e, v] : terms) {
    std::vector<Rational> c(e[0] + 1);
    c[e[0]] = v;
    f += FrameFunction::term(XSeries(order, std::move(c)), e[1]);
  }
  return f;
}

std::optional<std::string> first_mismatch(const FrameFunction& a, const FrameFunction& b) {
  const int order = std::min(a.order(), b.order());
  if (order < 0) throw TruncationError("comparison has no retained coefficients", -order);
  const FrameFunction d = a.truncated(order) - b.truncated(order);
  if (d.is_zero()) return std::nullopt;
  const auto& [yb, c] = *d.terms().begin();
  int xa = 0;
  while (hopfrt::is_zero(c.coefficient(xa))) ++xa;
  return "x^" + std::to_string(xa) + " y^" + std::to_string(yb) + ": " +
         to_string(a.y_coefficient(yb).coefficient(xa)) + " vs " + to_string(b.y_coefficient(yb).coefficient(xa));
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  return {a.f * b.f.compose_lift(a.psi), b.psi.after(a.psi)};
}

std::optional<std::string> first_mismatch(const Monomial& a, const Monomial& b) {
  if (auto m = first_mismatch(a.f, b.f)) return "function part " + *m;
  const int order = std::min(a.psi.order(), b.psi.order());
  for (int k = 0; k <= order; ++k) {
    if (a.psi.series().coefficient(k) != b.psi.series().coefficient(k)) {
      return "diffeomorphism x^" + std::to_string(k) + ": " + to_string(a.psi.series().coefficient(k)) + " vs " +
             to_string(b.psi.series().coefficient(k));
    }
  }
  return std::nullopt;
}

}  // namespace hopfrt
