#include "hopfrt/series.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "hopfrt/errors.hpp"

namespace hopfrt {

namespace {

int total_degree(const std::vector<int>& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_compatible(const MultiSeries& a, const MultiSeries& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("series over different variable counts");
}

}  // namespace

void MultiSeries::add_term(const std::vector<int>& exps, const Rational& c) {
  if (hopfrt::is_zero(c) || total_degree(exps) > order_) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (hopfrt::is_zero(it->second)) terms_.erase(it);
  }
}

MultiSeries MultiSeries::from_terms(std::size_t nvars, int order, const PolyTerms& terms) {
  MultiSeries s(nvars, order);
  for (const auto& [e, c] : terms) {
    if (e.size() != nvars) throw std::invalid_argument("exponent vector has wrong length");
    s.add_term(e, c);
  }
  return s;
}

MultiSeries MultiSeries::constant(std::size_t nvars, int order, const Rational& c) {
  MultiSeries s(nvars, order);
  s.add_term(std::vector<int>(nvars, 0), c);
  return s;
}

MultiSeries MultiSeries::variable(std::size_t nvars, int order, std::size_t i) {
  MultiSeries s(nvars, order);
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  s.add_term(e, 1);
  return s;
}

Rational MultiSeries::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  check_compatible(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  check_compatible(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (hopfrt::is_zero(c)) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a, b);
  MultiSeries out(a.nvars_, std::min(a.order_, b.order_));
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > out.order_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiSeries MultiSeries::partial(std::size_t i) const {
  if (i >= nvars_) throw std::out_of_range("partial derivative index out of range");
  MultiSeries out(nvars_, order_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    auto d = e;
    --d[i];
    out.add_term(d, c * e[i]);
  }
  return out;
}

MultiSeries MultiSeries::truncated(int order) const {
  MultiSeries out(nvars_, std::min(order, order_));
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

std::string MultiSeries::str(const std::vector<std::string>& variables) const {
  // Graded order: by total degree, then by exponent vector descending.
  std::vector<std::pair<std::vector<int>, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    const int da = total_degree(a.first);
    const int db = total_degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : ts) {
    const bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += "- ";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? Rational(-c) : c;
    const bool unit = total_degree(e) > 0 && mag == 1;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += variables.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!unit) out += to_string(mag);
    if (!unit && !mono.empty()) out += ' ';
    out += mono;
  }
  if (out.empty()) out = "0";
  out += " + O(" + std::to_string(order_ + 1) + ")";
  return out;
}

std::optional<SeriesMismatch> first_mismatch(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a, b);
  const int order = std::min(a.order(), b.order());
  if (order < 0) throw TruncationError("comparison has no retained coefficients", -order);
  const MultiSeries d = a.truncated(order) - b.truncated(order);
  if (d.is_zero()) return std::nullopt;
  const auto& e = d.terms().begin()->first;
  return SeriesMismatch{e, a.coefficient(e), b.coefficient(e)};
}

int VectorField::order() const {
  int o = components.empty() ? 0 : components.front().order();
  for (const auto& c : components) o = std::min(o, c.order());
  return o;
}

std::vector<std::string> VectorField::variable_names() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < components.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

VectorField parse_vector_field(std::string_view text, int order) {
  struct Line {
    std::size_t offset;
    std::string_view body;
  };
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
    if (lead < line.size() && line[lead] != '#') lines.push_back({start, line});
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("vector field has no components", 0);

  const std::size_t n = lines.size();
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));
  std::vector<std::optional<MultiSeries>> comps(n);
  for (const auto& [offset, body] : lines) {
    const std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'fI = ...'", offset);
    std::string lhs(body.substr(0, eq));
    std::erase_if(lhs, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    std::size_t index = 0;
    if (lhs.size() < 2 || lhs[0] != 'f' ||
        !std::all_of(lhs.begin() + 1, lhs.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        (index = std::stoul(lhs.substr(1))) < 1 || index > n) {
      throw ParseError("component name must be f1..f" + std::to_string(n) + ", got '" + lhs + "'", offset);
    }
    if (comps[index - 1]) throw ParseError("duplicate component " + lhs, offset);
    try {
      comps[index - 1] = MultiSeries::from_terms(n, order, parse_polynomial(body.substr(eq + 1), vars));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in ") + lhs + ": " + e.message(), offset + eq + 1 + e.position());
    }
  }
  VectorField f;
  for (auto& c : comps) f.components.push_back(std::move(*c));
  return f;
}

}  // namespace hopfrt
