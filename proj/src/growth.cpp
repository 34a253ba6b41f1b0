#include "hopfrt/growth.hpp"

#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>

#include "hopfrt/errors.hpp"
#include "hopfrt/hopf.hpp"
#include "hopfrt/linalg.hpp"

namespace hopfrt {

struct GrowthExpr::Node {
  std::variant<std::monostate, Grow, Linear> v;
};

GrowthExpr::GrowthExpr() {
  static const auto leaf = std::make_shared<const Node>();
  node_ = leaf;
}

GrowthExpr GrowthExpr::grow(RootedTree by, GrowthExpr arg) {
  return GrowthExpr(std::make_shared<const Node>(Node{Grow{std::move(by), std::move(arg)}}));
}

GrowthExpr GrowthExpr::linear(std::vector<std::pair<Rational, GrowthExpr>> terms) {
  return GrowthExpr(std::make_shared<const Node>(Node{Linear{std::move(terms)}}));
}

bool GrowthExpr::is_leaf() const { return std::holds_alternative<std::monostate>(node_->v); }
const GrowthExpr::Grow* GrowthExpr::as_grow() const { return std::get_if<Grow>(&node_->v); }
const GrowthExpr::Linear* GrowthExpr::as_linear() const { return std::get_if<Linear>(&node_->v); }

std::string GrowthExpr::str() const {
  if (is_leaf()) return ".";
  if (const auto* g = as_grow()) return "N{" + g->by.str() + "}(" + g->arg.str() + ")";
  const auto& terms = as_linear()->terms;
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [c, e] = terms[i];
    if (sgn(c) < 0) {
      out += i ? " - " : "- ";
      out += to_string(Rational(-c));
    } else {
      if (i) out += " + ";
      out += to_string(c);
    }
    out += ' ';
    out += e.as_linear() ? "(" + e.str() + ")" : e.str();
  }
  return out;
}

std::size_t GrowthExpr::grow_count() const {
  if (is_leaf()) return 0;
  if (const auto* g = as_grow()) return 1 + g->arg.grow_count();
  std::size_t n = 0;
  for (const auto& [c, e] : as_linear()->terms) n += e.grow_count();
  return n;
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  GrowthExpr expr() {
    std::vector<std::pair<Rational, GrowthExpr>> terms;
    bool wrapped = false;
    for (bool first = true;; first = false) {
      skip();
      Rational sign = 1;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        wrapped = true;
        skip();
      } else if (!first) {
        break;
      }
      Rational coef = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
        try {
          coef = parse_rational(s_.substr(start, pos_ - start));
        } catch (const ParseError&) {
          throw ParseError("invalid coefficient", start);
        }
        wrapped = true;
        skip();
      }
      terms.emplace_back(sign * coef, atom());
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    if (!wrapped && terms.size() == 1) return terms.front().second;
    return GrowthExpr::linear(std::move(terms));
  }

  void finish() {
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
  }

 private:
  GrowthExpr atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("expected '.', 'N{' or '('", pos_);
    if (s_[pos_] == '.') {
      ++pos_;
      return GrowthExpr{};
    }
    if (s_[pos_] == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (s_[pos_] == 'N') {
      ++pos_;
      expect('{');
      skip();
      auto by = parse_tree_at(s_, pos_);
      expect('}');
      expect('(');
      auto arg = expr();
      expect(')');
      return GrowthExpr::grow(std::move(by), std::move(arg));
    }
    throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

GrowthExpr parse_growth_expr(std::string_view text) {
  ExprParser p(text);
  auto e = p.expr();
  p.finish();
  return e;
}

LinComb eval_growth_expr(const GrowthExpr& e) {
  if (e.is_leaf()) return tree_lc(RootedTree{});
  if (const auto* g = e.as_grow()) return natural_growth(g->by, eval_growth_expr(g->arg));
  LinComb out;
  for (const auto& [c, sub] : e.as_linear()->terms) out.add(eval_growth_expr(sub), c);
  return out;
}

GrowthExpr decompose(const RootedTree& t) {
  if (t.is_single_vertex()) return GrowthExpr{};
  const auto& kids = t.children();
  const RootedTree& largest = kids.front();
  const std::vector<RootedTree> rest(kids.begin() + 1, kids.end());
  GrowthExpr main = GrowthExpr::grow(largest, decompose(b_plus(Forest{rest})));

  // N_largest(B₊(rest)) = t + Σ_i B₊(rest with rest_i grown by `largest`).
  LinComb corrections;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    std::vector<RootedTree> others;
    for (std::size_t j = 0; j < rest.size(); ++j)
      if (j != i) others.push_back(rest[j]);
    corrections += b_plus(multiply(natural_growth(largest, rest[i]), LinComb(Forest{std::move(others)})));
  }
  if (corrections.is_zero()) return main;

  std::vector<std::pair<Rational, GrowthExpr>> terms{{Rational(1), std::move(main)}};
  for (const auto& [f, c] : corrections.terms()) terms.emplace_back(-c, decompose(f.trees().front()));
  return GrowthExpr::linear(std::move(terms));
}

RootedTree fan_graph(std::size_t i) {
  if (i == 0) throw std::invalid_argument("fan graphs start at F_1");
  return RootedTree::from_children(std::vector<RootedTree>(i - 1));
}

namespace {

Forest leaves(std::size_t i) { return Forest{std::vector<RootedTree>(i)}; }

Tensor2 fan_closed_form(std::size_t n, std::size_t shift) {
  const Forest fn{fan_graph(n)};
  Tensor2 out;
  out.add(TensorKey{Forest{}, fn}, 1);
  out.add(TensorKey{fn, Forest{}}, 1);
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const std::size_t k = n - i - shift;
    const Forest right = k == 0 ? Forest{} : Forest{fan_graph(k)};
    out.add(TensorKey{leaves(i), right}, binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(i)));
  }
  return out;
}

}  // namespace

FanCoproductReport fan_coproduct(std::size_t n) {
  FanCoproductReport r;
  r.n = n;
  r.coproduct = coproduct(fan_graph(n));
  r.binomials_match_n_minus_i = r.coproduct == fan_closed_form(n, 0);
  r.binomials_match_n_minus_i_minus_1 = r.coproduct == fan_closed_form(n, 1);
  if (r.binomials_match_n_minus_i && r.binomials_match_n_minus_i_minus_1)
    r.realized_subscript = "both";
  else if (r.binomials_match_n_minus_i)
    r.realized_subscript = "F_{n-i}";
  else if (r.binomials_match_n_minus_i_minus_1)
    r.realized_subscript = "F_{n-i-1}";
  else
    r.realized_subscript = "neither";
  return r;
}

namespace {

std::size_t degree_of(const LinComb& x) {
  if (x.is_zero()) throw std::invalid_argument("zero element has no degree");
  const std::size_t d = x.terms().begin()->first.degree();
  for (const auto& [f, c] : x.terms())
    if (f.degree() != d) throw std::invalid_argument("element is not homogeneous: " + render(x));
  return d;
}

}  // namespace

GradedBasis generate_subalgebra(const std::vector<RootedTree>& generators, std::size_t max_degree) {
  if (generators.empty()) throw std::invalid_argument("generating set must be non-empty");
  GradedBasis out;
  out.generators = generators;
  out.max_degree = max_degree;

  // Growth words N_{t_k}(...N_{t_1}(s)), breadth-first by degree, deduplicated.
  std::vector<std::vector<LinComb>> words(max_degree + 1);
  std::vector<std::set<std::string>> seen(max_degree + 1);
  auto push_word = [&](LinComb w) {
    if (w.is_zero()) return;
    const std::size_t d = degree_of(w);
    if (d > max_degree) return;
    if (seen[d].insert(render(w)).second) words[d].push_back(std::move(w));
  };
  for (const auto& s : generators) push_word(tree_lc(s));
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (std::size_t k = 0; k < words[d].size(); ++k) {
      for (const auto& t : generators) {
        if (d + t.vertex_count() > max_degree) continue;
        push_word(natural_growth(t, words[d][k]));
      }
    }
  }

  out.by_degree.assign(max_degree + 1, {});
  out.by_degree[0].push_back(unit_lc());
  for (std::size_t d = 1; d <= max_degree; ++d) {
    RowSpace span;
    auto offer = [&](const LinComb& v) {
      if (span.insert(v)) out.by_degree[d].push_back(v);
    };
    for (const auto& w : words[d]) offer(w);
    for (std::size_t e = 1; e < d; ++e)
      for (const auto& w : words[e])
        for (const auto& b : out.by_degree[d - e]) offer(multiply(w, b));
  }
  return out;
}

GradedBasis basis_from_span(const std::vector<LinComb>& elements, std::size_t max_degree) {
  GradedBasis out;
  out.max_degree = max_degree;
  out.by_degree.assign(max_degree + 1, {});
  out.by_degree[0].push_back(unit_lc());
  std::vector<RowSpace> spans(max_degree + 1);
  spans[0].insert(unit_lc());
  for (const auto& x : elements) {
    const std::size_t d = degree_of(x);
    if (d > max_degree) continue;
    if (spans[d].insert(x)) out.by_degree[d].push_back(x);
  }
  return out;
}

ClosureReport closure_check(const GradedBasis& basis) {
  std::vector<RowSpace> spans(basis.by_degree.size());
  for (std::size_t d = 0; d < basis.by_degree.size(); ++d)
    for (const auto& b : basis.by_degree[d]) spans[d].insert(b);

  ClosureReport report;
  for (const auto& level : basis.by_degree) {
    for (const auto& x : level) {
      const Tensor2 dx = coproduct(x);
      // Δx ∈ A⊗A iff every column slice lies in A (left) and every row slice in A (right).
      std::map<Forest, LinComb> by_right;
      std::map<Forest, LinComb> by_left;
      for (const auto& [k, c] : dx.terms()) {
        by_right[k.second].add(k.first, c);
        by_left[k.first].add(k.second, c);
      }
      auto fail = [&](const LinComb& slice, const Forest& fixed, bool fixed_is_right) {
        report.closed = false;
        report.violating_element = x;
        report.violating_term = fixed_is_right ? "(" + render(slice) + ") | " + fixed.str()
                                               : fixed.str() + " | (" + render(slice) + ")";
      };
      for (const auto& [right, slice] : by_right) {
        const std::size_t p = degree_of(slice);
        if (p >= spans.size() || !spans[p].contains(slice)) {
          fail(slice, right, true);
          return report;
        }
      }
      for (const auto& [left, slice] : by_left) {
        const std::size_t q = degree_of(slice);
        if (q >= spans.size() || !spans[q].contains(slice)) {
          fail(slice, left, false);
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace hopfrt
