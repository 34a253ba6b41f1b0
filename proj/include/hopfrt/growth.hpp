#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hopfrt/lincomb.hpp"
#include "hopfrt/tree.hpp"

namespace hopfrt {

/// An expression over the single vertex, growth operators N_t and rational
/// linear combinations. Immutable; subexpressions are shared.
class GrowthExpr {
 public:
  struct Grow;
  struct Linear;

  /// The leaf `.`.
  GrowthExpr();
  static GrowthExpr grow(RootedTree by, GrowthExpr arg);
  static GrowthExpr linear(std::vector<std::pair<Rational, GrowthExpr>> terms);

  bool is_leaf() const;
  const Grow* as_grow() const;
  const Linear* as_linear() const;

  /// `.`, `N{<tree>}(<expr>)`, `c1 <expr> + c2 <expr>`.
  std::string str() const;

  /// Number of N nodes.
  std::size_t grow_count() const;

 private:
  struct Node;
  explicit GrowthExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct GrowthExpr::Grow {
  RootedTree by;
  GrowthExpr arg;
};

struct GrowthExpr::Linear {
  std::vector<std::pair<Rational, GrowthExpr>> terms;
};

GrowthExpr parse_growth_expr(std::string_view text);

/// Leaves evaluate to •, N_t nodes via natural_growth, linear nodes linearly.
LinComb eval_growth_expr(const GrowthExpr& e);

/// Writes `t` as iterated growth applied to •, peeling the largest root
/// child and subtracting the grafting corrections.
GrowthExpr decompose(const RootedTree& t);

/// B₊ of i-1 leaves; F_1 = •.
RootedTree fan_graph(std::size_t i);

struct FanCoproductReport {
  std::size_t n = 0;
  Tensor2 coproduct;
  /// C(n-1, i) matches the coefficient of •^i ⊗ F_{n-i} for every i.
  bool binomials_match_n_minus_i = false;
  /// Same check against the right leg F_{n-i-1}.
  bool binomials_match_n_minus_i_minus_1 = false;
  /// "F_{n-i}", "F_{n-i-1}", or "neither".
  std::string realized_subscript;
};

/// Δ(F_n) from first principles, compared against the closed form with both
/// candidate right-leg subscripts.
FanCoproductReport fan_coproduct(std::size_t n);

/// Basis of a graded subalgebra, one exact-independent list per degree.
struct GradedBasis {
  std::vector<RootedTree> generators;
  std::size_t max_degree = 0;
  std::vector<std::vector<LinComb>> by_degree;  // index = degree; degree 0 holds the unit
};

/// The subalgebra generated by S and the iterated growths N_{t_k}(...N_{t_1}(s)),
/// t_i, s ∈ S, up to `max_degree`.
GradedBasis generate_subalgebra(const std::vector<RootedTree>& generators, std::size_t max_degree);

/// Builds a basis from an explicit spanning list (no closure under products).
GradedBasis basis_from_span(const std::vector<LinComb>& elements, std::size_t max_degree);

struct ClosureReport {
  bool closed = true;
  std::optional<LinComb> violating_element;
  /// The slice of Δ(element) that escapes A ⊗ A, rendered.
  std::string violating_term;
};

/// Checks Δ(x) ∈ A ⊗ A for every basis element x, bidegree by bidegree.
ClosureReport closure_check(const GradedBasis& basis);

}  // namespace hopfrt
