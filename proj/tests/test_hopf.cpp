#include "doctest.h"

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfrt/errors.hpp"
#include "hopfrt/growth.hpp"
#include "hopfrt/hopf.hpp"
#include "hopfrt/tree.hpp"

using namespace hopfrt;

namespace {

// Flat vertex list with parent links, built from the bracket text.
struct Flat {
  std::vector<int> parent;
};

Flat flatten(const std::string& s) {
  Flat f;
  std::vector<int> stack;
  for (char c : s) {
    if (c == '[') {
      f.parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(f.parent.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  return f;
}

// Subtree of `v` keeping only vertices allowed by `keep`.
RootedTree rebuild(const Flat& f, int v, const std::vector<bool>& keep) {
  std::vector<RootedTree> kids;
  for (int u = 0; u < static_cast<int>(f.parent.size()); ++u)
    if (f.parent[u] == v && keep[u]) kids.push_back(rebuild(f, u, keep));
  return RootedTree::from_children(std::move(kids));
}

// Δ(t) by filtering all edge subsets: a subset is admissible when no two
// chosen edges lie on one root path. Edge u means (parent[u], u).
Tensor2 brute_coproduct(const RootedTree& t) {
  const Flat f = flatten(t.str());
  const int n = static_cast<int>(f.parent.size());
  Tensor2 out;
  out.add({Forest{t}, Forest{}}, 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (mask & 1u) continue;  // the root has no incoming edge
    bool ok = true;
    for (int u = 1; u < n && ok; ++u) {
      if (!(mask >> u & 1u)) continue;
      for (int a = f.parent[u]; a > 0; a = f.parent[a])
        if (mask >> a & 1u) ok = false;
    }
    if (!ok) continue;
    std::vector<bool> above(n, true);
    std::vector<RootedTree> pruned;
    for (int u = 1; u < n; ++u) {
      if (!(mask >> u & 1u)) continue;
      std::vector<bool> all(n, true);
      pruned.push_back(rebuild(f, u, all));
      std::function<void(int)> drop = [&](int v) {
        above[v] = false;
        for (int w = 0; w < n; ++w)
          if (f.parent[w] == v) drop(w);
      };
      drop(u);
    }
    out.add({Forest(std::move(pruned)), Forest{rebuild(f, 0, above)}}, 1);
  }
  return out;
}

std::size_t count_trees_recursive(std::size_t n) {
  // a(n+1) = (1/n) Σ_{k=1}^{n} (Σ_{d|k} d a(d)) a(n-k+1)
  std::vector<std::size_t> a(n + 1, 0);
  a[1] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t s = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      std::size_t inner = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) inner += d * a[d];
      s += inner * a[m - k + 1];
    }
    a[m + 1] = s / m;
  }
  return a[n];
}

LinComb lc(const char* s) { return parse_lincomb(s); }

}  // namespace

TEST_CASE("parse and canonical form") {
  CHECK(parse_tree("[[][[]]]").str() == "[[[]][]]");
  CHECK(parse_tree(" [ [] [[]] ] ").str() == "[[[]][]]");
  CHECK(parse_tree("[[[]][]]") == parse_tree("[[][[]]]"));
  CHECK(parse_forest("1").is_unit());
  CHECK(parse_forest("[]*[[]]").str() == "[[]]*[]");
}

TEST_CASE("parse errors carry the offending position") {
  try {
    parse_tree("[[]]]");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_tree("[[]"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
  CHECK_THROWS_AS(parse_lincomb("2 [[]] +"), ParseError);
  CHECK_THROWS_AS(parse_lincomb("1/0 []"), ParseError);
}

TEST_CASE("enumeration matches the recursive count") {
  for (std::size_t n = 1; n <= 9; ++n) CHECK(enumerate_trees(n).size() == count_trees_recursive(n));
  CHECK(enumerate_trees(3).front().str() == "[[][]]");
}

TEST_CASE("coproduct against the edge-subset oracle") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK_MESSAGE(coproduct(t) == brute_coproduct(t), t.str());
}

TEST_CASE("small displays") {
  CHECK(render(coproduct(lc("[]"))) == "1 ([] | 1) + 1 (1 | [])");
  CHECK(render(coproduct(lc("[[]]"))) == "1 ([[]] | 1) + 1 (1 | [[]]) + 1 ([] | [])");
  CHECK(render(antipode(lc("[]"))) == "- 1 []");
  CHECK(render(antipode(lc("[[]]"))) == "1 []*[] - 1 [[]]");
  CHECK(counit(lc("3 + 2 []")) == 3);
}

TEST_CASE("antipode of the cherry") {
  // S([[][]]) = -[[][]] + 2 []*[[]] - []^3
  CHECK(antipode(lc("[[][]]")) == lc("-1 [[][]] + 2 [[]]*[] - 1 []*[]*[]"));
}

TEST_CASE("delta_k") {
  CHECK(render(delta_k(1)) == "1 []");
  CHECK(render(delta_k(2)) == "1 [[]]");
  CHECK(render(delta_k(3)) == "1 [[][]] + 1 [[[]]]");
  CHECK(render(delta_k(4)) == "1 [[][][]] + 3 [[[]][]] + 1 [[[][]]] + 1 [[[[]]]]");
}

TEST_CASE("natural growth") {
  CHECK(natural_growth(RootedTree(), parse_tree("[[]]")) == lc("[[][]] + [[[]]]"));
  CHECK(natural_growth(parse_tree("[[]]"), parse_tree("[]")) == lc("[[[]]]"));
  // N_t is a derivation on products.
  CHECK(natural_growth(Forest{RootedTree()}, lc("[]*[]")) == lc("2 [[]]*[]"));
  // growth by the unit is the grading operator
  CHECK(natural_growth(Forest{}, lc("[[]]*[] + [[][]]")) == lc("3 [[]]*[] + 3 [[][]]"));
  for (const auto& t : enumerate_trees(2))
    for (const auto& s : enumerate_trees(3)) CHECK(ntcoprod_identity(t, s));
}

TEST_CASE("decompose round trip") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const GrowthExpr e = decompose(t);
      CHECK_MESSAGE(eval_growth_expr(e) == tree_lc(t), e.str());
      CHECK(eval_growth_expr(parse_growth_expr(e.str())) == tree_lc(t));
    }
}

TEST_CASE("fan graphs") {
  CHECK(fan_graph(1).str() == "[]");
  CHECK(fan_graph(4).str() == "[[][][]]");
  const FanCoproductReport r = fan_coproduct(5);
  CHECK(r.realized_subscript == "F_{n-i}");
  CHECK(r.binomials_match_n_minus_i);
  CHECK_FALSE(r.binomials_match_n_minus_i_minus_1);
}

TEST_CASE("subalgebras") {
  const GradedBasis ck = generate_subalgebra({RootedTree()}, 4);
  REQUIRE(ck.by_degree.size() == 5);
  CHECK(ck.by_degree[3].size() == 3);
  CHECK(closure_check(ck).closed);
  // The cherry alone does not span a sub-Hopf algebra.
  const GradedBasis bad = basis_from_span({lc("[[][]]"), lc("[]")}, 3);
  const ClosureReport r = closure_check(bad);
  CHECK_FALSE(r.closed);
  REQUIRE(r.violating_element.has_value());
}
