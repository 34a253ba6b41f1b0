#include "doctest.h"

#include "hopfrt/cm_model.hpp"
#include "hopfrt/errors.hpp"
#include "hopfrt/frame.hpp"
#include "hopfrt/hopf.hpp"

using namespace hopfrt;

namespace {

constexpr int kOrder = 8;

FrameFunction ff(const char* s) { return parse_frame_function(s, kOrder); }
FormalDiffeo diffeo(const char* s, int order = kOrder + 2) { return FormalDiffeo(parse_xseries(s, order)); }

bool same(const FrameFunction& a, const FrameFunction& b) { return !first_mismatch(a, b).has_value(); }

Monomial product(const Monomial& a, const Monomial& b) { return monomial_product(a, b); }

}  // namespace

TEST_CASE("x-series composition and inverse") {
  const XSeries p = parse_xseries("x + 1/2 x^2 - x^3", 6);
  const XSeries q = p.inverse();
  CHECK(p.compose(q).str() == "x + O(x^7)");
  CHECK(q.compose(p).str() == "x + O(x^7)");
  CHECK(parse_xseries("1 - x", 4).reciprocal().str() == "1 + x + x^2 + x^3 + x^4 + O(x^5)");
  CHECK_THROWS(FormalDiffeo(parse_xseries("1 + x", 4)));
  CHECK_THROWS(FormalDiffeo(parse_xseries("-x", 4)));
}

TEST_CASE("lift of a dilation") {
  const FrameFunction f = ff("x y^2 + y");
  // ψ̃(x, y) = (2x, 2y)
  CHECK(same(f.compose_lift(diffeo("2 x")), ff("8 x y^2 + 2 y")));
}

TEST_CASE("gamma_bullet closed forms") {
  const CurvatureFn gx = XSeries::identity(kOrder + 2);
  CHECK(gamma_bullet(FormalDiffeo::identity(kOrder + 2), gx).is_zero());
  // y·2·Γ(2x) − yΓ(x) = 3xy
  CHECK(same(gamma_bullet(diffeo("2 x"), gx).truncated(kOrder), ff("3 x y")));
  // Γ = 0 leaves the Schwarzian-free term y ψ″/ψ′ = y·2/(1 + 2x)
  const FrameFunction g = gamma_bullet(diffeo("x + x^2"), XSeries(kOrder + 2));
  CHECK(same(g.truncated(3), parse_frame_function("2 y - 4 x y + 8 x^2 y - 16 x^3 y", 3)));
}

TEST_CASE("cocycle and associativity") {
  JetRng rng(1);
  for (int i = 0; i < 5; ++i) {
    const FormalDiffeo psi = random_diffeo(rng, 3, kOrder + 2);
    const FormalDiffeo eta = random_diffeo(rng, 3, kOrder + 2);
    CHECK(check_cocycle(psi, eta, random_xseries(rng, 3, kOrder + 2)));
    CHECK(check_lift_composition(psi, eta, random_frame_function(rng, 3, 2, kOrder)));
    CHECK(check_associativity(random_monomial(rng, kOrder), random_monomial(rng, kOrder),
                              random_monomial(rng, kOrder)));
  }
}

TEST_CASE("classical operators") {
  FrameModel flat{XSeries(kOrder)};
  const Monomial m{ff("x"), FormalDiffeo::identity(kOrder + 2)};
  CHECK(same(flat.X(RootedTree(), m).f, ff("y")));
  const Monomial n{ff("x^2 y^3 + y"), FormalDiffeo::identity(kOrder + 2)};
  CHECK(same(flat.Y(n).f, ff("3 x^2 y^3 + y")));
  CHECK(check_flat_degeneration(4, kOrder));
}

TEST_CASE("X_t on y matches the elementary differential") {
  FrameModel model{XSeries::identity(kOrder)};
  const RootedTree ladder2 = parse_tree("[[]]");
  const Monomial m{FrameFunction::y(kOrder), FormalDiffeo::identity(kOrder + 2)};
  // X_t(y) = φ^z(t)·y
  CHECK(same(model.X(ladder2, m).f, model.phi(ladder2, 1) * FrameFunction::y(kOrder)));
  // φ([[]]) for V = (y, −xy): (−x y², −y² + x² y²)
  CHECK(same(model.phi(ladder2, 0), ff("-x y^2")));
  CHECK(same(model.phi(ladder2, 1), ff("-y^2 + x^2 y^2")));
}

TEST_CASE("delta on the single vertex follows the Leibniz rule with cocycle") {
  JetRng rng(2);
  FrameModel model{XSeries::identity(kOrder)};
  for (int i = 0; i < 4; ++i) {
    const Monomial a = random_monomial(rng, kOrder);
    const Monomial b = random_monomial(rng, kOrder);
    CHECK(check_delta_coproduct(model, RootedTree(), a, b));
    CHECK(check_X_coproduct(model, RootedTree(), a, b));
    CHECK(check_delta_coproduct(model, parse_tree("[[]]"), a, b));
  }
}

TEST_CASE("commutator table and reconstruction") {
  JetRng rng(3);
  FrameModel model{XSeries::identity(kOrder)};
  const Monomial m = random_monomial(rng, kOrder);
  for (const auto& r : check_commutators(model, RootedTree(), parse_tree("[[]]"), m)) CHECK_MESSAGE(r.result, r.relation);
  for (const auto& t : enumerate_trees(3)) {
    const Monomial direct = model.delta(t, m);
    CHECK_FALSE(first_mismatch(delta_from_commutators(model, t, m), direct).has_value());
  }
  CHECK(check_delta_k_ladder(model, 2, m));
}

// The per-tree coproduct formula for δ_t is false beyond two vertices in this
// model, while its sum over δ_3 = δ_{[[][]]} + δ_{[[[]]]} holds.
TEST_CASE("coproduct of delta on trees with three vertices") {
  JetRng rng(4);
  FrameModel model{XSeries::identity(kOrder)};
  const Monomial a = random_monomial(rng, kOrder);
  const Monomial b = random_monomial(rng, kOrder);
  CHECK_FALSE(check_delta_coproduct(model, parse_tree("[[[]]]"), a, b));
  CHECK_FALSE(check_delta_coproduct(model, parse_tree("[[][]]"), a, b));

  const LinComb d3 = delta_k(3);
  const Tensor2 cop = coproduct(d3);
  Monomial rhs{FrameFunction(kOrder), product(a, b).psi};
  for (const auto& [k, c] : cop.terms()) rhs = rhs + c * product(model.delta(k.first, a), model.delta(k.second, b));
  const Monomial lhs = model.delta(d3, product(a, b));
  CHECK_FALSE(first_mismatch(lhs, rhs).has_value());
}

TEST_CASE("grading") {
  FrameModel model{XSeries::identity(kOrder)};
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK(check_grading(model, t));
}
