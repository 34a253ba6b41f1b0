#include "doctest.h"

#include "hopfrt/butcher.hpp"
#include "hopfrt/errors.hpp"
#include "hopfrt/hopf.hpp"
#include "hopfrt/series.hpp"

using namespace hopfrt;

TEST_CASE("series arithmetic") {
  const MultiSeries x = MultiSeries::variable(2, 3, 0);
  const MultiSeries y = MultiSeries::variable(2, 3, 1);
  const MultiSeries p = (x + y) * (x + y) * (x + y) * (x + y);
  CHECK(p.is_zero());  // degree 4 is beyond order 3
  const MultiSeries q = x * x * y;
  CHECK(q.coefficient({2, 1}) == 1);
  CHECK(q.partial(0).coefficient({1, 1}) == 2);
  CHECK(q.partial(0).order() == 2);
  CHECK(q.str({"x1", "x2"}) == "x1^2 x2 + O(4)");
}

TEST_CASE("field parsing") {
  const VectorField f = parse_vector_field("# comment\nf1 = x2\n\nf2 = -x1 + 1/2 x1^2\n", 4);
  REQUIRE(f.dimension() == 2);
  CHECK(f.components[1].coefficient({2, 0}) == Rational(1, 2));
  CHECK_THROWS_AS(parse_vector_field("f1 = x3\n", 3), ParseError);
  CHECK_THROWS_AS(parse_vector_field("f1 = x1 +\n", 3), ParseError);
}

TEST_CASE("scalar field 1 + x has solution e^s - 1") {
  const VectorField f = parse_vector_field("f1 = 1 + x1", 8);
  const auto d = taylor_derivatives(f, 7);
  CHECK(d[0][0] == 0);
  for (int k = 1; k <= 7; ++k) CHECK(d[k][0] == 1);
  // f' = 1 and f'' = 0: only ladders survive, each equal to 1 + x.
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      const auto phi = elementary_differential(t, f);
      const bool is_ladder = t.max_fertility() <= 1;
      CHECK(phi[0].constant_term() == (is_ladder ? 1 : 0));
    }
}

TEST_CASE("scalar field 1 + x^2 has solution tan s") {
  // dx/ds = 1 + x^2, x(0) = 0 gives tan s: 1, 0, 2, 0, 16
  const VectorField f = parse_vector_field("f1 = 1 + x1^2", 8);
  const auto d = taylor_derivatives(f, 5);
  CHECK(d[1][0] == 1);
  CHECK(d[2][0] == 0);
  CHECK(d[3][0] == 2);
  CHECK(d[4][0] == 0);
  CHECK(d[5][0] == 16);
}

TEST_CASE("elementary differentials of the cherry") {
  const VectorField f = parse_vector_field("f1 = 1 + x2\nf2 = x1^2 - 1/2 x2", 3);
  const auto phi = elementary_differential(parse_tree("[[][]]"), f);
  // φ^2 = ∂11 f2 (f1, f1) = 2 (1 + x2)^2
  CHECK(phi[1].coefficient({0, 0}) == 2);
  CHECK(phi[1].coefficient({0, 1}) == 4);
  CHECK(phi[0].is_zero());
}

TEST_CASE("precision is checked") {
  const VectorField f = parse_vector_field("f1 = 1 + x1^2", 2);
  CHECK_NOTHROW(elementary_differential(parse_tree("[[][]]"), f));
  CHECK_THROWS_AS(elementary_differential(parse_tree("[[][][]]"), f), TruncationError);
  CHECK_THROWS_AS(series_solve(f, 3), TruncationError);
}

TEST_CASE("bridge and growth identities on a random field") {
  const VectorField f = random_quadratic_field(2, 3, 6);
  for (int k = 1; k <= 6; ++k) CHECK(check_taylor_bridge(f, k));
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK(check_growth_derivative(t, f));
  JetRng rng(11);
  const MultiSeries h = random_polynomial(2, 3, rng, 6);
  for (const auto& t : enumerate_trees(2))
    for (const auto& s : enumerate_trees(3)) {
      CHECK(check_generalized_growth(t, s, f));
      CHECK(check_growth_composition(t, s, f, h));
    }
}

TEST_CASE("rng is reproducible") {
  JetRng a(5), b(5);
  for (int i = 0; i < 20; ++i) {
    const Rational q = a.next();
    CHECK(q == b.next());
    CHECK(abs(q) <= 2);
  }
}
