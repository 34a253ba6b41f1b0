#include "hopfrt/butcher.hpp"

#include <sstream>

#include "hopfrt/errors.hpp"
#include "hopfrt/hopf.hpp"

namespace hopfrt {

namespace {

struct SeriesPartial {
  MultiSeries operator()(const MultiSeries& h, std::size_t i) const { return h.partial(i); }
};

using SeriesDifferentials = ElementaryDifferentials<MultiSeries, SeriesPartial>;

SeriesDifferentials make(const VectorField& f) { return SeriesDifferentials(f.components, SeriesPartial{}); }

void require_depth(const RootedTree& t, const VectorField& f) {
  const int need = static_cast<int>(t.vertex_count()) - 1;
  if (f.order() < need) {
    throw TruncationError("tree " + t.str() + " needs truncation order " + std::to_string(need) + ", field has " +
                              std::to_string(f.order()),
                          need);
  }
}

void require_depth(const LinComb& x, const VectorField& f) {
  for (const auto& [forest, c] : x.terms())
    for (const auto& t : forest.trees()) require_depth(t, f);
}

std::string exponent_str(const std::vector<int>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

CheckResult compare(const std::vector<MultiSeries>& lhs, const std::vector<MultiSeries>& rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (auto m = first_mismatch(lhs[i], rhs[i])) {
      std::ostringstream os;
      os << "component " << i + 1 << " coefficient " << exponent_str(m->exponents) << ": " << to_string(m->lhs)
         << " vs " << to_string(m->rhs);
      return {false, os.str()};
    }
  }
  return {};
}

std::vector<MultiSeries> phi_of(const LinComb& x, SeriesDifferentials& ed, const VectorField& f) {
  const std::size_t n = f.dimension();
  std::vector<MultiSeries> out(n, MultiSeries(n, f.order()));
  for (const auto& [forest, c] : x.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      MultiSeries term = MultiSeries::constant(n, f.order(), c);
      for (const auto& t : forest.trees()) term = term * ed.phi(t, i);
      out[i] += term;
    }
  }
  return out;
}

}  // namespace

std::vector<MultiSeries> elementary_differential(const RootedTree& t, const VectorField& f) {
  require_depth(t, f);
  auto ed = make(f);
  std::vector<MultiSeries> out;
  for (std::size_t i = 0; i < f.dimension(); ++i) out.push_back(ed.phi(t, i));
  return out;
}

std::vector<MultiSeries> elementary_differential(const LinComb& x, const VectorField& f) {
  require_depth(x, f);
  auto ed = make(f);
  return phi_of(x, ed, f);
}

MultiSeries phi_t_apply(const RootedTree& t, const VectorField& f, const MultiSeries& h) {
  require_depth(t, f);
  return make(f).apply(t, h);
}

MultiSeries phi_t_apply(const LinComb& x, const VectorField& f, const MultiSeries& h) {
  require_depth(x, f);
  auto ed = make(f);
  MultiSeries out(h.nvars(), h.order());
  for (const auto& [forest, c] : x.terms()) {
    if (!forest.is_single_tree()) throw std::invalid_argument("φ_x needs a combination of single trees");
    out += c * ed.apply(forest.trees().front(), h);
  }
  return out;
}

std::vector<std::vector<Rational>> series_solve(const VectorField& f, int K) {
  if (K < 0) throw std::invalid_argument("Taylor order must be non-negative");
  if (K > f.order()) throw TruncationError("Taylor order exceeds field truncation", K);
  const std::size_t n = f.dimension();
  // x(s) as a series in the single variable s; Picard iteration fixes one
  // more coefficient per pass.
  std::vector<MultiSeries> x(n, MultiSeries(1, K));
  for (int pass = 0; pass < K; ++pass) {
    std::vector<MultiSeries> next;
    for (std::size_t i = 0; i < n; ++i) {
      MultiSeries rhs(1, K);
      for (const auto& [e, c] : f.components[i].terms()) {
        MultiSeries mono = MultiSeries::constant(1, K, c);
        for (std::size_t j = 0; j < n; ++j)
          for (int p = 0; p < e[j]; ++p) mono = mono * x[j];
        rhs += mono;
      }
      PolyTerms terms;
      for (const auto& [e, c] : rhs.terms()) terms[{e[0] + 1}] = c / (e[0] + 1);
      next.push_back(MultiSeries::from_terms(1, K, terms));
    }
    x = std::move(next);
  }
  std::vector<std::vector<Rational>> out(K + 1, std::vector<Rational>(n));
  for (int k = 0; k <= K; ++k)
    for (std::size_t i = 0; i < n; ++i) out[k][i] = x[i].coefficient({k});
  return out;
}

std::vector<std::vector<Rational>> taylor_derivatives(const VectorField& f, int K) {
  auto out = series_solve(f, K);
  for (int k = 0; k <= K; ++k)
    for (auto& v : out[k]) v *= factorial(k);
  return out;
}

CheckResult check_growth_derivative(const RootedTree& t, const VectorField& f) {
  return check_generalized_growth(RootedTree(), t, f);
}

CheckResult check_generalized_growth(const RootedTree& t, const RootedTree& s, const VectorField& f) {
  const LinComb grown = natural_growth(t, s);
  require_depth(grown, f);
  auto ed = make(f);
  const auto lhs = phi_of(grown, ed, f);
  std::vector<MultiSeries> rhs;
  for (std::size_t i = 0; i < f.dimension(); ++i) rhs.push_back(ed.growth_operator(t, ed.phi(s, i)));
  return compare(lhs, rhs);
}

CheckResult check_growth_composition(const RootedTree& t, const RootedTree& s, const VectorField& f,
                                     const MultiSeries& h) {
  const LinComb grown = natural_growth(t, s);
  require_depth(grown, f);
  auto ed = make(f);
  const MultiSeries lhs = ed.growth_operator(t, ed.apply(s, h));
  MultiSeries rhs(h.nvars(), h.order());
  for (const auto& [forest, c] : grown.terms()) rhs += c * ed.apply(forest.trees().front(), h);
  return compare({lhs}, {rhs});
}

CheckResult check_taylor_bridge(const VectorField& f, int k) {
  const auto derivs = taylor_derivatives(f, k);
  const auto phi = elementary_differential(delta_k(static_cast<std::size_t>(k)), f);
  for (std::size_t i = 0; i < f.dimension(); ++i) {
    const Rational at_origin = phi[i].constant_term();
    if (at_origin != derivs[k][i]) {
      return {false, "component " + std::to_string(i + 1) + ": d^" + std::to_string(k) + "x/ds^" +
                         std::to_string(k) + " = " + to_string(derivs[k][i]) + " vs phi(delta_" + std::to_string(k) +
                         ") = " + to_string(at_origin)};
    }
  }
  return {};
}

JetRng::JetRng(std::uint64_t seed) : engine_(seed) {}

std::uint32_t JetRng::next_int(std::uint32_t bound) { return static_cast<std::uint32_t>(engine_() % bound); }

Rational JetRng::next() {
  const int num = static_cast<int>(next_int(5)) - 2;
  const int den = static_cast<int>(next_int(3)) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

MultiSeries random_polynomial(std::size_t n, int degree, JetRng& rng, int order) {
  PolyTerms terms;
  std::vector<int> e(n, 0);
  // All exponent vectors of total degree ≤ degree, in lexicographic order.
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i == n) {
      terms[e] = rng.next();
      return;
    }
    for (int p = 0; p <= left; ++p) {
      e[i] = p;
      self(self, i + 1, left - p);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
  return MultiSeries::from_terms(n, order, terms);
}

VectorField random_quadratic_field(std::size_t n, std::uint64_t seed, int order) {
  JetRng rng(seed);
  VectorField f;
  for (std::size_t i = 0; i < n; ++i) f.components.push_back(random_polynomial(n, 2, rng, order));
  return f;
}

}  // namespace hopfrt
