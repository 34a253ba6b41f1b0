#include "hopfrt/cm_model.hpp"

#include <stdexcept>

#include "hopfrt/errors.hpp"
#include "hopfrt/hopf.hpp"

namespace hopfrt {

namespace {

std::vector<FrameFunction> flow_field(const CurvatureFn& gamma) {
  const int order = gamma.order();
  return {FrameFunction::y(order), FrameFunction::term(Rational(-1) * gamma, 1)};
}

CheckResult compare(const FrameFunction& lhs, const FrameFunction& rhs) {
  if (auto m = first_mismatch(lhs, rhs)) return {false, *m};
  return {};
}

CheckResult compare(const Monomial& lhs, const Monomial& rhs) {
  if (auto m = first_mismatch(lhs, rhs)) return {false, *m};
  return {};
}

Monomial with_function(const Monomial& m, FrameFunction f) { return {std::move(f), m.psi}; }

}  // namespace

LiftedDiffeo lift_diffeo(const FormalDiffeo& psi) {
  const XSeries slope = psi.series().derivative();
  return {psi.series(), FrameFunction::term(slope, 1)};
}

FrameFunction gamma_bullet(const FormalDiffeo& psi, const CurvatureFn& gamma) {
  const XSeries& p = psi.series();
  const XSeries d1 = p.derivative();
  const XSeries d2 = d1.derivative();
  const XSeries body = d1 * gamma.compose(p) - gamma + d2 * d1.reciprocal();
  return FrameFunction::term(body, 1);
}

FrameModel::FrameModel(CurvatureFn gamma) : gamma_(gamma), ed_(flow_field(gamma), FramePartial{}) {}

FrameFunction FrameModel::gamma_bullet(const FormalDiffeo& psi) const { return hopfrt::gamma_bullet(psi, gamma_); }

FrameFunction FrameModel::gamma_t(const RootedTree& t, const FormalDiffeo& psi) {
  return ed_.apply(t, gamma_bullet(psi));
}

FrameFunction FrameModel::gamma_forest(const Forest& f, const FormalDiffeo& psi) {
  FrameFunction out = FrameFunction::constant(psi.order(), 1);
  for (const auto& t : f.trees()) out = out * gamma_t(t, psi);
  return out;
}

Monomial FrameModel::delta(const RootedTree& t, const Monomial& m) {
  return with_function(m, gamma_t(t, m.psi) * m.f);
}

Monomial FrameModel::delta(const Forest& f, const Monomial& m) {
  return with_function(m, gamma_forest(f, m.psi) * m.f);
}

Monomial FrameModel::delta(const LinComb& x, const Monomial& m) {
  FrameFunction out(m.f.order());
  for (const auto& [forest, c] : x.terms()) out += c * delta(forest, m).f;
  return with_function(m, std::move(out));
}

Monomial FrameModel::X(const RootedTree& t, const Monomial& m) { return with_function(m, x_field(t, m.f)); }

Monomial FrameModel::X(const LinComb& x, const Monomial& m) {
  FrameFunction out(m.f.order());
  for (const auto& [forest, c] : x.terms()) {
    if (!forest.is_single_tree()) throw std::invalid_argument("X over a product of trees");
    out += c * x_field(forest.trees().front(), m.f);
  }
  return with_function(m, std::move(out));
}

Monomial FrameModel::Y(const Monomial& m) const { return with_function(m, m.f.y_dy()); }

Monomial FrameModel::phi_op(const LinComb& x, const Monomial& m) {
  FrameFunction out(m.f.order());
  for (const auto& [forest, c] : x.terms()) {
    if (!forest.is_single_tree()) throw std::invalid_argument("phi over a product of trees");
    out += c * phi_t(forest.trees().front(), m.f);
  }
  return with_function(m, std::move(out));
}

Monomial operator+(const Monomial& a, const Monomial& b) { return {a.f + b.f, a.psi}; }
Monomial operator-(const Monomial& a, const Monomial& b) { return {a.f - b.f, a.psi}; }
Monomial operator*(const Rational& c, const Monomial& m) { return {c * m.f, m.psi}; }

CheckResult check_cocycle(const FormalDiffeo& psi, const FormalDiffeo& eta, const CurvatureFn& gamma) {
  const FrameFunction lhs = gamma_bullet(eta.after(psi), gamma);
  const FrameFunction rhs = gamma_bullet(psi, gamma) + gamma_bullet(eta, gamma).compose_lift(psi);
  return compare(lhs, rhs);
}

CheckResult check_lift_composition(const FormalDiffeo& psi, const FormalDiffeo& eta, const FrameFunction& f) {
  return compare(f.compose_lift(eta.after(psi)), f.compose_lift(eta).compose_lift(psi));
}

CheckResult check_associativity(const Monomial& a, const Monomial& b, const Monomial& c) {
  return compare(monomial_product(monomial_product(a, b), c), monomial_product(a, monomial_product(b, c)));
}

CheckResult check_pushforward_phi(FrameModel& model, const RootedTree& t, const FormalDiffeo& psi,
                                  const FrameFunction& h) {
  const FrameFunction lhs = model.phi_t(t, h.compose_lift(psi));
  FrameFunction rhs(lhs.order());
  for (const auto& c : admissible_cuts(t)) {
    if (c.cut.kind == Cut::Kind::full) continue;
    rhs += model.gamma_forest(c.pruned, psi) * model.phi_t(c.root_part.trees().front(), h).compose_lift(psi);
  }
  return compare(lhs, rhs);
}

CheckResult check_pushforward_X(FrameModel& model, const RootedTree& t, const FormalDiffeo& psi,
                                const FrameFunction& h) {
  const FrameFunction lhs = model.x_field(t, h.compose_lift(psi));
  FrameFunction rhs(lhs.order());
  for (const auto& c : admissible_cuts(t)) {
    const FrameFunction leg =
        c.root_part.is_unit() ? h.y_dy() : model.x_field(c.root_part.trees().front(), h);
    rhs += model.gamma_forest(c.pruned, psi) * leg.compose_lift(psi);
  }
  return compare(lhs, rhs);
}

CheckResult check_delta_coproduct(FrameModel& model, const RootedTree& t, const Monomial& a, const Monomial& b) {
  const Monomial lhs = model.delta(t, monomial_product(a, b));
  Monomial rhs{FrameFunction(lhs.f.order()), lhs.psi};
  for (const auto& c : admissible_cuts(t)) {
    rhs = rhs + monomial_product(model.delta(c.pruned, a), model.delta(c.root_part, b));
  }
  return compare(lhs, rhs);
}

CheckResult check_X_coproduct(FrameModel& model, const RootedTree& t, const Monomial& a, const Monomial& b) {
  const Monomial lhs = model.X(t, monomial_product(a, b));
  Monomial rhs = monomial_product(model.X(t, a), b);
  for (const auto& c : admissible_cuts(t)) {
    const Monomial leg = c.root_part.is_unit() ? model.Y(b) : model.X(c.root_part.trees().front(), b);
    rhs = rhs + monomial_product(model.delta(c.pruned, a), leg);
  }
  return compare(lhs, rhs);
}

std::vector<RelationResult> check_commutators(FrameModel& model, const RootedTree& t, const RootedTree& tp,
                                              const Monomial& m) {
  std::vector<RelationResult> out;
  const Rational nt(static_cast<unsigned long>(t.vertex_count()));

  out.push_back({"[Y,X_t] = |t| X_t", compare(model.Y(model.X(t, m)) - model.X(t, model.Y(m)), nt * model.X(t, m))});
  out.push_back(
      {"[Y,delta_t] = |t| delta_t", compare(model.Y(model.delta(t, m)) - model.delta(t, model.Y(m)),
                                            nt * model.delta(t, m))});
  out.push_back({"[X_t,delta_t'] = delta_{N_t(t')}",
                 compare(model.X(t, model.delta(tp, m)) - model.delta(tp, model.X(t, m)),
                         model.delta(natural_growth(t, tree_lc(tp)), m))});
  const LinComb grow_t = natural_growth(t, tree_lc(b_plus(Forest(tp))));
  const LinComb grow_tp = natural_growth(tp, tree_lc(b_plus(Forest(t))));
  out.push_back({"[X_t,X_t'] = phi_{N_t(B+(t'))} - phi_{N_t'(B+(t))}",
                 compare(model.X(t, model.X(tp, m)) - model.X(tp, model.X(t, m)),
                         model.phi_op(grow_t - grow_tp, m))});
  out.push_back({"[delta_t,delta_t'] = 0",
                 compare(model.delta(t, model.delta(tp, m)), model.delta(tp, model.delta(t, m)))});
  return out;
}

CheckResult check_delta_k_ladder(FrameModel& model, std::size_t k, const Monomial& m) {
  const LinComb dk = delta_k(k);
  const RootedTree dot;
  return compare(model.X(dot, model.delta(dk, m)) - model.delta(dk, model.X(dot, m)), model.delta(delta_k(k + 1), m));
}

Monomial delta_from_commutators(FrameModel& model, const RootedTree& t, const Monomial& m) {
  if (t.is_single_vertex()) return model.delta(t, m);
  std::vector<RootedTree> rest = t.children();
  const RootedTree last = rest.back();
  rest.pop_back();
  const RootedTree u = b_plus(Forest(rest));
  Monomial out = model.X(last, delta_from_commutators(model, u, m)) - delta_from_commutators(model, u, model.X(last, m));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    const LinComb grown = natural_growth(last, tree_lc(rest[i]));
    for (const auto& [forest, c] : grown.terms()) {
      std::vector<RootedTree> parts = rest;
      parts[i] = forest.trees().front();
      out = out - c * delta_from_commutators(model, b_plus(Forest(parts)), m);
    }
  }
  return out;
}

CheckResult check_flat_degeneration(std::size_t max_vertices, int order) {
  FrameModel flat{XSeries(order)};
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (std::size_t i = 0; i < 2; ++i) {
        const FrameFunction& p = flat.phi(t, i);
        if (!p.is_zero()) return {false, "phi^" + std::string(i == 0 ? "x" : "z") + "(" + t.str() + ") = " + p.str()};
      }
    }
  }
  return {};
}

CheckResult check_grading(FrameModel& model, const RootedTree& t) {
  for (std::size_t i = 0; i < 2; ++i) {
    const FrameFunction& p = model.phi(t, i);
    if (!p.is_homogeneous(static_cast<int>(t.vertex_count()))) {
      return {false, "phi^" + std::string(i == 0 ? "x" : "z") + "(" + t.str() + ") = " + p.str()};
    }
  }
  return {};
}

XSeries random_xseries(JetRng& rng, int degree, int order) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(rng.next());
  return XSeries(order, std::move(c));
}

FormalDiffeo random_diffeo(JetRng& rng, int degree, int order) {
  std::vector<Rational> c{0};
  Rational slope(static_cast<int>(rng.next_int(2)) + 1, static_cast<int>(rng.next_int(3)) + 1);
  slope.canonicalize();
  c.push_back(slope);
  for (int k = 2; k <= degree; ++k) c.push_back(rng.next());
  return FormalDiffeo(XSeries(order, std::move(c)));
}

FrameFunction random_frame_function(JetRng& rng, int x_degree, int y_degree, int order) {
  FrameFunction f(order);
  for (int b = 0; b <= y_degree; ++b) f += FrameFunction::term(random_xseries(rng, x_degree, order), b);
  return f;
}

Monomial random_monomial(JetRng& rng, int order) {
  FrameFunction f = random_frame_function(rng, 3, 2, order);
  return {std::move(f), random_diffeo(rng, 3, order + 2)};
}

}  // namespace hopfrt
