#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hopfrt/butcher.hpp"
#include "hopfrt/frame.hpp"
#include "hopfrt/lincomb.hpp"
#include "hopfrt/tree.hpp"

namespace hopfrt {

/// ψ̃(x, y) = (ψ(x), y ψ′(x)), as the two coordinate functions.
struct LiftedDiffeo {
  XSeries x;
  FrameFunction y;
};

LiftedDiffeo lift_diffeo(const FormalDiffeo& psi);

/// γ_•(ψ) = y ψ′ Γ(ψ) − y Γ + y ψ″/ψ′, as a function of the source point.
FrameFunction gamma_bullet(const FormalDiffeo& psi, const CurvatureFn& gamma);

/// The frame-bundle model for a fixed curvature Γ.
///
/// Coordinates are (x, z) with y = e^z; the flow field is φ^x(•) = y,
/// φ^z(•) = −y Γ(x), and ∂_z acts as y ∂_y. Index 0 is x, index 1 is z.
/// Elementary differentials are cached per model, so a model is not safe
/// for concurrent use; build one per thread.
class FrameModel {
 public:
  explicit FrameModel(CurvatureFn gamma);

  const CurvatureFn& curvature() const { return gamma_; }

  /// φ^i(t).
  const FrameFunction& phi(const RootedTree& t, std::size_t i) { return ed_.phi(t, i); }
  /// φ_t(h).
  FrameFunction phi_t(const RootedTree& t, const FrameFunction& h) { return ed_.apply(t, h); }
  /// φ^x(t) ∂_x h + φ^z(t) y ∂_y h.
  FrameFunction x_field(const RootedTree& t, const FrameFunction& h) { return ed_.growth_operator(t, h); }

  FrameFunction gamma_bullet(const FormalDiffeo& psi) const;
  /// γ_t(ψ) = φ_t(γ_•(ψ)).
  FrameFunction gamma_t(const RootedTree& t, const FormalDiffeo& psi);
  /// Product of γ over the trees of a forest; the unit gives 1.
  FrameFunction gamma_forest(const Forest& f, const FormalDiffeo& psi);

  /// δ_t(f U*_ψ) = γ_t(ψ) f U*_ψ, multiplicative over forests and linear.
  Monomial delta(const RootedTree& t, const Monomial& m);
  Monomial delta(const Forest& f, const Monomial& m);
  Monomial delta(const LinComb& x, const Monomial& m);

  /// X_t(f U*_ψ) = (X_t f) U*_ψ, linear over combinations of trees.
  Monomial X(const RootedTree& t, const Monomial& m);
  Monomial X(const LinComb& x, const Monomial& m);

  /// Y(f U*_ψ) = (y ∂_y f) U*_ψ.
  Monomial Y(const Monomial& m) const;

  /// φ_x(f) U*_ψ for a combination of trees; φ_{B₊(t)} = X_t.
  Monomial phi_op(const LinComb& x, const Monomial& m);

 private:
  struct FramePartial {
    FrameFunction operator()(const FrameFunction& h, std::size_t i) const { return i == 0 ? h.d_x() : h.y_dy(); }
  };

  CurvatureFn gamma_;
  ElementaryDifferentials<FrameFunction, FramePartial> ed_;
};

Monomial operator+(const Monomial& a, const Monomial& b);
Monomial operator-(const Monomial& a, const Monomial& b);
Monomial operator*(const Rational& c, const Monomial& m);

/// γ_•(η∘ψ) = γ_•(ψ) + γ_•(η)∘ψ̃.
CheckResult check_cocycle(const FormalDiffeo& psi, const FormalDiffeo& eta, const CurvatureFn& gamma);

/// lift(η∘ψ) = lift(η)∘lift(ψ), tested on f.
CheckResult check_lift_composition(const FormalDiffeo& psi, const FormalDiffeo& eta, const FrameFunction& f);

/// (ab)c = a(bc).
CheckResult check_associativity(const Monomial& a, const Monomial& b, const Monomial& c);

/// φ_t(h∘ψ̃) = Σ_{c ≠ full} γ_{P_c(t)}(ψ)·(φ_{R_c(t)} h)∘ψ̃. Holds for h of
/// y-degree 1.
CheckResult check_pushforward_phi(FrameModel& model, const RootedTree& t, const FormalDiffeo& psi,
                                  const FrameFunction& h);

/// X_t(h∘ψ̃) = Σ_c γ_{P_c(t)}(ψ)·(X_{R_c(t)} h)∘ψ̃ with X over the empty
/// root part read as Y.
CheckResult check_pushforward_X(FrameModel& model, const RootedTree& t, const FormalDiffeo& psi,
                                const FrameFunction& h);

/// δ_t(ab) = Σ_c δ_{P_c(t)}(a)·δ_{R_c(t)}(b).
CheckResult check_delta_coproduct(FrameModel& model, const RootedTree& t, const Monomial& a, const Monomial& b);

/// X_t(ab) = X_t(a)·b + Σ_c δ_{P_c(t)}(a)·X_{R_c(t)}(b), full cut giving δ_t(a)·Y(b).
CheckResult check_X_coproduct(FrameModel& model, const RootedTree& t, const Monomial& a, const Monomial& b);

struct RelationResult {
  std::string relation;
  CheckResult result;
};

/// The commutator table on m:
/// [Y, X_t] = |t| X_t, [Y, δ_t] = |t| δ_t, [X_t, δ_{t′}] = δ_{N_t(t′)},
/// [X_t, X_{t′}] = φ_{N_t(B₊(t′))} − φ_{N_{t′}(B₊(t))}, [δ_t, δ_{t′}] = 0.
std::vector<RelationResult> check_commutators(FrameModel& model, const RootedTree& t, const RootedTree& tp,
                                              const Monomial& m);

/// [X_•, δ_{δ_k}] = δ_{δ_{k+1}}.
CheckResult check_delta_k_ladder(FrameModel& model, std::size_t k, const Monomial& m);

/// δ_t(m) from δ_• and commutators with the X_{t_i} only.
Monomial delta_from_commutators(FrameModel& model, const RootedTree& t, const Monomial& m);

/// With Γ = 0: φ(t) = 0 for every tree with 2..max_vertices vertices.
CheckResult check_flat_degeneration(std::size_t max_vertices, int order);

/// φ^i(t) has y-degree |V(t)|.
CheckResult check_grading(FrameModel& model, const RootedTree& t);

// Seeded random jets.
XSeries random_xseries(JetRng& rng, int degree, int order);
FormalDiffeo random_diffeo(JetRng& rng, int degree, int order);
FrameFunction random_frame_function(JetRng& rng, int x_degree, int y_degree, int order);
Monomial random_monomial(JetRng& rng, int order);

}  // namespace hopfrt
