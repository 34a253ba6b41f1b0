#pragma once

#include <cstddef>

#include "hopfrt/lincomb.hpp"
#include "hopfrt/tree.hpp"

namespace hopfrt {

// Algebra structure.
LinComb multiply(const LinComb& a, const LinComb& b);
Tensor2 multiply(const Tensor2& a, const Tensor2& b);
Tensor2 tensor(const LinComb& left, const LinComb& right);

// Coalgebra structure: Δ(t) = Σ_c P_c(t) ⊗ R_c(t), multiplicative on forests.
Tensor2 coproduct(const RootedTree& t);
Tensor2 coproduct(const Forest& f);
Tensor2 coproduct(const LinComb& x);

/// Coefficient of the unit.
Rational counit(const LinComb& x);

/// S(t) = -t - Σ_{c proper} P_c(t) S(R_c(t)), multiplicative on forests.
/// Per-tree results are memoized in a process-wide, mutex-guarded cache.
LinComb antipode(const RootedTree& t);
LinComb antipode(const LinComb& x);

/// Multiplies every forest by its total vertex count.
LinComb grading_Y(const LinComb& x);

/// Σ_v s_v: the copies of `s` with `grower` grafted by a new edge onto
/// vertex v, one term per vertex (with multiplicity).
LinComb natural_growth(const RootedTree& grower, const RootedTree& s);

/// N_t extended linearly and as a derivation over products; N_t(1) = 0.
LinComb natural_growth(const RootedTree& grower, const LinComb& x);

/// Growth by a root part R_c(t): a single tree grows by that tree, the
/// unit (full cut) acts as grading_Y.
LinComb natural_growth(const Forest& grower, const LinComb& x);

/// δ_k = N^{k-1}(•).
LinComb delta_k(std::size_t k);

/// B₊ extended linearly over forests.
LinComb b_plus(const LinComb& x);

/// Applies linear maps leg-wise: (f ⊗ g)(T).
template <class F, class G>
Tensor2 apply_legs(const Tensor2& x, F&& f, G&& g) {
  Tensor2 out;
  for (const auto& [k, c] : x.terms()) {
    const LinComb l = f(k.first);
    const LinComb r = g(k.second);
    for (const auto& [lf, lc] : l.terms())
      for (const auto& [rf, rc] : r.terms()) out.add(TensorKey{lf, rf}, c * lc * rc);
  }
  return out;
}

/// Δ(N_t(s)) against (N_t ⊗ id)Δs + Σ_c (P_c(t)· ⊗ N_{R_c(t)})Δs.
bool ntcoprod_identity(const RootedTree& t, const RootedTree& s);

/// N_{t0}(B₊(parts)) against B₊(t0·parts) + Σ_i B₊(parts with part_i grown by t0).
bool nbrel_identity(const RootedTree& t0, const Forest& parts);

}  // namespace hopfrt
