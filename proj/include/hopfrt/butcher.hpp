#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hopfrt/lincomb.hpp"
#include "hopfrt/series.hpp"
#include "hopfrt/tree.hpp"

namespace hopfrt {

/// Outcome of an identity check. `mismatch` describes the first differing
/// coefficient when the check fails.
struct CheckResult {
  bool ok = true;
  std::string mismatch;

  explicit operator bool() const { return ok; }
};

/// Elementary differentials over any commutative differential algebra F.
///
/// `field[i]` is φ^i(•) and `partial(h, i)` is the i-th coordinate
/// derivation; products use F's `*`, sums its `+=`. For
/// t = B₊(t₁…t_m), φ_t(h) = Σ_{k₁…k_m} ∏_j φ^{k_j}(t_j) ∂_{k₁…k_m} h and
/// φ^i(t) = φ_t(f^i). Results of φ^i(t) are cached per instance.
template <class F, class Partial>
class ElementaryDifferentials {
 public:
  ElementaryDifferentials(std::vector<F> field, Partial partial)
      : field_(std::move(field)), partial_(std::move(partial)) {}

  std::size_t dimension() const { return field_.size(); }
  const F& field(std::size_t i) const { return field_.at(i); }

  /// φ^i(t).
  const F& phi(const RootedTree& t, std::size_t i) {
    const auto key = std::make_pair(t.str(), i);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    F value = apply(t, field_.at(i));
    return cache_.emplace(key, std::move(value)).first->second;
  }

  /// φ_t(h).
  F apply(const RootedTree& t, const F& h) {
    if (t.is_single_vertex()) return h;
    std::optional<F> acc;
    contract(t.children(), 0, h, std::nullopt, acc);
    return std::move(*acc);
  }

  /// φ^j(t) ∂_j h, the operator φ_{N_t}.
  F growth_operator(const RootedTree& t, const F& h) {
    std::optional<F> acc;
    for (std::size_t j = 0; j < field_.size(); ++j) accumulate(acc, phi(t, j) * partial_(h, j));
    return std::move(*acc);
  }

 private:
  static void accumulate(std::optional<F>& acc, F term) {
    if (acc) {
      *acc += term;
    } else {
      acc = std::move(term);
    }
  }

  void contract(const std::vector<RootedTree>& kids, std::size_t j, const F& derivative,
                const std::optional<F>& product, std::optional<F>& acc) {
    if (j == kids.size()) {
      accumulate(acc, *product * derivative);
      return;
    }
    for (std::size_t k = 0; k < field_.size(); ++k) {
      const F& p = phi(kids[j], k);
      contract(kids, j + 1, partial_(derivative, k), product ? std::optional<F>(*product * p) : std::optional<F>(p),
               acc);
    }
  }

  std::vector<F> field_;
  Partial partial_;
  std::map<std::pair<std::string, std::size_t>, F> cache_;
};

/// φ(t) as an n-vector. Throws TruncationError when the field's order is
/// below |V(t)| − 1.
std::vector<MultiSeries> elementary_differential(const RootedTree& t, const VectorField& f);

/// φ extended multiplicatively over forests and linearly over combinations.
std::vector<MultiSeries> elementary_differential(const LinComb& x, const VectorField& f);

/// φ_t(h).
MultiSeries phi_t_apply(const RootedTree& t, const VectorField& f, const MultiSeries& h);

/// φ_x(h) for a combination of trees. Forests with more than one tree are
/// rejected.
MultiSeries phi_t_apply(const LinComb& x, const VectorField& f, const MultiSeries& h);

/// Taylor coefficients x_0..x_K of the formal solution of dx/ds = f(x),
/// x(0) = 0. Entry k is the n-vector of s^k coefficients.
std::vector<std::vector<Rational>> series_solve(const VectorField& f, int K);

/// d^k x/ds^k at s = 0, i.e. k!·x_k, for k = 0..K.
std::vector<std::vector<Rational>> taylor_derivatives(const VectorField& f, int K);

/// φ(N(t)) = Σ_j f^j ∂_j φ(t).
CheckResult check_growth_derivative(const RootedTree& t, const VectorField& f);

/// φ^i(N_t(s)) = φ^j(t) ∂_j φ^i(s).
CheckResult check_generalized_growth(const RootedTree& t, const RootedTree& s, const VectorField& f);

/// φ_{N_t}(φ_s(h)) = φ_{N_t(s)}(h).
CheckResult check_growth_composition(const RootedTree& t, const RootedTree& s, const VectorField& f,
                                     const MultiSeries& h);

/// k!·x_k against φ(δ_k) at the origin.
CheckResult check_taylor_bridge(const VectorField& f, int k);

/// Deterministic rational in {−2..2}/{1..3}.
class JetRng {
 public:
  explicit JetRng(std::uint64_t seed);
  Rational next();
  std::uint32_t next_int(std::uint32_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Every component a polynomial of total degree ≤ 2 with random coefficients.
VectorField random_quadratic_field(std::size_t n, std::uint64_t seed, int order);

/// Random polynomial of total degree ≤ degree.
MultiSeries random_polynomial(std::size_t n, int degree, JetRng& rng, int order);

}  // namespace hopfrt
