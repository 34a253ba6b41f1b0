#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "hopfrt/rational.hpp"
#include "hopfrt/tree.hpp"

namespace hopfrt {

/// Finite rational combination of keys with zero coefficients stripped.
template <class Key, class Compare = std::less<Key>>
class Combination {
 public:
  using Map = std::map<Key, Rational, Compare>;

  Combination() = default;
  explicit Combination(Key k, Rational c = 1) { add(std::move(k), c); }

  void add(const Key& k, const Rational& c) {
    if (hopfrt::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (hopfrt::is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Combination& other, const Rational& scale = 1) {
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Combination& operator+=(const Combination& o) {
    add(o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add(o, -1);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (hopfrt::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator-(Combination a) { return a *= -1; }
  friend bool operator==(const Combination& a, const Combination& b) { return a.terms_ == b.terms_; }

  /// Applies a linear map defined on keys.
  template <class Out, class F>
  Out map_linear(F&& f) const {
    Out out;
    for (const auto& [k, c] : terms_) out.add(f(k), c);
    return out;
  }

 private:
  Map terms_;
};

/// An element of the Hopf algebra of rooted trees.
using LinComb = Combination<Forest>;

using TensorKey = std::pair<Forest, Forest>;

/// Display order for tensor terms: `x | 1` terms, then `1 | x` terms, then
/// the rest by left leg and right leg.
struct TensorKeyOrder {
  bool operator()(const TensorKey& a, const TensorKey& b) const;
};

/// An element of H ⊗ H.
using Tensor2 = Combination<TensorKey, TensorKeyOrder>;

inline LinComb tree_lc(const RootedTree& t) { return LinComb{Forest{t}}; }
inline LinComb unit_lc() { return LinComb{Forest{}}; }

/// `c1 F1 + c2 F2 - c3 F3`; `0` for the zero element.
std::string render(const LinComb& x);
/// `c (F1 | F2) + ...`; `0` for the zero element.
std::string render(const Tensor2& x);

/// Inverse of render(LinComb). A bare forest means coefficient 1.
LinComb parse_lincomb(std::string_view text);

}  // namespace hopfrt
