#include "hopfrt/hopf.hpp"

#include <map>
#include <mutex>

namespace hopfrt {

LinComb multiply(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [fa, ca] : a.terms())
    for (const auto& [fb, cb] : b.terms()) out.add(fa * fb, ca * cb);
  return out;
}

Tensor2 multiply(const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add(TensorKey{ka.first * kb.first, ka.second * kb.second}, ca * cb);
  return out;
}

Tensor2 tensor(const LinComb& left, const LinComb& right) {
  Tensor2 out;
  for (const auto& [l, cl] : left.terms())
    for (const auto& [r, cr] : right.terms()) out.add(TensorKey{l, r}, cl * cr);
  return out;
}

Tensor2 coproduct(const RootedTree& t) {
  Tensor2 out;
  for (const auto& cut : admissible_cuts(t)) out.add(TensorKey{cut.pruned, cut.root_part}, 1);
  return out;
}

Tensor2 coproduct(const Forest& f) {
  Tensor2 out(TensorKey{Forest{}, Forest{}});
  for (const auto& t : f.trees()) out = multiply(out, coproduct(t));
  return out;
}

Tensor2 coproduct(const LinComb& x) {
  Tensor2 out;
  for (const auto& [f, c] : x.terms()) out.add(coproduct(f), c);
  return out;
}

Rational counit(const LinComb& x) { return x.coefficient(Forest{}); }

namespace {

std::mutex antipode_mutex;
std::map<RootedTree, LinComb> antipode_cache;

}  // namespace

LinComb antipode(const RootedTree& t) {
  {
    std::lock_guard lock(antipode_mutex);
    if (auto it = antipode_cache.find(t); it != antipode_cache.end()) return it->second;
  }
  LinComb s = -tree_lc(t);
  for (const auto& cut : admissible_cuts(t)) {
    if (cut.cut.kind != Cut::Kind::proper) continue;
    s -= multiply(LinComb(cut.pruned), antipode(cut.root_part.trees().front()));
  }
  std::lock_guard lock(antipode_mutex);
  return antipode_cache.emplace(t, std::move(s)).first->second;
}

LinComb antipode(const LinComb& x) {
  LinComb out;
  for (const auto& [f, c] : x.terms()) {
    LinComb term = unit_lc();
    for (const auto& t : f.trees()) term = multiply(term, antipode(t));
    out.add(term, c);
  }
  return out;
}

LinComb grading_Y(const LinComb& x) {
  LinComb out;
  for (const auto& [f, c] : x.terms()) out.add(f, c * static_cast<unsigned long>(f.degree()));
  return out;
}

namespace {

void graft_everywhere(const RootedTree& grower, const RootedTree& s, std::vector<RootedTree>& out) {
  auto kids = s.children();
  kids.push_back(grower);
  out.push_back(RootedTree::from_children(std::move(kids)));
  const auto& children = s.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::vector<RootedTree> grown;
    graft_everywhere(grower, children[i], grown);
    for (auto& g : grown) {
      auto k = children;
      k[i] = std::move(g);
      out.push_back(RootedTree::from_children(std::move(k)));
    }
  }
}

}  // namespace

LinComb natural_growth(const RootedTree& grower, const RootedTree& s) {
  std::vector<RootedTree> grafts;
  graft_everywhere(grower, s, grafts);
  LinComb out;
  for (const auto& g : grafts) out.add(Forest{g}, 1);
  return out;
}

LinComb natural_growth(const RootedTree& grower, const LinComb& x) {
  LinComb out;
  for (const auto& [f, c] : x.terms()) {
    const auto& ts = f.trees();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      std::vector<RootedTree> rest;
      for (std::size_t j = 0; j < ts.size(); ++j)
        if (j != i) rest.push_back(ts[j]);
      out.add(multiply(natural_growth(grower, ts[i]), LinComb(Forest{std::move(rest)})), c);
    }
  }
  return out;
}

LinComb natural_growth(const Forest& grower, const LinComb& x) {
  if (grower.is_unit()) return grading_Y(x);
  if (!grower.is_single_tree()) throw std::invalid_argument("natural growth by a forest of several trees is undefined");
  return natural_growth(grower.trees().front(), x);
}

LinComb delta_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("delta_k requires k >= 1");
  LinComb d = tree_lc(RootedTree{});
  for (std::size_t i = 1; i < k; ++i) d = natural_growth(RootedTree{}, d);
  return d;
}

LinComb b_plus(const LinComb& x) {
  LinComb out;
  for (const auto& [f, c] : x.terms()) out.add(Forest{b_plus(f)}, c);
  return out;
}

bool ntcoprod_identity(const RootedTree& t, const RootedTree& s) {
  const LinComb grown = natural_growth(t, tree_lc(s));
  const Tensor2 lhs = coproduct(grown);
  const Tensor2 ds = coproduct(s);
  auto id = [](const Forest& f) { return LinComb(f); };
  Tensor2 rhs = apply_legs(ds, [&](const Forest& f) { return natural_growth(t, LinComb(f)); }, id);
  for (const auto& cut : admissible_cuts(t)) {
    const LinComb prune(cut.pruned);
    rhs += apply_legs(
        ds, [&](const Forest& f) { return multiply(prune, LinComb(f)); },
        [&](const Forest& f) { return natural_growth(cut.root_part, LinComb(f)); });
  }
  return lhs == rhs;
}

bool nbrel_identity(const RootedTree& t0, const Forest& parts) {
  const LinComb lhs = natural_growth(t0, tree_lc(b_plus(parts)));
  LinComb rhs = tree_lc(b_plus(Forest{t0} * parts));
  const auto& ps = parts.trees();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<RootedTree> rest;
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (j != i) rest.push_back(ps[j]);
    rhs += b_plus(multiply(natural_growth(t0, ps[i]), LinComb(Forest{std::move(rest)})));
  }
  return lhs == rhs;
}

}  // namespace hopfrt
