#include "hopfrt/linalg.hpp"

namespace hopfrt {

LinComb RowSpace::reduce(LinComb v) const {
  // Eliminate pivots from the largest down; a row only contains forests at or
  // below its pivot, so each step strictly lowers the leading forest.
  while (!v.is_zero()) {
    bool changed = false;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) continue;
      const Rational c = it->second;
      v.add(row->second, -c);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return v;
}

bool RowSpace::insert(const LinComb& v) {
  LinComb r = reduce(v);
  if (r.is_zero()) return false;
  // Leading term of r must not be a pivot, otherwise reduce would have removed it.
  const Forest pivot = r.terms().rbegin()->first;
  r *= Rational(1) / r.terms().rbegin()->second;
  // Keep rows fully reduced against the new pivot.
  for (auto& [p, row] : rows_) {
    const Rational c = row.coefficient(pivot);
    if (!is_zero(c)) row.add(r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool RowSpace::contains(const LinComb& v) const { return reduce(v).is_zero(); }

std::size_t rank_of(const std::vector<LinComb>& vs) {
  RowSpace s;
  for (const auto& v : vs) s.insert(v);
  return s.rank();
}

}  // namespace hopfrt
