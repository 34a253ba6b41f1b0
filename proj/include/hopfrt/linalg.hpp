#pragma once

#include <map>
#include <vector>

#include "hopfrt/lincomb.hpp"

namespace hopfrt {

/// Incrementally maintained row-echelon basis of a subspace spanned by
/// linear combinations of forests, over exact rationals.
class RowSpace {
 public:
  /// Adds `v` if it is independent of the current rows; returns whether it was.
  bool insert(const LinComb& v);

  bool contains(const LinComb& v) const;

  std::size_t rank() const { return rows_.size(); }

 private:
  // Reduces `v` against the echelon rows; pivots are the largest forest of each row.
  LinComb reduce(LinComb v) const;

  std::map<Forest, LinComb> rows_;  // pivot -> row normalized to pivot coefficient 1
};

/// Exact rank of a list of vectors.
std::size_t rank_of(const std::vector<LinComb>& vs);

}  // namespace hopfrt
