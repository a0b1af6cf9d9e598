#pragma once

#include <vector>

#include "virmod/core/sparse_vec.hpp"

namespace virmod {

/// Row echelon basis of a subspace of Key-indexed vectors. The pivot of a
/// row is its smallest key; pivots are distinct. Rows are not back-reduced,
/// which is enough for membership and for reading off the intersection
/// with any coordinate subspace that forms a final segment of the key order.
class SparseEchelon {
 public:
  /// Reduces v against the basis; the result is zero iff v is in the span.
  Vec reduce(Vec v) const;

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span. Returns the new (reduced) row, or a zero vector
  /// when v was already in the span.
  Vec insert(const Vec& v);

  std::size_t rank() const { return rows_.size(); }

  /// Rows ordered by pivot.
  std::vector<Vec> rows() const;

 private:
  std::map<Key, Vec> rows_;  // pivot -> row
};

}  // namespace virmod
