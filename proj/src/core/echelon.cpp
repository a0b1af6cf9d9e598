#include "virmod/core/echelon.hpp"

namespace virmod {

Vec SparseEchelon::reduce(Vec v) const {
  // Walk v's keys in ascending order; subtracting a row only touches keys
  // after its pivot, so one pass suffices.
  auto it = v.terms().begin();
  while (it != v.terms().end()) {
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const Key pivot = it->first;
    Rational f = it->second / row->second.terms().begin()->second;
    v.axpy(-f, row->second);
    it = v.terms().upper_bound(pivot);
  }
  return v;
}

Vec SparseEchelon::insert(const Vec& v) {
  Vec r = reduce(v);
  if (r.is_zero()) return r;
  // normalize so the pivot coefficient is 1
  Rational lead = r.terms().begin()->second;
  r *= 1 / lead;
  rows_.emplace(r.terms().begin()->first, r);
  return r;
}

std::vector<Vec> SparseEchelon::rows() const {
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(r);
  return out;
}

}  // namespace virmod
