#pragma once

#include <span>
#include <vector>

#include "virmod/core/sparse_vec.hpp"

namespace virmod {

/// Exact interpolation of vector-valued samples: returns c_0..c_{N-1} with
/// sum_j c_j k_i^j = values[i] for all N nodes. Nodes must be distinct.
std::vector<Vec> interpolate(std::span<const Rational> nodes, std::span<const Vec> values);

/// Scalar version.
std::vector<Rational> interpolate(std::span<const Rational> nodes,
                                  std::span<const Rational> values);

}  // namespace virmod
