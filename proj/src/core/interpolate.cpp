#include "virmod/core/interpolate.hpp"

#include <stdexcept>

namespace virmod {

namespace {

template <class T>
std::vector<T> newton_to_monomial(std::span<const Rational> nodes, std::vector<T> dd) {
  // dd holds Newton divided differences a_0..a_{N-1};
  // p(k) = a_0 + (k-x_0)(a_1 + (k-x_1)(a_2 + ...)).
  const std::size_t n = dd.size();
  std::vector<T> p{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // p <- p * (k - x_i) + a_i
    std::vector<T> q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= nodes[i] * p[j];
    }
    q[0] += dd[i];
    p = std::move(q);
  }
  p.resize(n);
  return p;
}

template <class T>
std::vector<T> interpolate_impl(std::span<const Rational> nodes, std::span<const T> values) {
  if (nodes.size() != values.size() || nodes.empty())
    throw std::invalid_argument("interpolate: need one value per node");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolate: repeated node");
  std::vector<T> table(values.begin(), values.end());
  std::vector<T> dd{table[0]};
  for (std::size_t level = 1; level < nodes.size(); ++level) {
    for (std::size_t i = nodes.size() - 1; i >= level; --i) {
      T diff = table[i];
      diff -= table[i - 1];
      diff *= Rational(1) / (nodes[i] - nodes[i - level]);
      table[i] = std::move(diff);
    }
    dd.push_back(table[level]);
  }
  return newton_to_monomial<T>(nodes, std::move(dd));
}

}  // namespace

std::vector<Vec> interpolate(std::span<const Rational> nodes, std::span<const Vec> values) {
  return interpolate_impl<Vec>(nodes, values);
}

std::vector<Rational> interpolate(std::span<const Rational> nodes,
                                  std::span<const Rational> values) {
  return interpolate_impl<Rational>(nodes, values);
}

}  // namespace virmod
