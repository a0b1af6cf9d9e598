#include "virmod/av/h_basis.hpp"

#include <stdexcept>

namespace virmod {

Poly h_poly(int m, int n) {
  if (n < 0) throw std::invalid_argument("h_poly: n must be >= 0");
  Poly h = Poly::constant(1);
  for (int j = m + 1; j <= m + n; ++j) h *= Poly::linear(-j, 1);
  return h;
}

HBasisCoords to_h_basis(const Poly& f, int m) {
  HBasisCoords out{m, {}};
  Poly rest = f;
  for (int node = m + 1; !rest.is_zero(); ++node) {
    auto [q, r] = rest.divmod_linear(node);
    out.coords.push_back(r);
    rest = std::move(q);
  }
  return out;
}

Poly from_h_basis(const HBasisCoords& c) {
  Poly out;
  Poly h = Poly::constant(1);
  for (std::size_t n = 0; n < c.coords.size(); ++n) {
    out += c.coords[n] * h;
    h *= Poly::linear(-(c.anchor + static_cast<int>(n) + 1), 1);
  }
  return out;
}

}  // namespace virmod
