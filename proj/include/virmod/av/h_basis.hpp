#pragma once

#include <vector>

#include "virmod/core/poly.hpp"

namespace virmod {

/// h_m^n = (t - m - 1)(t - m - 2)...(t - m - n), h_m^0 = 1.
Poly h_poly(int m, int n);

/// Coordinates of a polynomial in the basis {h_m^n : n >= 0}.
struct HBasisCoords {
  int anchor = 0;
  std::vector<Rational> coords;  // coords[n] multiplies h_anchor^n
  bool operator==(const HBasisCoords&) const = default;
};

/// Newton expansion at the nodes m+1, m+2, ...
HBasisCoords to_h_basis(const Poly& f, int m);
Poly from_h_basis(const HBasisCoords& c);

}  // namespace virmod
