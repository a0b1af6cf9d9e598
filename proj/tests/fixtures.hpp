#pragma once

#include "virmod/br/br_module.hpp"

// Polynomial B_2-module on Q[s]: dbar_0 = s, dbar_j p(s) = psi_j p(s - j).
inline virmod::BrModuleDesc whittaker2(const virmod::Rational& psi1, const virmod::Rational& psi2) {
  using namespace virmod;
  BrModuleDesc m;
  m.name = "whittaker2";
  m.rank = 2;
  m.carrier.factors = {CarrierFactor::polynomial()};
  m.ops = {BrOperator::poly_mult(Poly::var()),
           BrOperator::compose({BrOperator::scalar(psi1), BrOperator::unit_shift(-1)}),
           BrOperator::compose({BrOperator::scalar(psi2), BrOperator::unit_shift(-2)})};
  return certified(std::move(m), 8);
}
