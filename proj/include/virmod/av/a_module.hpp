#pragma once

#include "virmod/av/av_module.hpp"
#include "virmod/core/laurent_vec.hpp"

namespace virmod {

/// Intermediate series module A(alpha, beta) on the Laurent basis x^n:
/// d_m x^n = (n + alpha + beta m) x^(n+m), x^m x^n = x^(n+m).
struct AParams {
  Rational alpha = 0;
  Rational beta = 0;
};

LaurentVec a_d(const AParams& a, int m, const LaurentVec& v);
LaurentVec a_x(int m, const LaurentVec& v);

/// Basis key {n} stands for x^n.
Vec to_vec(const LaurentVec& v);
LaurentVec to_laurent(const Vec& v);

class AModule final : public AVModule {
 public:
  AModule(Rational alpha, Rational beta) : p_{std::move(alpha), std::move(beta)} {}

  const AParams& params() const { return p_; }
  const Rational& alpha() const { return p_.alpha; }
  const Rational& beta() const { return p_.beta; }

  Vec d(int m, const Vec& v) const override;
  Vec x(int m, const Vec& v) const override;
  std::size_t arity() const override { return 1; }
  bool in_window(const Key& k, const Caps& caps) const override;
  std::vector<Key> basis(const Caps& caps) const override;
  std::string describe() const override;
  std::string format(const Vec& v) const override { return to_laurent(v).to_string(); }

 private:
  AParams p_;
};

}  // namespace virmod
