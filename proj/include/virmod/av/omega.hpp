#pragma once

#include "virmod/av/av_module.hpp"
#include "virmod/core/poly.hpp"

namespace virmod {

/// Omega(lambda, beta) = Q[t] with d_m f = lambda^m (t - beta m) f(t - m)
/// and x^m f = lambda^m f(t - m).
struct OmegaParams {
  Rational lambda = 1;
  Rational beta = 0;
};

Poly omega_d(const OmegaParams& w, int m, const Poly& f);
Poly omega_x(const OmegaParams& w, int m, const Poly& f);

/// Basis key {k} stands for t^k.
Vec to_vec(const Poly& f);
Poly to_poly(const Vec& v);

class OmegaModule final : public AVModule {
 public:
  /// Throws std::invalid_argument when lambda == 0.
  OmegaModule(Rational lambda, Rational beta);

  const OmegaParams& params() const { return p_; }
  const Rational& lambda() const { return p_.lambda; }
  const Rational& beta() const { return p_.beta; }

  Vec d(int m, const Vec& v) const override { return to_vec(omega_d(p_, m, to_poly(v))); }
  Vec x(int m, const Vec& v) const override { return to_vec(omega_x(p_, m, to_poly(v))); }
  std::size_t arity() const override { return 1; }
  bool in_window(const Key& k, const Caps& caps) const override;
  std::vector<Key> basis(const Caps& caps) const override;
  std::string describe() const override;
  std::string format(const Vec& v) const override { return to_poly(v).to_string('t'); }

 private:
  OmegaParams p_;
};

}  // namespace virmod
