#include "virmod/av/omega.hpp"

#include <stdexcept>

namespace virmod {

Poly omega_d(const OmegaParams& w, int m, const Poly& f) {
  Poly out = poly_shift(f, m);
  out *= Poly::linear(-w.beta * m, 1);
  out *= power(w.lambda, m);
  return out;
}

Poly omega_x(const OmegaParams& w, int m, const Poly& f) {
  Poly out = poly_shift(f, m);
  out *= power(w.lambda, m);
  return out;
}

Vec to_vec(const Poly& f) {
  Vec v;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) v.add(Key{static_cast<int>(k)}, f.coeffs()[k]);
  return v;
}

Poly to_poly(const Vec& v) {
  std::vector<Rational> c;
  for (const auto& [k, q] : v) {
    if (k.size() != 1 || k[0] < 0) throw std::invalid_argument("not a polynomial in t: bad key");
    if (static_cast<std::size_t>(k[0]) >= c.size()) c.resize(k[0] + 1);
    c[k[0]] = q;
  }
  return Poly(std::move(c));
}

OmegaModule::OmegaModule(Rational lambda, Rational beta) : p_{std::move(lambda), std::move(beta)} {
  if (p_.lambda == 0) throw std::invalid_argument("Omega(lambda, beta) needs lambda != 0");
}

bool OmegaModule::in_window(const Key& k, const Caps& caps) const {
  return k.size() == 1 && k[0] >= 0 && k[0] <= caps.inner;
}

std::vector<Key> OmegaModule::basis(const Caps& caps) const {
  std::vector<Key> out;
  for (int k = 0; k <= caps.inner; ++k) out.push_back(Key{k});
  return out;
}

std::string OmegaModule::describe() const {
  return "Omega(" + p_.lambda.get_str() + "," + p_.beta.get_str() + ")";
}

}  // namespace virmod
