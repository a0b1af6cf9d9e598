#include "virmod/av/a_module.hpp"

#include <stdexcept>

namespace virmod {

LaurentVec a_d(const AParams& a, int m, const LaurentVec& v) {
  LaurentVec out;
  for (const auto& [n, c] : v.entries()) out.add(n + m, c * (Rational(n) + a.alpha + a.beta * m));
  return out;
}

LaurentVec a_x(int m, const LaurentVec& v) {
  LaurentVec out;
  for (const auto& [n, c] : v.entries()) out.add(n + m, c);
  return out;
}

Vec to_vec(const LaurentVec& v) {
  Vec out;
  for (const auto& [n, c] : v.entries()) out.add(Key{static_cast<int>(n)}, c);
  return out;
}

LaurentVec to_laurent(const Vec& v) {
  LaurentVec out;
  for (const auto& [k, c] : v) {
    if (k.size() != 1) throw std::invalid_argument("not a Laurent vector: bad key");
    out.add(k[0], c);
  }
  return out;
}

Vec AModule::d(int m, const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) out.add(Key{k[0] + m}, c * (Rational(k[0]) + p_.alpha + p_.beta * m));
  return out;
}

Vec AModule::x(int m, const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) out.add(Key{k[0] + m}, c);
  return out;
}

bool AModule::in_window(const Key& k, const Caps& caps) const {
  return k.size() == 1 && k[0] >= -caps.inner && k[0] <= caps.inner;
}

std::vector<Key> AModule::basis(const Caps& caps) const {
  std::vector<Key> out;
  for (int n = -caps.inner; n <= caps.inner; ++n) out.push_back(Key{n});
  return out;
}

std::string AModule::describe() const {
  return "A(" + p_.alpha.get_str() + "," + p_.beta.get_str() + ")";
}

}  // namespace virmod
