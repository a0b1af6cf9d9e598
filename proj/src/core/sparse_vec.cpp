#include "virmod/core/sparse_vec.hpp"

namespace virmod {

void Vec::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Vec::axpy(const Rational& c, const Vec& other) {
  if (c == 0) return;
  for (const auto& [k, v] : other.terms_) add(k, c * v);
}

void Vec::axpy_prefixed(const Rational& c, const Key& prefix, const Vec& other) {
  if (c == 0) return;
  for (const auto& [k, v] : other.terms_) add(Key::concat(prefix, k), c * v);
}

Rational Vec::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Vec& Vec::operator+=(const Vec& o) {
  for (const auto& [k, v] : o.terms_) add(k, v);
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  for (const auto& [k, v] : o.terms_) add(k, -v);
  return *this;
}

Vec& Vec::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

std::string Vec::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : terms_) {
    if (!first) s += ", ";
    first = false;
    s += "(" + k.to_string() + "):" + v.get_str();
  }
  return s + "}";
}

}  // namespace virmod
