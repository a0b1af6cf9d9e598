#include "virmod/core/poly.hpp"

#include <algorithm>

#include "term_format.hpp"

namespace virmod {


Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear(const Rational& c0, const Rational& c1) { return Poly({c0, c1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

std::pair<Poly, Rational> Poly::divmod_linear(const Rational& a) const {
  if (c_.empty()) return {Poly(), Rational(0)};
  // synthetic division, highest coefficient first
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    carry = carry * a + c_[i];
    if (i > 0) q[i - 1] = carry;
  }
  return {Poly(std::move(q)), carry};
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    std::string mono;
    if (k == 1) mono = std::string(1, var);
    if (k > 1) mono = std::string(1, var) + "^" + std::to_string(k);
    detail::append_term(out, c_[k], mono, first, false);
    first = false;
  }
  return out;
}

Poly taylor_shift(const Poly& f, const Rational& a) {
  // Horner in the shifted variable: f(t+a) = (...(f_n (t+a) + f_{n-1})(t+a) ...)
  Poly acc;
  const Poly step = Poly::linear(a, 1);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= step;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly poly_shift(const Poly& f, long m) { return taylor_shift(f, Rational(-m)); }

}  // namespace virmod
