#pragma once

#include <string>
#include <utility>
#include <vector>

#include "virmod/core/rational.hpp"

namespace virmod {

/// Dense univariate polynomial over Rational; coeffs()[k] multiplies t^k.
/// Trailing zeros are trimmed, the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t k);
  /// c0 + c1 t
  static Poly linear(const Rational& c0, const Rational& c1);
  /// t
  static Poly var() { return linear(0, 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const { return Rational(-1) * *this; }
  bool operator==(const Poly&) const = default;

  /// Division by (t - a): returns (quotient, remainder) with remainder = f(a).
  std::pair<Poly, Rational> divmod_linear(const Rational& a) const;

  /// "2t^2 - 1/2 t + 3"; the zero polynomial prints as "0".
  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// f(t + a)
Poly taylor_shift(const Poly& f, const Rational& a);

/// f(t - m), expanded.
Poly poly_shift(const Poly& f, long m);

}  // namespace virmod
