#pragma once

#include <map>
#include <string>

#include "virmod/core/rational.hpp"

namespace virmod {

/// Finitely supported Z-indexed vector: sum of c_n x^n.
class LaurentVec {
 public:
  LaurentVec() = default;
  static LaurentVec monomial(const Rational& c, long n);

  void add(long n, const Rational& c);
  Rational coeff(long n) const;
  bool is_zero() const { return e_.empty(); }
  const std::map<long, Rational>& entries() const { return e_; }

  LaurentVec& operator+=(const LaurentVec& o);
  LaurentVec& operator-=(const LaurentVec& o);
  LaurentVec& operator*=(const Rational& c);
  friend LaurentVec operator+(LaurentVec a, const LaurentVec& b) { return a += b; }
  friend LaurentVec operator-(LaurentVec a, const LaurentVec& b) { return a -= b; }
  friend LaurentVec operator*(const Rational& c, LaurentVec a) { return a *= c; }
  bool operator==(const LaurentVec&) const = default;

  /// "2 x^2 - 1/2 x^-1"; zero prints as "0".
  std::string to_string() const;

 private:
  std::map<long, Rational> e_;
};

}  // namespace virmod
