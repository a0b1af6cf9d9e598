#pragma once

#include <map>
#include <string>

#include "virmod/core/key.hpp"
#include "virmod/core/rational.hpp"

namespace virmod {

/// Finitely supported vector over Rational, indexed by Key. No zero
/// coefficient is ever stored, so structural equality is mathematical
/// equality.
class Vec {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = Map::const_iterator;

  Vec() = default;
  static Vec unit(const Key& k, const Rational& c = 1) {
    Vec v;
    v.add(k, c);
    return v;
  }

  void add(const Key& k, const Rational& c);
  /// this += c * other
  void axpy(const Rational& c, const Vec& other);
  /// this += c * (other with every key prefixed by `prefix`)
  void axpy_prefixed(const Rational& c, const Key& prefix, const Vec& other);

  Rational coeff(const Key& k) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& c);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& c, Vec a) { return a *= c; }
  Vec operator-() const {
    Vec r = *this;
    r *= -1;
    return r;
  }
  bool operator==(const Vec&) const = default;

  /// Debug form "{(k):c, ...}".
  std::string to_string() const;

 private:
  Map terms_;
};

}  // namespace virmod
