#include "virmod/core/laurent_vec.hpp"

#include "term_format.hpp"

namespace virmod {

LaurentVec LaurentVec::monomial(const Rational& c, long n) {
  LaurentVec v;
  v.add(n, c);
  return v;
}

void LaurentVec::add(long n, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = e_.try_emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e_.erase(it);
  }
}

Rational LaurentVec::coeff(long n) const {
  auto it = e_.find(n);
  return it == e_.end() ? Rational(0) : it->second;
}

LaurentVec& LaurentVec::operator+=(const LaurentVec& o) {
  for (const auto& [n, c] : o.e_) add(n, c);
  return *this;
}

LaurentVec& LaurentVec::operator-=(const LaurentVec& o) {
  for (const auto& [n, c] : o.e_) add(n, -c);
  return *this;
}

LaurentVec& LaurentVec::operator*=(const Rational& c) {
  if (c == 0) {
    e_.clear();
    return *this;
  }
  for (auto& [n, v] : e_) v *= c;
  return *this;
}

std::string LaurentVec::to_string() const {
  if (e_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e_.rbegin(); it != e_.rend(); ++it) {
    detail::append_term(out, it->second, "x^" + std::to_string(it->first), first, true);
    first = false;
  }
  return out;
}

}  // namespace virmod
