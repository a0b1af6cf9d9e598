#include "virmod/core/rat_matrix.hpp"

#include <stdexcept>

namespace virmod {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::append_row(std::span<const Rational> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("RatMatrix: row length mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix: shape mismatch in product");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t piv = lead_row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(lead_row, j));
    Rational inv = 1 / a(lead_row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(lead_row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(lead_row, j);
    }
    ++lead_row;
  }
  RatMatrix out(0, a.cols());
  for (std::size_t i = 0; i < lead_row; ++i) out.append_row(a.row(i));
  return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rows(); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RatMatrix r = rref(aug);
  if (r.rows() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (r(i, i) != 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

SpanInsertResult span_insert(const RatMatrix& basis, std::span<const Rational> v) {
  if (v.size() != basis.cols())
    throw std::invalid_argument("span_insert: vector length " + std::to_string(v.size()) +
                                " does not match basis width " + std::to_string(basis.cols()));
  // reduce v against the (reduced) basis rows
  std::vector<Rational> w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t p = 0;
    while (p < basis.cols() && basis(i, p) == 0) ++p;
    if (w[p] == 0) continue;
    Rational f = w[p];
    for (std::size_t j = p; j < basis.cols(); ++j) w[j] -= f * basis(i, j);
  }
  bool is_zero = true;
  for (const auto& x : w)
    if (x != 0) is_zero = false;
  if (is_zero) return {basis, false};
  RatMatrix grown = basis;
  grown.append_row(w);
  return {rref(grown), true};
}

}  // namespace virmod
