#pragma once

#include <optional>
#include <span>
#include <vector>

#include "virmod/core/rational.hpp"

namespace virmod {

/// Dense row-major matrix of Rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::span<const Rational> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Rational> r);

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  bool operator==(const RatMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// Reduced row echelon form; pivots are the first nonzero entry scanning
/// left to right, zero rows are dropped.
RatMatrix rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

struct SpanInsertResult {
  RatMatrix basis;
  bool was_new = false;
};

/// Inserts v into the row space of `basis` (kept in reduced echelon form).
/// Throws std::invalid_argument when v.size() != basis.cols().
SpanInsertResult span_insert(const RatMatrix& basis, std::span<const Rational> v);

}  // namespace virmod
