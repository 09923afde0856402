#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cotame/rational.hpp"

namespace cotame {

/// Dense row-major matrix over Q, sized for the small square systems that
/// describe affine maps and symmetric-power representations.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Gauss-Jordan; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;
  bool is_diagonal() const;

  std::string to_string() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace cotame
