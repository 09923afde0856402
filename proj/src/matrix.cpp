#include "cotame/matrix.hpp"

#include "cotame/errors.hpp"

namespace cotame {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  RationalMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::ArityMismatch, "matrix shapes do not compose");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_mul(aik, b(k, j));
    }
  }
  return out;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(col, j), work(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const Rational scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= factor * work(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + (*this)(i, j).to_string();
  }
  return out + "]";
}

}  // namespace cotame
