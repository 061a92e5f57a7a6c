#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace orbitnorm {

/// Arbitrary-precision rational number (GMP).
using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RationalMatrix transpose() const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix power(const RationalMatrix& m, int k);

/// Row rank by Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

/// Indices of the pivot columns of the reduced row echelon form; they index
/// a basis of the column space drawn from the columns of `m`.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m);

/// nullopt when `m` is singular or not square.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// The unique X with a * X = b. Throws ContractError when `a` lacks full
/// column rank or the system is inconsistent.
RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b);

/// Incremental rank of a sparse linear system. Rows are reduced against the
/// pivots seen so far and kept only if independent.
class SparseRowReducer {
 public:
  using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

  /// Entries may be unsorted and repeat a column; repeats are summed.
  /// Returns true if the row increased the rank.
  bool add_row(SparseRow row);

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  // Leading column -> row with leading coefficient 1.
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace orbitnorm
