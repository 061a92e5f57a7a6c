#include "orbitnorm/rational_matrix.hpp"

#include <algorithm>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractError("matrix shape mismatch");
  }
}

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m,
                                    std::size_t column_limit) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < column_limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(pivot, j), m(row, j));
    }
    const Rational lead = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, col)) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) -= factor * m(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return sgn(x) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ContractError("matrix product shape mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix power(const RationalMatrix& m, int k) {
  if (!m.is_square()) throw ContractError("power of a non-square matrix");
  if (k < 0) throw ContractError("negative matrix power");
  RationalMatrix result = RationalMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) result = result * m;
  return result;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return row_reduce(work, work.cols()).size();
}

std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  RationalMatrix work = m;
  return row_reduce(work, work.cols());
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  if (row_reduce(augmented, n).size() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = augmented(i, n + j);
  }
  return inv;
}

RationalMatrix solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw ContractError("solve: row count mismatch");
  const std::size_t n = a.cols();
  RationalMatrix augmented(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) augmented(i, n + j) = b(i, j);
  }
  if (row_reduce(augmented, n).size() != n) {
    throw ContractError("solve: coefficient matrix lacks full column rank");
  }
  for (std::size_t i = n; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (sgn(augmented(i, n + j)) != 0) {
        throw ContractError("solve: inconsistent system");
      }
    }
  }
  RationalMatrix x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = augmented(i, n + j);
  }
  return x;
}

bool SparseRowReducer::add_row(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseRow merged;
  for (auto& [col, value] : row) {
    if (!merged.empty() && merged.back().first == col) {
      merged.back().second += value;
    } else {
      merged.emplace_back(col, std::move(value));
    }
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });

  while (!merged.empty()) {
    const std::size_t lead = merged.front().first;
    const auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      const Rational scale = merged.front().second;
      for (auto& e : merged) e.second /= scale;
      pivots_.emplace(lead, std::move(merged));
      return true;
    }
    // merged -= merged[lead] * pivot, as a sorted sparse merge.
    const Rational factor = merged.front().second;
    const SparseRow& pivot = it->second;
    SparseRow next;
    next.reserve(merged.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < merged.size() || j < pivot.size()) {
      if (j == pivot.size() ||
          (i < merged.size() && merged[i].first < pivot[j].first)) {
        next.push_back(std::move(merged[i++]));
      } else if (i == merged.size() || pivot[j].first < merged[i].first) {
        next.emplace_back(pivot[j].first, -factor * pivot[j].second);
        ++j;
      } else {
        Rational value = merged[i].second - factor * pivot[j].second;
        if (sgn(value) != 0) next.emplace_back(merged[i].first, std::move(value));
        ++i;
        ++j;
      }
    }
    merged = std::move(next);
  }
  return false;
}

}  // namespace orbitnorm
