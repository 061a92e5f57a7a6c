#include "orbitnorm/rational_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             int zero_percent) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> percent(0, 99);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (percent(rng) >= zero_percent) m(i, j) = Rational(entry(rng), 1 + percent(rng) % 4);
    }
  }
  return m;
}

TEST(RationalMatrix, Arithmetic) {
  const auto a = from_rows({{1, 2}, {3, 4}});
  const auto b = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, from_rows({{1, 3}, {4, 4}}));
  EXPECT_EQ(a - a, RationalMatrix(2, 2));
  EXPECT_EQ(a.transpose(), from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(power(b, 2), RationalMatrix::identity(2));
  EXPECT_TRUE(RationalMatrix(3, 2).is_zero());
  EXPECT_THROW(a * RationalMatrix(3, 3), ContractError);
}

TEST(RationalMatrix, RankAndPivots) {
  EXPECT_EQ(rank(from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})), 2u);
  EXPECT_EQ(pivot_columns(from_rows({{0, 1, 1}, {0, 2, 2}})), (std::vector<std::size_t>{1}));
  EXPECT_EQ(rank(RationalMatrix(4, 4)), 0u);
}

TEST(RationalMatrix, InverseAndSolve) {
  const auto a = from_rows({{2, 1}, {1, 1}});
  const auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(a * *inv, RationalMatrix::identity(2));
  EXPECT_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());

  const auto tall = from_rows({{1, 0}, {0, 1}, {1, 1}});
  const auto x = from_rows({{3}, {-2}});
  EXPECT_EQ(solve(tall, tall * x), x);
  EXPECT_THROW(solve(tall, from_rows({{1}, {1}, {0}})), ContractError);
  EXPECT_THROW(solve(from_rows({{1, 1}, {1, 1}}), from_rows({{1}, {1}})), ContractError);
}

TEST(RationalMatrix, ExactWithFractions) {
  RationalMatrix m(2, 2);
  m(0, 0) = Rational(1, 3);
  m(0, 1) = Rational(1, 6);
  m(1, 0) = Rational(2, 3);
  m(1, 1) = Rational(1, 3);
  EXPECT_EQ(rank(m), 1u);
}

TEST(SparseRowReducer, AgreesWithDenseRank) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 12;
    const std::size_t cols = 1 + rng() % 12;
    const auto m = random_matrix(rng, rows, cols, static_cast<int>(rng() % 90));
    SparseRowReducer reducer;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseRowReducer::SparseRow row;
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(m(i, j)) != 0) row.emplace_back(cols - 1 - j, m(i, j));  // unsorted
      }
      reducer.add_row(row);
    }
    ASSERT_EQ(reducer.rank(), rank(m)) << "trial " << trial;
  }
}

TEST(SparseRowReducer, MergesRepeatedColumns) {
  SparseRowReducer r;
  EXPECT_FALSE(r.add_row({{0, Rational(1)}, {0, Rational(-1)}}));
  EXPECT_TRUE(r.add_row({{2, Rational(1)}, {0, Rational(1)}, {2, Rational(1)}}));
  EXPECT_FALSE(r.add_row({{0, Rational(2)}, {2, Rational(4)}}));
  EXPECT_EQ(r.rank(), 1u);
}

}  // namespace
}  // namespace orbitnorm
