#include "orbitnorm/matrix_oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "orbitnorm/errors.hpp"
#include "test_oracles.hpp"

namespace orbitnorm {
namespace {

constexpr FormType kO = FormType::Orthogonal;
constexpr FormType kSp = FormType::Symplectic;

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Upper Jordan matrix with blocks of the given sizes.
RationalMatrix jordan_matrix(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) n += b;
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t offset = 0;
  for (int b : blocks) {
    for (int i = 0; i + 1 < b; ++i) m(offset + i, offset + i + 1) = 1;
    offset += static_cast<std::size_t>(b);
  }
  return m;
}

TEST(BuildNilpotentModel, Examples) {
  const auto m22 = build_nilpotent_model(Partition{2, 2}, kO);
  EXPECT_EQ(m22.dim, 4);
  EXPECT_TRUE(model_violations(m22).empty());
  EXPECT_EQ(jordan_type(m22.nilpotent), (Partition{2, 2}));

  const auto zero = build_nilpotent_model(Partition{1, 1, 1}, kO);
  EXPECT_TRUE(zero.nilpotent.is_zero());
  EXPECT_EQ(zero.gram, RationalMatrix::identity(3));

  const auto two = build_nilpotent_model(Partition{2}, kSp);
  EXPECT_EQ(two.gram, from_rows({{0, 1}, {-1, 0}}));
  EXPECT_EQ(two.nilpotent, from_rows({{0, 0}, {1, 0}}));
  EXPECT_TRUE(model_violations(two).empty());
}

TEST(BuildNilpotentModel, Errors) {
  EXPECT_THROW(build_nilpotent_model(Partition{3, 1}, kSp), ContractError);
  EXPECT_THROW(build_nilpotent_model(Partition(std::vector<int>(25, 1)), kO), CapacityError);
  EXPECT_THROW(build_nilpotent_model(Partition{5, 5}, kO, 8), CapacityError);
}

TEST(BuildNilpotentModel, InvariantsUpTo12) {
  for (int n = 0; n <= 12; ++n) {
    for (FormType eps : {kO, kSp}) {
      for (const auto& d : enumerate_eps_diagrams(n, eps)) {
        const auto m = build_nilpotent_model(d.partition, eps);
        ASSERT_TRUE(model_violations(m).empty()) << d.partition.to_string();
        ASSERT_EQ(jordan_type(m.nilpotent), d.partition);
      }
    }
  }
}

TEST(ModelViolations, DetectsBrokenModels) {
  auto m = build_nilpotent_model(Partition{2}, kSp);
  m.gram(0, 1) = 2;
  EXPECT_FALSE(model_violations(m).empty());
  auto n = build_nilpotent_model(Partition{2, 2}, kO);
  n.nilpotent(0, 0) = 1;
  EXPECT_FALSE(model_violations(n).empty());
}

TEST(JordanType, Examples) {
  EXPECT_EQ(jordan_type(jordan_matrix({3, 1})), (Partition{3, 1}));
  EXPECT_EQ(jordan_type(RationalMatrix(4, 4)), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(jordan_type(RationalMatrix(0, 0)), Partition{});
  EXPECT_THROW(jordan_type(RationalMatrix::identity(2)), ContractError);
  EXPECT_THROW(jordan_type(RationalMatrix(2, 3)), ContractError);
}

TEST(JordanType, ConjugationInvariant) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-2, 2);
  const RationalMatrix d = build_nilpotent_model(Partition{4, 2, 2}, kSp).nilpotent;
  for (int trial = 0; trial < 5; ++trial) {
    RationalMatrix g(8, 8);
    std::optional<RationalMatrix> g_inv;
    do {
      for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) g(i, j) = Rational(entry(rng), 1 + (rng() % 3));
      }
      g_inv = inverse(g);
    } while (!g_inv);
    EXPECT_EQ(jordan_type(g * d * *g_inv), (Partition{4, 2, 2}));
  }
}

TEST(AlgebraDim, Values) {
  EXPECT_EQ(algebra_dim(8, kSp), 36);
  EXPECT_EQ(algebra_dim(11, kO), 55);
  EXPECT_EQ(algebra_dim(0, kO), 0);
  EXPECT_THROW(algebra_dim(3, kSp), ContractError);
}

TEST(CentralizerDim, Examples) {
  EXPECT_EQ(centralizer_dim(build_nilpotent_model(Partition{1, 1}, kSp)), 3);
  // Y = [[a,b],[c,-a]] commuting with D = [[0,0],[1,0]] forces a = b = 0.
  EXPECT_EQ(centralizer_dim(build_nilpotent_model(Partition{2}, kSp)), 1);
  EXPECT_EQ(centralizer_dim(build_nilpotent_model(Partition{2, 1, 1}, kSp)), 6);
}

TEST(OrbitDim, Examples) {
  for (FormType eps : {kO, kSp}) {
    EXPECT_EQ(orbit_dim(Partition(std::vector<int>(6, 1)), eps), 0);
  }
  EXPECT_EQ(orbit_dim(Partition{2, 1, 1}, kSp), 4);
  EXPECT_EQ(orbit_dim(Partition{2, 2, 1}, kO), 4);
}

TEST(OrbitDim, MatchesClosedFormUpTo12) {
  for (int n = 0; n <= 12; ++n) {
    for (FormType eps : {kO, kSp}) {
      for (const auto& d : enumerate_eps_diagrams(n, eps)) {
        ASSERT_EQ(orbit_dim(d.partition, eps),
                  testing::closed_form_orbit_dim(d.partition.parts(), sign(eps)))
            << d.partition.to_string() << " eps " << to_string(eps);
      }
    }
  }
}

TEST(CodimOracle, Examples) {
  EXPECT_EQ(codim_oracle(DegenPair(kSp, Partition{4, 2, 2}, Partition{6, 1, 1})), 2);
  EXPECT_EQ(codim_oracle(DegenPair(kO, Partition{1, 1, 1, 1}, Partition{2, 2})), 2);
  EXPECT_EQ(codim_oracle(DegenPair(kO, Partition{3, 1}, Partition{3, 1})), 0);
}

TEST(CodimOracle, PositiveEvenAndAdditiveUpTo8) {
  for (int n = 1; n <= 8; ++n) {
    for (FormType eps : {kO, kSp}) {
      const auto ds = enumerate_eps_diagrams(n, eps);
      for (const auto& top : ds) {
        for (const auto& mid : degenerations(top)) {
          const int upper = codim_oracle(DegenPair(eps, mid.partition, top.partition));
          ASSERT_GT(upper, 0);
          ASSERT_EQ(upper % 2, 0);
          for (const auto& bottom : degenerations(mid)) {
            ASSERT_EQ(codim_oracle(DegenPair(eps, bottom.partition, top.partition)),
                      upper + codim_oracle(DegenPair(eps, bottom.partition, mid.partition)));
          }
        }
      }
    }
  }
}

TEST(RestrictToImage, Examples) {
  const auto six = restrict_to_image(build_nilpotent_model(Partition{6, 1, 1}, kSp));
  EXPECT_EQ(six.eps, kO);
  EXPECT_EQ(jordan_type(six.nilpotent), Partition{5});
  EXPECT_TRUE(model_violations(six).empty());

  const auto twos = restrict_to_image(build_nilpotent_model(Partition{2, 2}, kO));
  EXPECT_EQ(twos.eps, kSp);
  EXPECT_EQ(twos.dim, 2);
  EXPECT_EQ(jordan_type(twos.nilpotent), (Partition{1, 1}));
  EXPECT_TRUE(model_violations(twos).empty());

  const auto three = restrict_to_image(build_nilpotent_model(Partition{3, 1}, kO));
  EXPECT_EQ(three.eps, kSp);
  EXPECT_EQ(jordan_type(three.nilpotent), Partition{2});

  EXPECT_THROW(restrict_to_image(build_nilpotent_model(Partition{1, 1}, kSp)), ContractError);
}

TEST(RestrictToImage, ErasesFirstColumnUpTo12) {
  for (int n = 1; n <= 12; ++n) {
    for (FormType eps : {kO, kSp}) {
      for (const auto& d : enumerate_eps_diagrams(n, eps)) {
        if (d.partition.largest() == 1) continue;
        const auto image = restrict_to_image(build_nilpotent_model(d.partition, eps));
        ASSERT_EQ(image.eps, flip(eps));
        ASSERT_TRUE(model_violations(image).empty()) << d.partition.to_string();
        ASSERT_EQ(jordan_type(image.nilpotent), erase_first_column(d.partition));
      }
    }
  }
}

}  // namespace
}  // namespace orbitnorm
