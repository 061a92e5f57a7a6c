#include "orbitnorm/classification.hpp"

#include <gtest/gtest.h>

#include "orbitnorm/errors.hpp"

namespace orbitnorm {
namespace {

constexpr FormType kO = FormType::Orthogonal;
constexpr FormType kSp = FormType::Symplectic;

TEST(ClassifyCore, TableExamples) {
  EXPECT_EQ(classify_core(DegenPair(kO, Partition{1, 1, 1, 1}, Partition{2, 2})),
            make_type(Family::E, 1));
  EXPECT_EQ(classify_core(DegenPair(kO, Partition{3, 1, 1}, Partition{5})),
            make_type(Family::C, 2));
  EXPECT_EQ(classify_core(DegenPair(kSp, Partition{2, 2, 2}, Partition{3, 3})),
            make_type(Family::D, 1));
  EXPECT_EQ(classify_core(DegenPair(kSp, Partition{1, 1}, Partition{2})), make_type(Family::A));
  EXPECT_EQ(classify_core(DegenPair(kSp, Partition{2, 2}, Partition{4})),
            make_type(Family::B, 2));
  EXPECT_EQ(classify_core(DegenPair(kO, Partition{1, 1, 1, 1, 1}, Partition{2, 2, 1})),
            make_type(Family::F, 2));
}

TEST(ClassifyCore, TieBreaks) {
  // g at n=1 has the shape of a; h at n=2 has the shape of e at n=1.
  EXPECT_EQ(classify_core(instantiate(make_type(Family::G, 1))).family, Family::A);
  EXPECT_THROW(make_type(Family::H, 2), ContractError);
  EXPECT_EQ(instantiate(make_type(Family::E, 1)),
            DegenPair(kO, Partition{1, 1, 1, 1}, Partition{2, 2}));
}

TEST(ClassifyCore, RejectsNonTableShapes) {
  // Irreducible but not minimal: [2,2] lies in between.
  EXPECT_THROW(classify_core(DegenPair(kSp, Partition{1, 1, 1, 1}, Partition{4})),
               NotMinimalIrreducible);
  EXPECT_THROW(classify_core(DegenPair(kO, Partition{1, 1, 1}, Partition{1, 1, 1})),
               NotMinimalIrreducible);
}

TEST(TableCodim, Values) {
  EXPECT_EQ(table_codim(make_type(Family::B, 5)), 2);
  EXPECT_EQ(table_codim(make_type(Family::G, 3)), 6);
  EXPECT_EQ(table_codim(make_type(Family::G, 1)), 2);
  EXPECT_EQ(table_codim(make_type(Family::F, 2)), 6);
  EXPECT_EQ(table_codim(make_type(Family::H, 3)), 10);
  EXPECT_EQ(table_codim(make_type(Family::A)), 2);
}

TEST(MakeType, ParameterRanges) {
  EXPECT_THROW(make_type(Family::A, 1), ContractError);
  EXPECT_THROW(make_type(Family::B, 1), ContractError);
  EXPECT_THROW(make_type(Family::C), ContractError);
  EXPECT_THROW(make_type(Family::C, 0), ContractError);
  EXPECT_THROW(make_type(Family::F, 1), ContractError);
  EXPECT_EQ(make_type(Family::D, 3).algebra_label, "sp_14");
  EXPECT_EQ(make_type(Family::E, 2).algebra_label, "so_8");
  EXPECT_EQ(make_type(Family::A).algebra_label, "sp_2");
}

TEST(FamilyLetter, RoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(family_from_letter(family_letter(f)), f);
  EXPECT_EQ(family_letter(Family::E), 'e');
  EXPECT_THROW(family_from_letter('z'), ParseError);
}

TEST(ClassifyCore, InstantiationRoundTrip) {
  for (Family f : kAllFamilies) {
    const auto lowest = min_parameter(f);
    const int first = lowest.value_or(0);
    const int last = lowest ? first + 6 : 0;
    for (int n = first; n <= last; ++n) {
      const DegenType t = make_type(f, lowest ? std::optional<int>(n) : std::nullopt);
      const DegenPair shape = instantiate(t);
      EXPECT_TRUE(is_irreducible(shape));
      const DegenType back = classify_core(shape);
      if (f == Family::G && n == 1) {
        EXPECT_EQ(back, make_type(Family::A));
      } else {
        EXPECT_EQ(back, t) << family_letter(f) << " n=" << n;
      }
    }
  }
}

TEST(ClassifyCore, CodimTwoFamilies) {
  for (Family f : kAllFamilies) {
    const auto lowest = min_parameter(f);
    for (int n = lowest.value_or(0); n <= lowest.value_or(0) + 6; ++n) {
      const DegenType t = make_type(f, lowest ? std::optional<int>(n) : std::nullopt);
      const bool codim_two_family = f <= Family::E || (f == Family::G && n == 1);
      EXPECT_EQ(table_codim(t) == 2, codim_two_family) << family_letter(f) << n;
      if (!lowest) break;
    }
  }
}

TEST(ClassifyMinimalDegeneration, Examples) {
  const auto e = classify_minimal_degeneration(
      DegenPair(kO, Partition{7, 1, 1, 1, 1}, Partition{7, 2, 2}));
  EXPECT_EQ(e.reduction.core, DegenPair(kO, Partition{1, 1, 1, 1}, Partition{2, 2}));
  EXPECT_EQ(e.type, make_type(Family::E, 1));
  EXPECT_EQ(table_codim(e.type), 2);

  const auto c = classify_minimal_degeneration(
      DegenPair(kSp, Partition{4, 2, 2}, Partition{6, 1, 1}));
  EXPECT_EQ(c.reduction.core, DegenPair(kO, Partition{3, 1, 1}, Partition{5}));
  EXPECT_EQ(c.type, make_type(Family::C, 2));

  const DegenPair b(kSp, Partition{6, 2}, Partition{8});
  const auto bt = classify_minimal_degeneration(b);
  EXPECT_EQ(bt.reduction.core, b);
  EXPECT_EQ(bt.type, make_type(Family::B, 4));
  EXPECT_EQ(table_codim(bt.type), 2);
}

TEST(ClassifyMinimalDegeneration, ExhaustiveUpTo14) {
  for (int n = 1; n <= 14; ++n) {
    for (FormType eps : {kO, kSp}) {
      for (const auto& eta : enumerate_eps_diagrams(n, eps)) {
        for (const auto& pair : minimal_degenerations(eta)) {
          ASSERT_NO_THROW(classify_minimal_degeneration(pair))
              << pair.bottom().to_string() << " < " << pair.top().to_string();
        }
      }
    }
  }
}

TEST(ClassifyEdges, AnnotatesHasse) {
  const PosetGraph g = classify_edges(hasse(4, kO));
  bool found = false;
  for (const auto& e : g.edges) {
    ASSERT_TRUE(e.family && e.codim);
    if (e.top == Partition{2, 2} && e.bottom == Partition{1, 1, 1, 1}) {
      EXPECT_EQ(*e.family, 'e');
      EXPECT_EQ(*e.codim, 2);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace orbitnorm
