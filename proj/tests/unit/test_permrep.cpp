#include <gtest/gtest.h>

#include <set>

#include "dihedral/characters.hpp"
#include "dihedral/errors.hpp"
#include "dihedral/permrep.hpp"

using namespace dihedral;

TEST(ToPermutation, RotationN4) {
  EXPECT_EQ(to_permutation(Element::rotation(4)).image(), (std::vector<int>{2, 3, 4, 1}));
}

TEST(ToPermutation, ReflectionN4) {
  EXPECT_EQ(to_permutation(Element::reflection(4)).image(), (std::vector<int>{4, 3, 2, 1}));
}

TEST(ToPermutation, CR2AppliesR2ThenC) {
  const int n = 5;
  const Permutation r({2, 3, 4, 5, 1});
  const Permutation c({5, 4, 3, 2, 1});
  const Permutation expected = c.compose(r.compose(r));
  EXPECT_EQ(expected.image(), (std::vector<int>{3, 2, 1, 5, 4}));
  EXPECT_EQ(to_permutation(Element::reflection(n, 2)), expected);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({1, 1, 2}), ParameterError);
  EXPECT_THROW(Permutation({0, 1, 2}), ParameterError);
}

TEST(PermMatrix, RotationN4Reference) {
  const IntMatrix expected{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}};
  EXPECT_EQ(perm_matrix(Element::rotation(4)).entries(), expected);
}

TEST(PermMatrix, ReflectionN4IsCounteridentity) {
  const IntMatrix expected{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  EXPECT_EQ(perm_matrix(Element::reflection(4)).entries(), expected);
}

TEST(PermMatrix, IdentityN3) {
  EXPECT_EQ(perm_matrix(Element::identity(3)).entries(), IntMatrix::identity(3));
}

TEST(PermMatrix, RotationDiagonalStartsAtRowKPlusOne) {
  for (int k = 0; k < 6; ++k) EXPECT_EQ(perm_matrix(Element::rotation(6, k)).entries()(k, 0), 1);
}

TEST(Circulant, Examples) {
  const auto pr = perm_matrix(Element::rotation(4)).entries();
  const auto pc = perm_matrix(Element::reflection(4)).entries();
  EXPECT_TRUE(is_circulant(pr));
  EXPECT_FALSE(is_anticirculant(pr));
  EXPECT_TRUE(is_anticirculant(pc));
  EXPECT_FALSE(is_circulant(pc));
  const IntMatrix j(4, 4, 1);
  EXPECT_TRUE(is_circulant(j));
  EXPECT_TRUE(is_anticirculant(j));
  EXPECT_FALSE(is_circulant(IntMatrix(2, 3)));
}

class PermrepInvariants : public ::testing::TestWithParam<int> {};

TEST_P(PermrepInvariants, Homomorphism) {
  const int n = GetParam();
  for (const auto& a : elements(n))
    for (const auto& b : elements(n))
      ASSERT_EQ(perm_matrix(a).entries() * perm_matrix(b).entries(), perm_matrix(mul(a, b)).entries());
}

TEST_P(PermrepInvariants, RotationsCirculantReflectionsAnticirculant) {
  for (const auto& g : elements(GetParam())) {
    const auto p = perm_matrix(g).entries();
    EXPECT_EQ(is_circulant(p), !g.reflected()) << g.word();
    EXPECT_EQ(is_anticirculant(p), g.reflected()) << g.word();
  }
}

TEST_P(PermrepInvariants, LeftMultiplicationByPCSwapsRotationsAndReflections) {
  const int n = GetParam();
  const auto pc = perm_matrix(Element::reflection(n)).entries();
  std::set<std::vector<long long>> images, reflections;
  for (int k = 0; k < n; ++k) {
    images.insert((pc * perm_matrix(Element::rotation(n, k)).entries()).data());
    reflections.insert(perm_matrix(Element::reflection(n, k)).entries().data());
  }
  EXPECT_EQ(images, reflections);
}

TEST_P(PermrepInvariants, TraceCountsFixedPointsAndMatchesRho) {
  for (const auto& g : elements(GetParam())) {
    const auto p = perm_matrix(g).entries();
    EXPECT_EQ(p.trace(), to_permutation(g).fixed_points());
    EXPECT_EQ(p.trace(), rho_character(g)) << g.word();
  }
}

INSTANTIATE_TEST_SUITE_P(SmallN, PermrepInvariants, ::testing::Range(3, 9));
