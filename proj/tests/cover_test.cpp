#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tropical/cover.hpp"
#include "tropical/matrix.hpp"

using namespace tropical;
using C = Cover<MaxPlus>;

TEST(Cover, AdditionExamples) {
  EXPECT_EQ(cover_add(C::tangible(MaxPlus(3)), C::tangible(MaxPlus(3))), C::ghost(MaxPlus(3)));
  EXPECT_EQ(cover_add(C::tangible(MaxPlus(5)), C::ghost(MaxPlus(3))), C::tangible(MaxPlus(5)));
  EXPECT_EQ(cover_add(C::tangible(MaxPlus(3)), C::ghost(MaxPlus(5))), C::ghost(MaxPlus(5)));
  EXPECT_EQ(cover_add(C::tangible(MaxPlus(3)), C::ghost(MaxPlus(3))), C::ghost(MaxPlus(3)));
  EXPECT_EQ(cover_add(C::ghost(MaxPlus(1)), C::ghost(MaxPlus(4))), C::ghost(MaxPlus(4)));
  EXPECT_EQ(cover_add(C(), C()), C());
  EXPECT_FALSE(cover_add(C(), C()).is_ghost());
}

TEST(Cover, MultiplicationExamples) {
  EXPECT_EQ(cover_mul(C::tangible(MaxPlus(2)), C::ghost(MaxPlus(3))), C::ghost(MaxPlus(5)));
  EXPECT_EQ(cover_mul(C::tangible(MaxPlus(2)), C::tangible(MaxPlus(3))), C::tangible(MaxPlus(5)));
  EXPECT_EQ(cover_mul(C::ghost(MaxPlus(2)), C()), C());
}

TEST(Cover, GhostZeroIsNormalized) {
  const auto g = C::ghost(MaxPlus::zero());
  EXPECT_FALSE(g.is_ghost());
  EXPECT_EQ(g, C());
}

TEST(Cover, GhostOrZeroExamples) {
  EXPECT_TRUE(is_ghost_or_zero(std::vector<C>{C::ghost(MaxPlus(3)), C::ghost(MaxPlus(0))}));
  EXPECT_FALSE(is_ghost_or_zero(std::vector<C>{C::ghost(MaxPlus(3)), C::tangible(MaxPlus(2))}));
  EXPECT_TRUE(is_ghost_or_zero(std::vector<C>{C(), C::ghost(MaxPlus(1))}));
  EXPECT_TRUE(is_ghost_or_zero(std::vector<C>{}));
}

TEST(Cover, LiftedProductMagnitudes) {
  using testing_helpers::mat;
  using testing_helpers::vec;
  const auto a = mat<MaxPlus>({{"0", "2", "-inf"}, {"1", "1", "3"}, {"-inf", "-inf", "-inf"}});
  const auto x = vec<MaxPlus>({"2", "0", "-1"});
  const auto cp = cover_mat_vec<MaxPlus>(a, x);
  const auto p = mat_vec(a, x);
  ASSERT_EQ(cp.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(cp[i].magnitude(), p[i]);
  EXPECT_TRUE(cp[0].is_ghost());   // 0+2 = 2+0
  EXPECT_FALSE(cp[1].is_ghost());  // 1+2 = 3 is the unique maximum
  EXPECT_TRUE(cp[2].is_zero());
}

TEST(Cover, HatIsAnIsomorphismOntoGhosts) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const MaxPlus x(a), y(b);
      EXPECT_EQ(hat(add(x, y)), cover_add(hat(x), hat(y)));
      EXPECT_EQ(hat(mul(x, y)), cover_mul(hat(x), hat(y)));
    }
  EXPECT_EQ(hat(MaxPlus::zero()), C());
}
