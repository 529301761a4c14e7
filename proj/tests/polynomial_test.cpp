#include <gtest/gtest.h>

#include <random>

#include "tropical/agreement.hpp"
#include "tropical/polynomial.hpp"

using namespace tropical;

namespace {
using P = Polynomial<MaxPlus>;
P poly(std::initializer_list<std::pair<const std::size_t, MaxPlus>> c) { return P(P::Coefficients(c)); }
}  // namespace

TEST(Polynomial, ZeroCoefficientsDropped) {
  const auto p = poly({{0, MaxPlus(1)}, {3, MaxPlus()}});
  EXPECT_EQ(p.degree(), 0u);
  EXPECT_EQ(p.coefficients().size(), 1u);
  EXPECT_TRUE(P().is_zero());
}

TEST(Polynomial, Arithmetic) {
  const auto x = P::monomial(1);
  const auto p = poly_add(x, P::constant(MaxPlus(3)));
  EXPECT_EQ(poly_mul(p, p), poly({{0, MaxPlus(6)}, {1, MaxPlus(3)}, {2, MaxPlus(0)}}));
  EXPECT_EQ(poly_pow(p, 0), P::constant(MaxPlus::one()));
  EXPECT_EQ(poly_eval(p, MaxPlus(5)), MaxPlus(5));
  EXPECT_EQ(poly_eval(p, MaxPlus(1)), MaxPlus(3));
}

// Formal Frobenius fails: (X ⊕ 3)² has the middle term 3X, which x² ⊕ 6 lacks,
// yet both agree as functions.
TEST(Polynomial, FrobeniusHoldsAsFunctionsOnly) {
  const auto p = poly_add(P::monomial(1), P::constant(MaxPlus(3)));
  const auto sq = poly_pow(p, 2);
  const auto frob = poly_add(P::monomial(2), P::constant(MaxPlus(6)));
  EXPECT_NE(sq, frob);
  for (int t = -10; t <= 10; ++t) EXPECT_EQ(poly_eval(sq, MaxPlus(t)), poly_eval(frob, MaxPlus(t)));
}

TEST(Roots, Examples) {
  EXPECT_EQ(roots(poly({{0, MaxPlus(4)}, {2, MaxPlus(0)}})), (std::vector{Root<MaxPlus>{MaxPlus(2), 2}}));
  EXPECT_EQ(roots(P::monomial(1)), (std::vector{Root<MaxPlus>{MaxPlus::zero(), 1}}));
  EXPECT_EQ(roots(poly({{0, MaxPlus(3)}, {1, MaxPlus(0)}})), (std::vector{Root<MaxPlus>{MaxPlus(3), 1}}));
  EXPECT_EQ(roots(poly({{0, MaxPlus(4)}, {1, MaxPlus(3)}, {2, MaxPlus(0)}})),
            (std::vector{Root<MaxPlus>{MaxPlus(3), 1}, Root<MaxPlus>{MaxPlus(1), 1}}));
  EXPECT_TRUE(roots(P::constant(MaxPlus(7))).empty());
  EXPECT_THROW(roots(P()), DomainError);
}

TEST(Roots, RationalSlopesAndZeroRoot) {
  // X³ ⊕ 1X²: root 1 once and 0̄ twice
  const auto r = roots(poly({{2, MaxPlus(1)}, {3, MaxPlus(0)}}));
  EXPECT_EQ(r, (std::vector{Root<MaxPlus>{MaxPlus(1), 1}, Root<MaxPlus>{MaxPlus::zero(), 2}}));
  // 2X² ⊕ 1: root -1/2 of multiplicity 2
  EXPECT_EQ(roots(poly({{0, MaxPlus(1)}, {2, MaxPlus(2)}})),
            (std::vector{Root<MaxPlus>{MaxPlus(Rational(-1, 2)), 2}}));
}

TEST(Roots, MinPlus) {
  using Q = Polynomial<MinPlus>;
  const Q p(Q::Coefficients{{0, MinPlus(Rational(4))}, {1, MinPlus(Rational(3))}, {2, MinPlus(Rational(0))}});
  // min(4, 3 + x, 2x) switches at x = 2 only
  const auto r = roots(p);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].value, MinPlus(Rational(2)));
  EXPECT_EQ(r[0].multiplicity, 2u);
  EXPECT_TRUE(is_root(p, MinPlus(Rational(2))));
}

TEST(Roots, AreRootsAndMultiplicitiesSumToDegree) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coeff(-6, 6), deg(1, 6), drop(0, 3);
  for (int k = 0; k < 400; ++k) {
    P::Coefficients c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
      if (i == d || drop(rng) != 0) c.emplace(i, MaxPlus(coeff(rng)));
    const P p(c);
    std::size_t total = 0;
    for (const auto& r : roots(p)) {
      EXPECT_TRUE(is_root(p, r.value));
      total += r.multiplicity;
    }
    EXPECT_EQ(total, p.degree());
  }
}

TEST(IsRoot, Examples) {
  const auto p = poly({{0, MaxPlus(4)}, {2, MaxPlus(0)}});
  EXPECT_TRUE(is_root(p, MaxPlus(2)));
  EXPECT_FALSE(is_root(p, MaxPlus(3)));
  EXPECT_FALSE(is_root(p, MaxPlus::zero()));
  EXPECT_TRUE(is_root(P::monomial(1), MaxPlus::zero()));
  EXPECT_TRUE(is_root(P(), MaxPlus(1)));
}

TEST(EvalCover, GhostExactlyAtRoots) {
  const auto p = poly({{0, MaxPlus(4)}, {2, MaxPlus(0)}});
  EXPECT_EQ(eval_cover(p, MaxPlus(2)), Cover<MaxPlus>::ghost(MaxPlus(4)));
  EXPECT_EQ(eval_cover(p, MaxPlus(3)), Cover<MaxPlus>::tangible(MaxPlus(6)));
  EXPECT_EQ(eval_cover(p, MaxPlus(0)), Cover<MaxPlus>::tangible(MaxPlus(4)));
  EXPECT_EQ(eval_cover(P::monomial(1), MaxPlus::zero()), Cover<MaxPlus>());
  for (int t = -8; t <= 8; ++t) {
    const auto v = eval_cover(p, MaxPlus(t));
    EXPECT_EQ(v.is_ghost() || v.is_zero(), is_root(p, MaxPlus(t)));
    EXPECT_EQ(v.magnitude(), poly_eval(p, MaxPlus(t)));
  }
}
