#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "tropical/agreement.hpp"
#include "tropical/matrix.hpp"

using namespace tropical;
using testing_helpers::mat;
using testing_helpers::vec;

TEST(MatrixAlgebra, Examples) {
  const auto i2 = Matrix<MaxPlus>::identity(2);
  EXPECT_EQ(i2, mat<MaxPlus>({{"0", "-inf"}, {"-inf", "0"}}));
  EXPECT_EQ(mat_vec(i2, vec<MaxPlus>({"3", "7"})), vec<MaxPlus>({"3", "7"}));
  EXPECT_EQ(mat_vec(mat<MaxPlus>({{"0", "0"}, {"0", "0"}}), vec<MaxPlus>({"3", "7"})), vec<MaxPlus>({"7", "7"}));
  const auto a = mat<MaxPlus>({{"1", "2", "3"}, {"-inf", "0", "1/2"}});
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(transpose(a)(2, 1), MaxPlus(Rational(1, 2)));
  EXPECT_EQ(mat_mul(a, transpose(a)), mat<MaxPlus>({{"6", "7/2"}, {"7/2", "1"}}));
  EXPECT_THROW(mat_mul(a, a), DimensionMismatch);
  EXPECT_THROW(mat_vec(a, vec<MaxPlus>({"1"})), DimensionMismatch);
}

TEST(MatrixAlgebra, Submatrix) {
  const auto a = mat<MaxPlus>({{"1", "2", "3"}, {"4", "5", "6"}, {"7", "8", "9"}});
  const std::vector<std::size_t> rows{0, 2}, cols{1, 2};
  EXPECT_EQ(a.submatrix(rows, cols), mat<MaxPlus>({{"2", "3"}, {"8", "9"}}));
}

TEST(Determinant, Examples) {
  const auto i2 = det_report(Matrix<MaxPlus>::identity(2));
  EXPECT_EQ(i2.det, MaxPlus(0));
  EXPECT_EQ(i2.det_plus, MaxPlus(0));
  EXPECT_TRUE(i2.det_minus.is_zero());
  ASSERT_EQ(i2.optimal_even.size(), 1u);
  EXPECT_TRUE(i2.optimal_odd.empty());

  const auto z = det_report(mat<MaxPlus>({{"0", "0"}, {"0", "0"}}));
  EXPECT_EQ(z.det_plus, MaxPlus(0));
  EXPECT_EQ(z.det_minus, MaxPlus(0));
  EXPECT_EQ(z.optimal_count(), 2u);

  const auto r = det_report(mat<MaxPlus>({{"2", "1"}, {"1", "2"}}));
  EXPECT_EQ(r.det, MaxPlus(4));
  EXPECT_EQ(r.det_plus, MaxPlus(4));
  EXPECT_EQ(r.det_minus, MaxPlus(2));
  EXPECT_EQ(r.optimal_count(), 1u);
}

TEST(Determinant, G3Census) {
  const auto r = det_report(agreement::g3());
  EXPECT_EQ(r.det_plus, MaxPlus(0));
  EXPECT_TRUE(r.det_minus.is_zero());
  EXPECT_EQ(r.optimal_even.size(), 2u);
  for (const auto& p : r.optimal_even) EXPECT_EQ(permutation_weight(agreement::g3(), std::span<const std::size_t>(p.image)), r.det);
}

TEST(Determinant, Errors) {
  EXPECT_THROW(det_report(Matrix<MaxPlus>(2, 3)), NotSquare);
  EXPECT_THROW(det_report(Matrix<MaxPlus>(10, 10)), SizeLimit);
  EXPECT_THROW(det_report(Matrix<MaxPlus>(4, 4), {.enumeration_bound = 3}), SizeLimit);
  EXPECT_THROW(det_value_fast(Matrix<MaxPlus>(2, 3)), NotSquare);
}

TEST(Determinant, ParityMatchesCycleStructure) {
  const std::vector<std::size_t> id{0, 1, 2}, swap{1, 0, 2}, cycle{1, 2, 0};
  EXPECT_EQ(parity_of(id), Parity::even);
  EXPECT_EQ(parity_of(swap), Parity::odd);
  EXPECT_EQ(parity_of(cycle), Parity::even);
}

TEST(Determinant, ParallelCensusIsDeterministic) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const auto a = random_matrix<MaxPlus>(rng, 7, 7, RandomEntries{-1, 1, 0.2});
    const auto s = det_report(a), p = det_report(a, {.enumeration_bound = 9, .parallel = true});
    EXPECT_EQ(s.det_plus, p.det_plus);
    EXPECT_EQ(s.det_minus, p.det_minus);
    ASSERT_EQ(s.optimal_even.size(), p.optimal_even.size());
    ASSERT_EQ(s.optimal_odd.size(), p.optimal_odd.size());
    for (std::size_t i = 0; i < s.optimal_even.size(); ++i) EXPECT_EQ(s.optimal_even[i].image, p.optimal_even[i].image);
  }
}

TEST(Determinant, TransposeInvariance) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + k % 5;
    const auto a = random_matrix<MaxPlus>(rng, n, n);
    const auto r = det_report(a), t = det_report(transpose(a));
    EXPECT_EQ(r.det_plus, t.det_plus);
    EXPECT_EQ(r.det_minus, t.det_minus);
  }
}

TEST(FastDeterminant, Examples) {
  EXPECT_EQ(det_value_fast(mat<MaxPlus>({{"2", "1"}, {"1", "2"}})), MaxPlus(4));
  EXPECT_TRUE(det_value_fast(mat<MaxPlus>({{"-inf", "-inf"}, {"1", "2"}})).is_zero());
  EXPECT_EQ(det_value_fast(Matrix<MaxPlus>(0, 0)), MaxPlus::one());
  const auto m = mat<MinPlus>({{"2", "1"}, {"1", "2"}});
  EXPECT_EQ(det_value_fast(m), MinPlus(Rational(2)));
  EXPECT_EQ(det_value_fast(m), det_report(m).det);
  EXPECT_EQ(det_value_fast(mat<F1>({{"1", "0"}, {"0", "1"}})), F1::one());
}

TEST(FastDeterminant, AgreesOnLargerRandomMatrices) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 40; ++k) {
    const auto a = random_matrix<MaxPlus>(rng, 8, 8, RandomEntries{-20, 20, 0.5});
    EXPECT_EQ(det_value_fast(a), det_report(a).det);
  }
}

TEST(Monomial, Examples) {
  const auto p = mat<F1>({{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}});
  EXPECT_TRUE(is_monomial(p));
  EXPECT_EQ(mat_mul(p, monomial_inverse(p)), Matrix<F1>::identity(3));

  const auto d = mat<MaxPlus>({{"3", "-inf"}, {"-inf", "5"}});
  EXPECT_EQ(monomial_inverse(d), mat<MaxPlus>({{"-3", "-inf"}, {"-inf", "-5"}}));
  EXPECT_EQ(mat_mul(d, monomial_inverse(d)), Matrix<MaxPlus>::identity(2));

  const auto u = mat<MaxPlus>({{"0", "0"}, {"-inf", "0"}});
  EXPECT_FALSE(is_monomial(u));
  EXPECT_THROW(monomial_inverse(u), NotInvertible);
  EXPECT_FALSE(is_monomial(Matrix<MaxPlus>(2, 3)));
}

TEST(Monomial, Domination) {
  const auto a = mat<MaxPlus>({{"2", "1"}, {"1", "2"}});
  const auto s = dominates_monomial(a);
  ASSERT_TRUE(s);
  EXPECT_TRUE(is_monomial(*s));
  EXPECT_TRUE(dominates(a, *s));
  EXPECT_FALSE(dominates_monomial(mat<MaxPlus>({{"-inf", "-inf"}, {"1", "2"}})));
  EXPECT_EQ(*dominates_monomial(Matrix<MaxPlus>::identity(3)), Matrix<MaxPlus>::identity(3));
}
