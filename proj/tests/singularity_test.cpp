#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "tropical/agreement.hpp"
#include "tropical/singularity.hpp"

using namespace tropical;
using testing_helpers::mat;
using testing_helpers::vec;

namespace {
const auto I2 = Matrix<MaxPlus>::identity(2);
const auto Z2 = mat<MaxPlus>({{"0", "0"}, {"0", "0"}});
const auto G3 = agreement::g3();
}  // namespace

TEST(Criteria, Examples) {
  EXPECT_FALSE(is_d_singular(I2));
  EXPECT_TRUE(is_d_singular(Z2));
  EXPECT_TRUE(is_d_singular(G3));
  EXPECT_TRUE(is_D_singular(Z2));
  EXPECT_FALSE(is_D_singular(G3));
  EXPECT_FALSE(is_D_singular(I2));
  EXPECT_THROW(is_d_singular(Matrix<MaxPlus>(2, 3)), NotSquare);
}

TEST(Definitional, RectangularShapes) {
  EXPECT_FALSE(is_definitionally_singular(mat<MaxPlus>({{"0", "-inf"}, {"-inf", "0"}, {"5", "5"}})));
  EXPECT_TRUE(is_definitionally_singular(mat<MaxPlus>({{"0", "1", "2"}, {"3", "4", "5"}})));
  EXPECT_TRUE(is_definitionally_singular(Z2));
  EXPECT_TRUE(is_definitionally_singular(mat<MaxPlus>({{"0", "0"}, {"1", "1"}, {"2", "2"}})));
}

TEST(Witness, AllZeroTwoByTwo) {
  const auto w = singular_witness(Z2);
  EXPECT_EQ(w.x, vec<MaxPlus>({"0", "0"}));
  EXPECT_EQ(w.a1, mat<MaxPlus>({{"0", "-inf"}, {"0", "-inf"}}));
  EXPECT_EQ(w.a2, mat<MaxPlus>({{"-inf", "0"}, {"-inf", "0"}}));
  EXPECT_TRUE(verify_singular_witness(Z2, w));
}

TEST(Witness, G3) {
  const auto w = singular_witness(G3);
  EXPECT_EQ(w.x, vec<MaxPlus>({"0", "0", "0"}));
  EXPECT_TRUE(verify_singular_witness(G3, w));
  EXPECT_TRUE(is_ghost_or_zero(cover_mat_vec<MaxPlus>(G3, w.x)));
}

TEST(Witness, RegularMatrixHasNone) { EXPECT_THROW(singular_witness(I2), PreconditionError); }

TEST(Witness, ZeroDeterminantThroughZeroBlock) {
  // det = 0̄ with no tie among finite permutations: rows 1 and 2 only reach column 1
  const auto a = mat<MaxPlus>({{"3", "-inf", "-inf"}, {"1", "-inf", "-inf"}, {"0", "2", "5"}});
  const auto w = singular_witness(a);
  EXPECT_TRUE(verify_singular_witness(a, w));
}

TEST(Witness, RectangularWide) {
  const auto a = mat<MaxPlus>({{"0", "1", "2"}, {"3", "-inf", "1/2"}});
  EXPECT_TRUE(verify_singular_witness(a, singular_witness(a)));
}

TEST(Witness, ZeroMatrix) {
  const Matrix<MaxPlus> a(2, 2);
  const auto w = singular_witness(a);
  EXPECT_TRUE(verify_singular_witness(a, w));
}

TEST(Witness, VerifierRejectsBadCertificates) {
  auto w = singular_witness(Z2);
  w.a1(0, 1) = MaxPlus(0);  // overlapping supports
  EXPECT_FALSE(verify_singular_witness(Z2, w));
  SingularWitness<MaxPlus> zero_x{vec<MaxPlus>({"-inf", "-inf"}), Z2, Matrix<MaxPlus>(2, 2)};
  EXPECT_FALSE(verify_singular_witness(Z2, zero_x));
  GmWitness<MaxPlus> overlap{vec<MaxPlus>({"0", "0"}), vec<MaxPlus>({"0", "-inf"})};
  EXPECT_FALSE(verify_gm_witness(Z2, overlap));
}

TEST(GmDependence, Examples) {
  const auto d = decide_gm_dependence(Z2);
  EXPECT_TRUE(d.dependent);
  EXPECT_EQ(d.basis, GmBasis::determinant);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(verify_gm_witness(Z2, *d.witness));
  EXPECT_FALSE(is_gm_dependent(G3));
  EXPECT_FALSE(is_gm_dependent(I2));
}

TEST(GmDependence, RectangularBases) {
  const auto wide = decide_gm_dependence(mat<MaxPlus>({{"0", "1", "2"}, {"3", "4", "5"}}));
  EXPECT_TRUE(wide.dependent);
  EXPECT_EQ(wide.basis, GmBasis::dimension);
  ASSERT_TRUE(wide.witness);

  const auto tall = mat<MaxPlus>({{"0", "0"}, {"1", "1"}, {"2", "2"}});
  const auto dt = decide_gm_dependence(tall);
  EXPECT_EQ(dt.basis, GmBasis::bounded_search);
  EXPECT_TRUE(dt.dependent);
  EXPECT_TRUE(verify_gm_witness(tall, *dt.witness));

  const auto regular = mat<MaxPlus>({{"0", "-inf"}, {"-inf", "0"}, {"5", "5"}});
  const auto dr = decide_gm_dependence(regular);
  EXPECT_EQ(dr.basis, GmBasis::bounded_search);
  EXPECT_FALSE(dr.dependent);
  EXPECT_GT(dr.candidates_searched, 0u);
}

TEST(Classify, Examples) {
  const auto i3 = classify(Matrix<MaxPlus>::identity(3));
  EXPECT_FALSE(i3.d_singular || i3.D_singular || i3.definitional_singular || i3.gm_dependent);
  EXPECT_FALSE(i3.witness || i3.gm_witness);

  const auto z = classify(Z2);
  EXPECT_TRUE(z.d_singular && z.D_singular && z.definitional_singular && z.gm_dependent);
  EXPECT_TRUE(z.witness && z.gm_witness);

  const auto g = classify(G3);
  EXPECT_TRUE(g.d_singular && g.definitional_singular);
  EXPECT_FALSE(g.D_singular || g.gm_dependent);
  EXPECT_TRUE(g.witness);
  EXPECT_FALSE(g.gm_witness);

  const auto r = classify(mat<MaxPlus>({{"2", "1"}, {"1", "2"}}));
  EXPECT_FALSE(r.d_singular);
  EXPECT_EQ(r.det.det, MaxPlus(4));

  EXPECT_THROW(classify(Matrix<MaxPlus>(2, 3)), NotSquare);
}

TEST(Classify, InvariantCheckCatchesInconsistentReports) {
  auto r = classify(G3);
  r.D_singular = true;
  EXPECT_THROW(check_report_invariants(G3, r), std::logic_error);
  auto s = classify(Z2);
  s.witness->x = vec<MaxPlus>({"0", "1"});
  EXPECT_THROW(check_report_invariants(Z2, s), std::logic_error);
}

TEST(Classify, MinPlusAndF1) {
  const auto m = mat<MinPlus>({{"0", "0"}, {"0", "0"}});
  const auto r = classify(m);
  EXPECT_TRUE(r.D_singular && r.gm_witness);
  const auto f = classify(mat<F1>({{"1", "1"}, {"0", "1"}}));
  EXPECT_FALSE(f.d_singular);
}

// Implication chain on order-4 matrices, where the oracles are too slow.
TEST(Classify, ImplicationChainOrderFour) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 300; ++k) {
    const auto a = random_matrix<MaxPlus>(rng, 4, 4);
    const auto r = classify(a);
    EXPECT_TRUE(!r.D_singular || r.d_singular);
    EXPECT_EQ(r.definitional_singular, r.d_singular);
    if (r.witness) {
      EXPECT_TRUE(verify_singular_witness(a, *r.witness));
    }
    if (r.D_singular) {
      ASSERT_TRUE(r.gm_witness.has_value());
      EXPECT_TRUE(verify_gm_witness(a, *r.gm_witness));
    }
  }
}
