#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tropical/agreement.hpp"
#include "tropical/rank.hpp"

using namespace tropical;
using testing_helpers::mat;
using testing_helpers::vec;

namespace {
using Family = std::vector<Vector<MaxPlus>>;
LinearForm<MaxPlus> form(std::initializer_list<const char*> c) { return {vec<MaxPlus>(c)}; }
}  // namespace

TEST(Kernel, Membership) {
  const auto l = form({"1", "2"});
  EXPECT_TRUE(kernel_membership(l, vec<MaxPlus>({"-1", "-2"})));
  EXPECT_FALSE(kernel_membership(l, vec<MaxPlus>({"0", "0"})));
  EXPECT_TRUE(kernel_membership(l, vec<MaxPlus>({"-inf", "-inf"})));
  EXPECT_FALSE(kernel_membership(form({"0", "-inf"}), vec<MaxPlus>({"0", "0"})));
  EXPECT_TRUE(kernel_membership(form({"0", "-inf"}), vec<MaxPlus>({"-inf", "4"})));
  EXPECT_THROW(kernel_membership(l, vec<MaxPlus>({"1"})), DimensionMismatch);
}

TEST(Kernel, Generators) {
  EXPECT_EQ(kernel_generators(form({"1", "2"})), (Family{vec<MaxPlus>({"-1", "-2"})}));
  EXPECT_EQ(kernel_generators(form({"0", "-inf"})), (Family{vec<MaxPlus>({"-inf", "0"})}));
  const auto gens = kernel_generators(form({"0", "1", "-inf"}));
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], vec<MaxPlus>({"0", "-1", "-inf"}));
  EXPECT_EQ(gens[1], vec<MaxPlus>({"-inf", "-inf", "0"}));
  for (const auto& g : gens) EXPECT_TRUE(kernel_membership(form({"0", "1", "-inf"}), g));
  EXPECT_TRUE(kernel_generators(form({"3"})).empty());
}

TEST(Span, Membership) {
  const auto g = mat<MaxPlus>({{"0", "-inf"}, {"1", "0"}});
  const auto in = span_membership(g, vec<MaxPlus>({"2", "3"}));
  EXPECT_TRUE(in.member);
  EXPECT_EQ(mat_vec(g, in.lambda), vec<MaxPlus>({"2", "3"}));
  EXPECT_FALSE(span_membership(mat<MaxPlus>({{"0"}, {"0"}}), vec<MaxPlus>({"0", "1"})).member);
  EXPECT_TRUE(span_membership(g, vec<MaxPlus>({"-inf", "-inf"})).member);
  EXPECT_THROW(span_membership(g, vec<MaxPlus>({"0"})), DimensionMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(tropical_rank(Matrix<MaxPlus>::identity(3)), 3u);
  EXPECT_EQ(tropical_rank(mat<MaxPlus>({{"0", "0"}, {"0", "0"}})), 1u);
  EXPECT_EQ(tropical_rank(agreement::g3()), 2u);
  EXPECT_EQ(tropical_rank(Matrix<MaxPlus>(2, 3)), 0u);
  EXPECT_EQ(tropical_rank(mat<MaxPlus>({{"0", "1", "2"}, {"3", "4", "6"}})), 2u);
  EXPECT_THROW(tropical_rank(Matrix<MaxPlus>(8, 8)), SizeLimit);
  EXPECT_EQ(tropical_rank(Matrix<MaxPlus>::identity(8), RankBudget{8}), 8u);
}

TEST(Families, RegularityAndDimension) {
  const auto e1 = vec<MaxPlus>({"0", "-inf"}), e2 = vec<MaxPlus>({"-inf", "0"}), ones = vec<MaxPlus>({"0", "0"});
  EXPECT_TRUE(is_regular_family(Family{e1, e2}));
  EXPECT_FALSE(is_regular_family(Family{ones, ones}));
  EXPECT_TRUE(is_regular_family(Family{}));
  EXPECT_TRUE(is_regular_family(Family{ones}));
  EXPECT_FALSE(is_regular_family(Family{vec<MaxPlus>({"-inf", "-inf"})}));

  const auto r = tropical_dimension(Family{ones, e1, ones});
  EXPECT_FALSE(r.is_regular);
  EXPECT_EQ(r.tropical_dimension, 2u);
  EXPECT_EQ(r.max_regular_subfamily, (std::vector<std::size_t>{0, 1}));
}

TEST(Families, CompleteToBasis) {
  const Family family{vec<MaxPlus>({"0", "0", "0"})};
  const auto basis = complete_to_tropical_basis(family, 3);
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[0], family[0]);
  EXPECT_TRUE(is_regular_family(basis));
  EXPECT_EQ(basis[1], vec<MaxPlus>({"-inf", "0", "-inf"}));
  EXPECT_EQ(basis[2], vec<MaxPlus>({"-inf", "-inf", "0"}));

  EXPECT_EQ(complete_to_tropical_basis(Family{}, 2), Matrix<MaxPlus>::identity(2).columns());
  EXPECT_THROW(complete_to_tropical_basis(Family{family[0], family[0]}, 3), PreconditionError);
  EXPECT_THROW(complete_to_tropical_basis(family, 2), DimensionMismatch);
}

TEST(Tker, Membership) {
  const auto g3 = agreement::g3();
  EXPECT_TRUE(tker_membership(g3, vec<MaxPlus>({"0", "0", "0"})));
  EXPECT_FALSE(tker_membership(Matrix<MaxPlus>::identity(2), vec<MaxPlus>({"0", "0"})));
  EXPECT_TRUE(tker_membership(Matrix<MaxPlus>::identity(2), vec<MaxPlus>({"-inf", "-inf"})));
}

TEST(Tker, DimensionExamples) {
  EXPECT_EQ(tker_dimension(Matrix<MaxPlus>::identity(2)).value, 0u);
  const auto z = tker_dimension(mat<MaxPlus>({{"0", "0"}, {"0", "0"}}));
  EXPECT_EQ(z.value, 1u);
  ASSERT_TRUE(z.evidence);
  EXPECT_EQ(z.evidence->size(), 1u);
  EXPECT_EQ(tker_dimension(agreement::g3()).value, 1u);
}

TEST(OrthogonalForms, Membership) {
  const Family family{vec<MaxPlus>({"-1", "-2"})};
  EXPECT_TRUE(orthogonal_form_membership(form({"1", "2"}), std::span<const Vector<MaxPlus>>(family.data(), family.size())));
  EXPECT_FALSE(orthogonal_form_membership(form({"0", "0"}), std::span<const Vector<MaxPlus>>(family.data(), family.size())));
}

TEST(WeakSpan, Separation) {
  const Family family{vec<MaxPlus>({"0", "0", "-inf"})};
  const auto sep = weak_span_separation(family, vec<MaxPlus>({"-inf", "-inf", "0"}));
  ASSERT_TRUE(sep);
  EXPECT_TRUE(orthogonal_form_membership(*sep, std::span<const Vector<MaxPlus>>(family.data(), family.size())));
  EXPECT_FALSE(kernel_membership(*sep, vec<MaxPlus>({"-inf", "-inf", "0"})));
  EXPECT_FALSE(weak_span_separation(family, vec<MaxPlus>({"1", "1", "-inf"})));
  // e2 is outside the submodule weakly generated by e1
  EXPECT_TRUE(weak_span_separation(Family{vec<MaxPlus>({"0", "-inf"})}, vec<MaxPlus>({"-inf", "0"})));
  EXPECT_FALSE(weak_span_separation(Family{vec<MaxPlus>({"0", "-inf"})}, vec<MaxPlus>({"3", "-inf"})));
}

TEST(RankTheorem, ConfirmedInstances) {
  EXPECT_TRUE(rank_theorem_check(Matrix<MaxPlus>::identity(2)));
  EXPECT_TRUE(rank_theorem_check(mat<MaxPlus>({{"0", "0"}, {"0", "0"}})));
  const auto r = rank_theorem_check_detailed(agreement::g3());
  EXPECT_EQ(r.status, RankTheoremStatus::confirmed);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.kernel_dimension, 1u);
  for (const auto& v : r.kernel_basis) EXPECT_TRUE(tker_membership(agreement::g3(), v));
}

// A rank-2 matrix whose kernel holds a regular pair; the identity
// dim Tker = n - rank does not hold for it.
TEST(RankTheorem, CounterexampleIsReportedAsRefuted) {
  const auto a = mat<MaxPlus>({{"-2", "0", "-2"}, {"-1", "2", "0"}, {"0", "0", "-2"}});
  EXPECT_EQ(tropical_rank(a), 2u);
  const Family family{vec<MaxPlus>({"0", "0", "2"}), vec<MaxPlus>({"0", "1", "3"})};
  for (const auto& v : family) EXPECT_TRUE(tker_membership(a, v));
  EXPECT_TRUE(is_regular_family(family));

  const auto r = rank_theorem_check_detailed(a);
  EXPECT_EQ(r.status, RankTheoremStatus::refuted);
  EXPECT_EQ(r.kernel_dimension, 2u);
  EXPECT_TRUE(is_regular_family(r.kernel_basis));
  for (const auto& v : r.kernel_basis) EXPECT_TRUE(tker_membership(a, v));
  EXPECT_FALSE(rank_theorem_check(a));
}

TEST(RankTheorem, StatusNames) {
  EXPECT_EQ(to_string(RankTheoremStatus::confirmed), "confirmed");
  EXPECT_EQ(to_string(RankTheoremStatus::refuted), "refuted");
  EXPECT_EQ(to_string(RankTheoremStatus::exhausted), "exhausted");
}
